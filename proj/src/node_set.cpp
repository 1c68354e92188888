#include "chaincut/node_set.hpp"

#include <algorithm>
#include <bit>

namespace chaincut {

NodeSet::NodeSet(std::initializer_list<NodeId> nodes) {
  for (NodeId v : nodes) insert(v);
}

NodeSet::NodeSet(const std::vector<NodeId>& nodes) {
  for (NodeId v : nodes) insert(v);
}

NodeSet NodeSet::all(std::size_t node_count) {
  NodeSet s;
  s.words_.assign((node_count + 63) / 64, ~std::uint64_t{0});
  if (node_count % 64 != 0) s.words_.back() = (std::uint64_t{1} << (node_count % 64)) - 1;
  s.trim();
  return s;
}

void NodeSet::insert(NodeId v) {
  const std::size_t w = v / 64;
  if (words_.size() <= w) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (v % 64);
}

void NodeSet::erase(NodeId v) {
  const std::size_t w = v / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (v % 64));
  trim();
}

bool NodeSet::contains(NodeId v) const {
  const std::size_t w = v / 64;
  return w < words_.size() && (words_[w] >> (v % 64) & 1U) != 0;
}

std::size_t NodeSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t NodeSet::extent() const {
  if (words_.empty()) return 0;
  return (words_.size() - 1) * 64 + (64 - static_cast<std::size_t>(std::countl_zero(words_.back())));
}

std::vector<NodeId> NodeSet::nodes() const {
  std::vector<NodeId> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<NodeId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

NodeSet NodeSet::operator|(const NodeSet& other) const {
  NodeSet r = words_.size() >= other.words_.size() ? *this : other;
  const auto& small = words_.size() >= other.words_.size() ? other.words_ : words_;
  for (std::size_t i = 0; i < small.size(); ++i) r.words_[i] |= small[i];
  return r;
}

NodeSet NodeSet::operator&(const NodeSet& other) const {
  NodeSet r;
  r.words_.resize(std::min(words_.size(), other.words_.size()));
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
  r.trim();
  return r;
}

NodeSet NodeSet::operator-(const NodeSet& other) const {
  NodeSet r = *this;
  for (std::size_t i = 0; i < std::min(r.words_.size(), other.words_.size()); ++i) {
    r.words_[i] &= ~other.words_[i];
  }
  r.trim();
  return r;
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~o) != 0) return false;
  }
  return true;
}

bool NodeSet::intersects(const NodeSet& other) const {
  for (std::size_t i = 0; i < std::min(words_.size(), other.words_.size()); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::size_t NodeSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

void NodeSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

bool tie_break_less(const NodeSet& a, const NodeSet& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (na != nb) return na < nb;
  const auto va = a.nodes();
  const auto vb = b.nodes();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace chaincut
