#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace chaincut {

using NodeId = std::uint32_t;

// Bitmask set of node indices. Trailing zero words are trimmed so equal sets
// compare and hash equal regardless of construction history.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<NodeId> nodes);
  explicit NodeSet(const std::vector<NodeId>& nodes);

  static NodeSet all(std::size_t node_count);

  void insert(NodeId v);
  void erase(NodeId v);
  bool contains(NodeId v) const;
  bool empty() const { return words_.empty(); }
  std::size_t size() const;
  // Largest member + 1, or 0 when empty.
  std::size_t extent() const;

  std::vector<NodeId> nodes() const;

  NodeSet operator|(const NodeSet& other) const;
  NodeSet operator&(const NodeSet& other) const;
  NodeSet operator-(const NodeSet& other) const;
  bool is_subset_of(const NodeSet& other) const;
  bool intersects(const NodeSet& other) const;

  std::size_t hash() const;

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

// Deterministic tie-break order: smaller cardinality first, then the
// lexicographically smaller ascending node-index sequence.
bool tie_break_less(const NodeSet& a, const NodeSet& b);

struct NodeSetHash {
  std::size_t operator()(const NodeSet& s) const { return s.hash(); }
};

}  // namespace chaincut
