#include "chaincut/gf256.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace chaincut::gf256 {

namespace {

struct Tables {
  std::array<std::uint8_t, 512> exp{};
  std::array<int, 256> log{};
  Tables() {
    int x = 1;
    for (int i = 0; i < 255; ++i) {
      exp[i] = static_cast<std::uint8_t>(x);
      log[x] = i;
      x <<= 1;
      if ((x & 0x100) != 0) x ^= 0x11d;
    }
    for (int i = 255; i < 512; ++i) exp[i] = exp[i - 255];
    log[0] = -1;
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
  if (a == 0 || b == 0) return 0;
  const auto& t = tables();
  return t.exp[t.log[a] + t.log[b]];
}

std::uint8_t inv(std::uint8_t a) {
  if (a == 0) throw std::domain_error("gf256: inverse of zero");
  const auto& t = tables();
  return t.exp[255 - t.log[a]];
}

void axpy(std::span<std::uint8_t> dst, std::uint8_t c, std::span<const std::uint8_t> src) {
  if (c == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= mul(c, src[i]);
}

std::size_t rank(std::vector<std::vector<std::uint8_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const std::uint8_t scale = inv(rows[r][c]);
    for (auto& x : rows[r]) x = mul(x, scale);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] != 0) axpy(rows[i], rows[i][c], rows[r]);
    }
    ++r;
  }
  return r;
}

}  // namespace chaincut::gf256
