#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

// Arithmetic over GF(2^8) with the primitive polynomial x^8+x^4+x^3+x^2+1.
namespace chaincut::gf256 {

inline std::uint8_t add(std::uint8_t a, std::uint8_t b) { return a ^ b; }
std::uint8_t mul(std::uint8_t a, std::uint8_t b);
// Precondition: a != 0.
std::uint8_t inv(std::uint8_t a);

// dst += c * src, element-wise.
void axpy(std::span<std::uint8_t> dst, std::uint8_t c, std::span<const std::uint8_t> src);

// Rank of the matrix whose rows are `rows` (all the same length).
std::size_t rank(std::vector<std::vector<std::uint8_t>> rows);

}  // namespace chaincut::gf256
