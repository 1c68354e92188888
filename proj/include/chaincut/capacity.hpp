#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace chaincut {

// Link capacity in fixed-point micro-units (1e-6 resolution), or Infinite.
// Flow arithmetic stays in exact integers; Infinite absorbs addition.
class Capacity {
 public:
  static constexpr std::int64_t kMicrosPerUnit = 1'000'000;

  constexpr Capacity() = default;

  static Capacity from_micros(std::int64_t micros);
  static constexpr Capacity infinite() {
    Capacity c;
    c.infinite_ = true;
    return c;
  }
  // Rounds value * 1e6 to the nearest micro-unit, ties to even.
  static Capacity from_units(double value);

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_zero() const { return !infinite_ && micros_ == 0; }
  // Precondition: finite.
  std::int64_t micros() const;
  double to_double() const;
  std::string to_string() const;

  Capacity& operator+=(const Capacity& other);
  friend Capacity operator+(Capacity a, const Capacity& b) { return a += b; }

  friend constexpr bool operator==(const Capacity& a, const Capacity& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.micros_ == b.micros_);
  }
  friend constexpr std::strong_ordering operator<=>(const Capacity& a, const Capacity& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.micros_ <=> b.micros_;
  }

 private:
  std::int64_t micros_ = 0;
  bool infinite_ = false;
};

}  // namespace chaincut
