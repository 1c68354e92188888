#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "chaincut/capacity.hpp"

namespace chaincut {

// Exact nonnegative delay in time slots, or Infeasible. Infeasible absorbs
// addition and orders above every finite delay.
class Delay {
 public:
  Delay() = default;  // zero
  explicit Delay(mpq_class value);

  static Delay infeasible();
  static Delay zero() { return Delay(); }
  // size / capacity, both in micro-units. Zero capacity is Infeasible and
  // Infinite capacity is zero delay.
  static Delay transfer(std::int64_t size_micros, const Capacity& rate);
  static Delay from_fraction(std::int64_t num, std::int64_t den);

  bool feasible() const { return feasible_; }
  // Precondition: feasible.
  const mpq_class& value() const;
  double to_double() const;
  // "p/q" (always with a denominator) or "inf".
  std::string to_string() const;
  static Delay parse(const std::string& text);

  Delay& operator+=(const Delay& other);
  friend Delay operator+(Delay a, const Delay& b) { return a += b; }
  Delay scaled(const mpq_class& factor) const;

  friend bool operator==(const Delay& a, const Delay& b);
  friend std::strong_ordering operator<=>(const Delay& a, const Delay& b);

 private:
  mpq_class value_{0};
  bool feasible_ = true;
};

}  // namespace chaincut
