#include "chaincut/capacity.hpp"

#include <cfenv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace chaincut {

Capacity Capacity::from_micros(std::int64_t micros) {
  if (micros < 0) throw std::invalid_argument("capacity must be nonnegative");
  Capacity c;
  c.micros_ = micros;
  return c;
}

Capacity Capacity::from_units(double value) {
  if (std::isinf(value) && value > 0) return infinite();
  if (!std::isfinite(value) || value < 0) {
    throw std::invalid_argument("capacity must be a nonnegative number or infinite");
  }
  const double scaled = value * static_cast<double>(kMicrosPerUnit);
  if (scaled > static_cast<double>(std::numeric_limits<std::int64_t>::max() / 4)) {
    throw std::out_of_range("capacity too large for micro-unit representation");
  }
  // nearbyint honours the current rounding mode; force ties-to-even.
  const int saved = std::fegetround();
  std::fesetround(FE_TONEAREST);
  const double rounded = std::nearbyint(scaled);
  std::fesetround(saved);
  return from_micros(static_cast<std::int64_t>(rounded));
}

std::int64_t Capacity::micros() const {
  if (infinite_) throw std::logic_error("micros() on infinite capacity");
  return micros_;
}

double Capacity::to_double() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  return static_cast<double>(micros_) / static_cast<double>(kMicrosPerUnit);
}

std::string Capacity::to_string() const {
  if (infinite_) return "inf";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%lld.%06lld", static_cast<long long>(micros_ / kMicrosPerUnit),
                static_cast<long long>(micros_ % kMicrosPerUnit));
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

Capacity& Capacity::operator+=(const Capacity& other) {
  if (infinite_ || other.infinite_) {
    infinite_ = true;
    micros_ = 0;
  } else {
    micros_ += other.micros_;
  }
  return *this;
}

}  // namespace chaincut
