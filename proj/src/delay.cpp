#include "chaincut/delay.hpp"

#include <limits>
#include <stdexcept>

namespace chaincut {

namespace {
mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &v);  // v is nonnegative here
  return z;
}
}  // namespace

Delay::Delay(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ < 0) throw std::invalid_argument("delay must be nonnegative");
}

Delay Delay::infeasible() {
  Delay d;
  d.feasible_ = false;
  return d;
}

Delay Delay::transfer(std::int64_t size_micros, const Capacity& rate) {
  if (size_micros < 0) throw std::invalid_argument("payload size must be nonnegative");
  if (rate.is_infinite()) return zero();
  if (rate.is_zero()) return infeasible();
  return Delay(mpq_class(to_mpz(size_micros), to_mpz(rate.micros())));
}

Delay Delay::from_fraction(std::int64_t num, std::int64_t den) {
  if (num < 0 || den <= 0) throw std::invalid_argument("from_fraction: bad fraction");
  return Delay(mpq_class(to_mpz(num), to_mpz(den)));
}

const mpq_class& Delay::value() const {
  if (!feasible_) throw std::logic_error("value() on infeasible delay");
  return value_;
}

double Delay::to_double() const {
  return feasible_ ? value_.get_d() : std::numeric_limits<double>::infinity();
}

std::string Delay::to_string() const {
  if (!feasible_) return "inf";
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Delay Delay::parse(const std::string& text) {
  if (text == "inf") return infeasible();
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad delay '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("bad delay '" + text + "'");
  return Delay(q);
}

Delay& Delay::operator+=(const Delay& other) {
  if (!feasible_ || !other.feasible_) {
    feasible_ = false;
    value_ = 0;
  } else {
    value_ += other.value_;
  }
  return *this;
}

Delay Delay::scaled(const mpq_class& factor) const {
  if (!feasible_) return *this;
  return Delay(mpq_class(value_ * factor));
}

bool operator==(const Delay& a, const Delay& b) {
  if (a.feasible_ != b.feasible_) return false;
  return !a.feasible_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Delay& a, const Delay& b) {
  if (!a.feasible_ || !b.feasible_) return b.feasible_ <=> a.feasible_;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace chaincut
