#include "quasipolar/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

#include "quasipolar/error.hpp"

namespace quasipolar {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  if (denominator < 0) {
    numerator = checked::sub(0, numerator);
    denominator = checked::sub(0, denominator);
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const std::int64_t lhs = checked::mul(a.num_, b.den_ / g);
  const std::int64_t rhs = checked::mul(b.num_, a.den_ / g);
  return Rational(checked::add(lhs, rhs), checked::mul(a.den_, b.den_ / g));
}

Rational operator-(const Rational& a, const Rational& b) {
  return a + Rational(checked::sub(0, b.num_), b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-cancel first to keep intermediates small.
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  const std::int64_t d1 = g1 == 0 ? 1 : g1;
  const std::int64_t d2 = g2 == 0 ? 1 : g2;
  return Rational(checked::mul(a.num_ / d1, b.num_ / d2), checked::mul(a.den_ / d2, b.den_ / d1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return checked::mul(a.num_, b.den_) <=> checked::mul(b.num_, a.den_);
}

std::string to_string(const Rational& r) {
  if (r.den() == 1) return std::to_string(r.num());
  return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << to_string(r); }

}  // namespace quasipolar
