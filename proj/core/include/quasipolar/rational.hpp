#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace quasipolar {

/// Exact rational in lowest terms with a positive denominator. All arithmetic
/// is overflow-checked.
class Rational {
 public:
  Rational(std::int64_t numerator = 0, std::int64_t denominator = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// Largest integer <= *this.
  std::int64_t floor() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& other) { return *this = *this + other; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace quasipolar
