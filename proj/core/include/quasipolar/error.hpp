#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quasipolar {

/// Raised when an optimized path disagrees with its brute-force oracle, or a
/// closed-form count disagrees with the enumerated one.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed its configured size limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace checked {

// Overflow is a hard error; nothing here ever wraps.

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline std::int64_t pow2(int exponent) {
  if (exponent < 0 || exponent > 62) throw std::overflow_error("2^" + std::to_string(exponent) + " out of range");
  return std::int64_t{1} << exponent;
}

}  // namespace checked
}  // namespace quasipolar
