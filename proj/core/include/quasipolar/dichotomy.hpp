#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "quasipolar/affine_group.hpp"
#include "quasipolar/perm_group.hpp"

namespace quasipolar {

using Mask = std::uint64_t;

inline constexpr int kMaxDichotomyDegree = 64;

/// Bits 0..n-1 set.
constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// A subset of Z_n with exactly n/2 elements, as a characteristic bit mask.
class Dichotomy {
 public:
  /// Throws std::invalid_argument if n > 64, a bit at position >= n is set,
  /// or popcount(mask) != n/2.
  Dichotomy(Mask mask, Modulus modulus);

  static Dichotomy from_elements(std::span<const int> elements, Modulus modulus);
  static Dichotomy from_elements(std::initializer_list<int> elements, Modulus modulus) {
    return from_elements(std::span<const int>(elements.begin(), elements.size()), modulus);
  }

  Mask mask() const { return mask_; }
  Modulus modulus() const { return modulus_; }
  int degree() const { return static_cast<int>(modulus_.n()); }
  bool contains(int x) const { return (mask_ >> x) & 1U; }
  std::vector<int> elements() const;

  friend bool operator==(const Dichotomy&, const Dichotomy&) = default;
  friend auto operator<=>(const Dichotomy& a, const Dichotomy& b) {
    if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

 private:
  Mask mask_;
  Modulus modulus_;
};

/// Image of a mask under a permutation; no popcount or width checks.
Mask act_mask(const Permutation& g, Mask mask);

Dichotomy act(const Permutation& g, const Dichotomy& d);
Dichotomy act(const AffineMap& g, const Dichotomy& d);
Dichotomy complement(const Dichotomy& d);

struct StrengthReport {
  std::size_t stabilizer_order = 0;    // setwise stabilizer, identity included
  bool rigid = false;
  std::vector<Permutation> witnesses;  // every p with pD = complement(D), group order
  std::optional<Permutation> polarity;
  bool strong = false;
};

/// Full scan of the group: setwise stabilizer and complementing elements.
/// A strong dichotomy must have exactly one complementing element and it must
/// be a quasipolarity; otherwise VerificationFailure is thrown.
StrengthReport strength(const Dichotomy& d, const PermGroup& group);

/// The smaller point of each 2-cycle of q. Throws std::invalid_argument
/// unless q is a quasipolarity.
Dichotomy base_set(const Permutation& q);
Dichotomy base_set(const AffineMap& q);

/// Every dichotomy D with qD = complement(D), built as A u ((S \ U) \ qA)
/// for A running over subsets of U = base_set(q). A is indexed by a binary
/// counter over the ascending elements of U, so the output has 2^(n/2)
/// entries in counter order.
std::vector<Dichotomy> complementing_family(const Permutation& q);
std::vector<Dichotomy> complementing_family(const AffineMap& q);

}  // namespace quasipolar
