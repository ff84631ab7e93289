#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quasipolar/dichotomy.hpp"
#include "quasipolar/perm_group.hpp"
#include "quasipolar/rational.hpp"

namespace quasipolar {

/// Enumeration limits. Brute-force scans touch all C(n, n/2) dichotomies;
/// the complementing-family strategy touches 2^(n/2) per quasipolarity class.
struct Budget {
  int max_n_bruteforce = 16;
  int max_n_via_mq = 24;
  std::size_t max_group_order = kDefaultOrderCap;

  /// Raises both n limits to at least `max_n`.
  static Budget with_max_n(int max_n);
};

struct ScanOptions {
  Budget budget{};
  unsigned workers = 1;  // results do not depend on this
};

struct CanonicalClass {
  Dichotomy representative;  // numerically minimal mask in the orbit
  std::size_t orbit_size;
  StrengthReport strength;
};

enum class Strategy { bruteforce, via_mq };

/// Exact C(n, k), overflow-checked.
std::int64_t binomial(int n, int k);

/// The orbit member with the smallest mask.
Dichotomy canonicalize(const Dichotomy& d, const PermGroup& group);

/// One class per orbit on dichotomies of Z_n, in ascending representative
/// order. Throws BudgetExceeded when n > budget.max_n_bruteforce.
std::vector<CanonicalClass> orbit_traversal(const PermGroup& group, Modulus n,
                                            const ScanOptions& options = {});

/// Orbits of strong dichotomies, in ascending representative order.
///
/// `bruteforce` filters orbit_traversal by strength(). `via_mq` needs the
/// affine group: it scans only the complementing family of one quasipolarity
/// per conjugacy class, canonicalizes, deduplicates and keeps the strong ones.
std::vector<CanonicalClass> strong_classes(const PermGroup& group, Modulus n, Strategy strategy,
                                           const ScanOptions& options = {});

/// No member is a proper subset of another.
bool is_antichain(std::span<const Dichotomy> family);

/// No member is the complement of another member.
bool is_complement_free(std::span<const Dichotomy> family);

struct BoundReport {
  Modulus n;
  GroupKind kind;
  std::size_t group_order;
  std::size_t exact_strong_count;
  std::int64_t sperner;  // C(n, n/2)
  std::int64_t purdy;    // C(n, n/2 - 1)
  std::int64_t ekr;      // C(n - 1, n/2 - 1)
  Rational cota;         // sum over quasipolarity classes of 2^(n/2) / |centralizer|
  std::int64_t cota_floor;
  std::optional<Rational> closed_form;
  std::vector<PermQuasipolarityClass> classes;

  /// exact <= floor(cota) <= floor(closed_form), ekr <= purdy <= sperner.
  bool consistent() const;
};

/// Closed-form bound per group family: 2^(k-1) for affine,
/// 2^(k-1) + 2^(k-2)/k for dihedral, 1/k! for symmetric.
std::optional<Rational> closed_form_bound(GroupKind kind, Modulus n);

BoundReport bounds(const PermGroup& group, Modulus n, const ScanOptions& options = {});

}  // namespace quasipolar
