#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quasipolar/affine_group.hpp"

namespace quasipolar {

/// A bijection of {0, ..., degree-1}, stored as its image array.
class Permutation {
 public:
  /// Throws std::invalid_argument if `images` is not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation from_affine(const AffineMap& g);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;
  bool is_involution() const;
  bool is_derangement() const;
  bool is_quasipolarity() const { return is_involution() && is_derangement(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Cycle notation with fixed points omitted, e.g. "(0 1)(2 3)"; "()" for the identity.
std::string to_string(const Permutation& p);

/// (g o h)(x) = g(h(x)), the same convention as affine composition.
Permutation compose(const Permutation& g, const Permutation& h);
Permutation inverse(const Permutation& p);
Permutation conjugate(const Permutation& h, const Permutation& g);

/// Recovers e^u v from a permutation of Z_n when it is affine.
std::optional<AffineMap> as_affine(const Permutation& p);

enum class GroupKind { generic, symmetric, dihedral, affine };

std::string_view to_string(GroupKind kind);
/// Accepts "symmetric", "dihedral", "affine". Throws std::invalid_argument otherwise.
GroupKind parse_group_kind(std::string_view name);

inline constexpr std::size_t kDefaultOrderCap = 1'000'000;
inline constexpr int kMaxSymmetricDegree = 8;

/// An explicitly materialized permutation group.
class PermGroup {
 public:
  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  std::span<const Permutation> elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::size_t identity_index() const { return identity_index_; }
  GroupKind kind() const { return kind_; }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

 private:
  friend PermGroup closure(std::span<const Permutation>, std::size_t);
  friend PermGroup builtin_group(GroupKind, Modulus, std::size_t);

  PermGroup(int degree, std::vector<Permutation> elements, GroupKind kind);

  int degree_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> sorted_index_;  // indices of elements_ in ascending image order
  std::size_t identity_index_ = 0;
  GroupKind kind_;
};

/// The subgroup generated by `generators`; the identity is element 0 and the
/// rest follow in breadth-first order. Throws BudgetExceeded past `order_cap`.
PermGroup closure(std::span<const Permutation> generators, std::size_t order_cap = kDefaultOrderCap);

/// Sym(n) in lexicographic order, the dihedral group {x -> +-x + a} of order
/// 2n, or the image of the affine group under Permutation::from_affine.
PermGroup builtin_group(GroupKind kind, Modulus n, std::size_t order_cap = kDefaultOrderCap);

/// Elements that are involutions without fixed points, in group order.
std::vector<Permutation> quasipolarities_of(const PermGroup& group);

/// Throws std::invalid_argument if g is not in the group.
std::size_t centralizer_size(const PermGroup& group, const Permutation& g);

struct PermQuasipolarityClass {
  Permutation representative;  // first member in group order
  std::vector<Permutation> members;
  std::size_t centralizer_size;
};

/// Quasipolarities of the group partitioned into conjugacy classes.
std::vector<PermQuasipolarityClass> quasipolarity_classes(const PermGroup& group);

}  // namespace quasipolar
