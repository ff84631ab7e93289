#include "quasipolar/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "quasipolar/error.hpp"

namespace quasipolar {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("image array is not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_affine(const AffineMap& g) {
  const auto n = static_cast<int>(g.modulus().n());
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) images[static_cast<std::size_t>(x)] = static_cast<int>(apply(g, x));
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if ((*this)(x) != x) return false;
  }
  return true;
}

bool Permutation::is_involution() const {
  for (int x = 0; x < degree(); ++x) {
    if ((*this)((*this)(x)) != x) return false;
  }
  return true;
}

bool Permutation::is_derangement() const {
  for (int x = 0; x < degree(); ++x) {
    if ((*this)(x) == x) return false;
  }
  return true;
}

std::string to_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || p(start) == start) continue;
    out += '(';
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      if (x != start) out += ' ';
      out += std::to_string(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<int> images(static_cast<std::size_t>(g.degree()));
  for (int x = 0; x < g.degree(); ++x) images[static_cast<std::size_t>(x)] = g(h(x));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) images[static_cast<std::size_t>(p(x))] = x;
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& h, const Permutation& g) {
  return compose(h, compose(g, inverse(h)));
}

std::optional<AffineMap> as_affine(const Permutation& p) {
  if (p.degree() < 2 || p.degree() % 2 != 0) return std::nullopt;
  const Modulus m(p.degree());
  const std::int64_t u = p(0);
  const Residue v = Residue(p(1), m) - Residue(u, m);
  if (std::gcd(v.value(), m.n()) != 1) return std::nullopt;
  AffineMap g(Residue(u, m), UnitResidue(v));
  if (Permutation::from_affine(g) != p) return std::nullopt;
  return g;
}

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::generic: return "generic";
    case GroupKind::symmetric: return "symmetric";
    case GroupKind::dihedral: return "dihedral";
    case GroupKind::affine: return "affine";
  }
  return "generic";
}

GroupKind parse_group_kind(std::string_view name) {
  if (name == "symmetric") return GroupKind::symmetric;
  if (name == "dihedral") return GroupKind::dihedral;
  if (name == "affine") return GroupKind::affine;
  throw std::invalid_argument("unknown group kind '" + std::string(name) + "'");
}

PermGroup::PermGroup(int degree, std::vector<Permutation> elements, GroupKind kind)
    : degree_(degree), elements_(std::move(elements)), kind_(kind) {
  sorted_index_.resize(elements_.size());
  std::iota(sorted_index_.begin(), sorted_index_.end(), std::size_t{0});
  std::sort(sorted_index_.begin(), sorted_index_.end(),
            [&](std::size_t a, std::size_t b) { return elements_[a] < elements_[b]; });
  for (std::size_t i = 1; i < sorted_index_.size(); ++i) {
    if (elements_[sorted_index_[i - 1]] == elements_[sorted_index_[i]]) {
      throw std::logic_error("duplicate group element");
    }
  }
  const auto id = index_of(Permutation::identity(degree));
  if (!id) throw std::logic_error("group does not contain the identity");
  identity_index_ = *id;
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = std::lower_bound(sorted_index_.begin(), sorted_index_.end(), p,
                             [&](std::size_t i, const Permutation& q) { return elements_[i] < q; });
  if (it == sorted_index_.end() || elements_[*it] != p) return std::nullopt;
  return *it;
}

PermGroup closure(std::span<const Permutation> generators, std::size_t order_cap) {
  if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
  const int degree = generators.front().degree();
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generators have different degrees");
  }

  // A finite set closed under right multiplication by generators is a group.
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::set<Permutation> seen{elements.front()};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Permutation& g : generators) {
      Permutation next = compose(elements[i], g);
      if (seen.insert(next).second) {
        if (elements.size() >= order_cap) {
          throw BudgetExceeded("group order exceeds cap of " + std::to_string(order_cap));
        }
        elements.push_back(std::move(next));
      }
    }
  }
  return PermGroup(degree, std::move(elements), GroupKind::generic);
}

PermGroup builtin_group(GroupKind kind, Modulus n, std::size_t order_cap) {
  const auto degree = static_cast<int>(n.n());
  std::vector<Permutation> elements;
  switch (kind) {
    case GroupKind::symmetric: {
      if (degree > kMaxSymmetricDegree) {
        throw BudgetExceeded("symmetric group limited to degree " +
                             std::to_string(kMaxSymmetricDegree));
      }
      std::size_t order = 1;
      for (int i = 2; i <= degree; ++i) order *= static_cast<std::size_t>(i);
      if (order > order_cap) throw BudgetExceeded("Sym(" + std::to_string(degree) + ") exceeds order cap");
      std::vector<int> images(static_cast<std::size_t>(degree));
      std::iota(images.begin(), images.end(), 0);
      do {
        elements.emplace_back(images);
      } while (std::next_permutation(images.begin(), images.end()));
      break;
    }
    case GroupKind::dihedral: {
      if (degree < 4) throw std::invalid_argument("dihedral group needs n >= 4");
      if (static_cast<std::size_t>(2 * degree) > order_cap) throw BudgetExceeded("dihedral group exceeds order cap");
      for (int sign : {1, -1}) {
        for (int a = 0; a < degree; ++a) {
          elements.push_back(Permutation::from_affine(AffineMap(a, sign, n)));
        }
      }
      break;
    }
    case GroupKind::affine: {
      const auto order = static_cast<std::size_t>(n.n() * euler_phi(n));
      if (order > order_cap) throw BudgetExceeded("affine group exceeds order cap");
      for (const AffineMap& g : enumerate_group(n)) elements.push_back(Permutation::from_affine(g));
      break;
    }
    case GroupKind::generic:
      throw std::invalid_argument("generic groups are built with closure()");
  }
  return PermGroup(degree, std::move(elements), kind);
}

std::vector<Permutation> quasipolarities_of(const PermGroup& group) {
  std::vector<Permutation> out;
  for (const Permutation& g : group.elements()) {
    if (g.is_quasipolarity()) out.push_back(g);
  }
  return out;
}

std::size_t centralizer_size(const PermGroup& group, const Permutation& g) {
  if (!group.contains(g)) throw std::invalid_argument("element " + to_string(g) + " is not in the group");
  std::size_t count = 0;
  for (const Permutation& h : group.elements()) {
    if (compose(h, g) == compose(g, h)) ++count;
  }
  return count;
}

std::vector<PermQuasipolarityClass> quasipolarity_classes(const PermGroup& group) {
  std::vector<PermQuasipolarityClass> classes;
  std::set<Permutation> assigned;
  for (const Permutation& q : quasipolarities_of(group)) {
    if (assigned.contains(q)) continue;
    std::set<Permutation> orbit;
    for (const Permutation& h : group.elements()) orbit.insert(conjugate(h, q));
    assigned.insert(orbit.begin(), orbit.end());
    classes.push_back({q, std::vector<Permutation>(orbit.begin(), orbit.end()),
                       centralizer_size(group, q)});
  }
  return classes;
}

}  // namespace quasipolar
