#include "quasipolar/affine_group.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

#include "quasipolar/error.hpp"

namespace quasipolar {

namespace {

void require_same(const AffineMap& a, const AffineMap& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("modulus mismatch between affine maps");
  }
}

}  // namespace

AffineMap::AffineMap(Residue translation, UnitResidue linear) : u_(translation), v_(linear) {
  if (translation.modulus() != linear.modulus()) {
    throw std::invalid_argument("affine and linear parts live in different rings");
  }
}

std::string to_string(const AffineMap& g) {
  return "e^" + std::to_string(g.u()) + "*" + std::to_string(g.v());
}

std::ostream& operator<<(std::ostream& os, const AffineMap& g) {
  return os << to_string(g) << " (mod " << g.modulus().n() << ")";
}

Residue apply(const AffineMap& g, const Residue& x) {
  if (x.modulus() != g.modulus()) throw std::invalid_argument("modulus mismatch in apply");
  return g.linear().residue() * x + g.translation();
}

std::int64_t apply(const AffineMap& g, std::int64_t x) {
  return apply(g, Residue(x, g.modulus())).value();
}

AffineMap compose(const AffineMap& g, const AffineMap& h) {
  require_same(g, h);
  // v_g (v_h x + u_h) + u_g
  return AffineMap(g.linear().residue() * h.translation() + g.translation(),
                   g.linear() * h.linear());
}

AffineMap invert(const AffineMap& g) {
  const UnitResidue v_inv = g.linear().inverse();
  return AffineMap(-(v_inv.residue() * g.translation()), v_inv);
}

AffineMap conjugate(const AffineMap& h, const AffineMap& g) {
  return compose(h, compose(g, invert(h)));
}

AffineMap conjugate_closed_form(const AffineMap& h, const AffineMap& g) {
  require_same(h, g);
  const Modulus m = g.modulus();
  const Residue one(1, m);
  const Residue& t = h.translation();
  const Residue& s = h.linear().residue();
  return AffineMap(t * (one - g.linear().residue()) + s * g.translation(), g.linear());
}

bool is_involution(const AffineMap& g) {
  const Residue one(1, g.modulus());
  return g.linear().is_involution() &&
         (g.translation() * (g.linear().residue() + one)).value() == 0;
}

bool is_quasipolarity_bruteforce(const AffineMap& g) {
  if (!compose(g, g).is_identity()) return false;
  for (std::int64_t x = 0; x < g.modulus().n(); ++x) {
    if (apply(g, x) == x) return false;
  }
  return true;
}

bool is_quasipolarity_characterized(const AffineMap& g) {
  if (!g.linear().is_involution()) return false;
  const auto [sigma, tau, u0] = sigma_tau_u0(g.linear());
  (void)tau;
  if (2 * u0 != sigma) return false;
  return g.u() % sigma == u0 % sigma;
}

std::vector<AffineMap> enumerate_group(Modulus modulus) {
  std::vector<AffineMap> out;
  for (const UnitResidue& v : units_and_involutions(modulus).units) {
    for (std::int64_t u = 0; u < modulus.n(); ++u) out.emplace_back(Residue(u, modulus), v);
  }
  return out;
}

std::vector<AffineMap> enumerate_quasipolarities(Modulus modulus) {
  std::vector<AffineMap> out;
  for (const UnitResidue& v : units_and_involutions(modulus).involutions) {
    const auto [sigma, tau, u0] = sigma_tau_u0(v);
    (void)tau;
    if (2 * u0 != sigma) continue;
    for (std::int64_t u = u0; u < modulus.n(); u += sigma) out.emplace_back(Residue(u, modulus), v);
  }
  return out;
}

std::vector<QuasipolarityClass> quasipolarity_conjugacy(Modulus modulus) {
  const std::vector<AffineMap> group = enumerate_group(modulus);
  const std::vector<AffineMap> quasipolarities = enumerate_quasipolarities(modulus);
  const std::int64_t phi = euler_phi(modulus);

  std::set<AffineMap> assigned;
  std::vector<QuasipolarityClass> classes;
  for (const AffineMap& q : quasipolarities) {
    if (assigned.contains(q)) continue;
    std::set<AffineMap> orbit;
    std::int64_t centralizer = 0;
    for (const AffineMap& h : group) {
      const AffineMap c = conjugate(h, q);
      if (c == q) ++centralizer;
      orbit.insert(c);
    }
    const std::int64_t sigma = sigma_tau_u0(q.linear()).sigma;
    if (centralizer != sigma * phi) {
      throw VerificationFailure("centralizer of " + to_string(q) + " mod " +
                                std::to_string(modulus.n()) + " has order " +
                                std::to_string(centralizer) + ", expected sigma*phi = " +
                                std::to_string(sigma * phi));
    }
    if (static_cast<std::int64_t>(orbit.size()) != modulus.n() / sigma) {
      throw VerificationFailure("conjugacy class of " + to_string(q) + " mod " +
                                std::to_string(modulus.n()) + " has " +
                                std::to_string(orbit.size()) + " members, expected n/sigma = " +
                                std::to_string(modulus.n() / sigma));
    }
    for (const AffineMap& c : orbit) {
      if (!std::binary_search(quasipolarities.begin(), quasipolarities.end(), c)) {
        throw VerificationFailure("conjugate " + to_string(c) + " of quasipolarity " +
                                  to_string(q) + " is not a quasipolarity");
      }
    }
    assigned.insert(orbit.begin(), orbit.end());
    classes.push_back({q, std::vector<AffineMap>(orbit.begin(), orbit.end()), centralizer});
  }
  return classes;
}

}  // namespace quasipolar
