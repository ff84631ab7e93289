#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "quasipolar/residue_ring.hpp"

namespace quasipolar {

/// The affine map x -> v*x + u on Z_n, written e^u v.
///
/// Ordering is lexicographic on (v, u), which is the canonical enumeration
/// order for the group and for quasipolarity class representatives.
class AffineMap {
 public:
  /// Throws std::invalid_argument if u and v live in different rings.
  AffineMap(Residue translation, UnitResidue linear);
  AffineMap(std::int64_t u, std::int64_t v, Modulus modulus)
      : AffineMap(Residue(u, modulus), UnitResidue(v, modulus)) {}

  static AffineMap identity(Modulus modulus) { return AffineMap(0, 1, modulus); }

  const Residue& translation() const { return u_; }
  const UnitResidue& linear() const { return v_; }
  std::int64_t u() const { return u_.value(); }
  std::int64_t v() const { return v_.value(); }
  Modulus modulus() const { return u_.modulus(); }

  bool is_identity() const { return u() == 0 && v() == 1; }

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.modulus() == b.modulus() && a.v() == b.v() && a.u() == b.u();
  }
  friend auto operator<=>(const AffineMap& a, const AffineMap& b) {
    if (auto c = a.modulus() <=> b.modulus(); c != 0) return c;
    if (auto c = a.v() <=> b.v(); c != 0) return c;
    return a.u() <=> b.u();
  }

 private:
  Residue u_;
  UnitResidue v_;
};

/// "e^u*v", e.g. "e^2*5".
std::string to_string(const AffineMap& g);
std::ostream& operator<<(std::ostream& os, const AffineMap& g);

Residue apply(const AffineMap& g, const Residue& x);
std::int64_t apply(const AffineMap& g, std::int64_t x);

/// (g o h)(x) = g(h(x)).
AffineMap compose(const AffineMap& g, const AffineMap& h);
AffineMap invert(const AffineMap& g);

/// h o g o h^-1, computed by composition.
AffineMap conjugate(const AffineMap& h, const AffineMap& g);

/// h o g o h^-1 for h = e^t s, g = e^u v, evaluated as e^{t(1-v)+su} v.
AffineMap conjugate_closed_form(const AffineMap& h, const AffineMap& g);

/// v^2 = 1 and u(v+1) = 0.
bool is_involution(const AffineMap& g);

/// Involutive derangement, decided by evaluating g o g and g on every point.
bool is_quasipolarity_bruteforce(const AffineMap& g);

/// Involutive derangement, decided by the gcd characterization:
///   v^2 = 1,  2*(n / tau(v)) = sigma(v),  u = u0 (mod sigma(v)).
/// The second condition is always evaluated, including for odd k.
bool is_quasipolarity_characterized(const AffineMap& g);

/// All n*phi(n) maps, ordered by (v, u).
std::vector<AffineMap> enumerate_group(Modulus modulus);

/// Quasipolarities generated from the characterization: for each admissible
/// involution v, u runs over u0, u0 + sigma, u0 + 2*sigma, ... below n.
std::vector<AffineMap> enumerate_quasipolarities(Modulus modulus);

struct QuasipolarityClass {
  AffineMap representative;        // minimal (v, u)
  std::vector<AffineMap> members;  // ascending
  std::int64_t stabilizer_size;    // centralizer order under conjugation
};

/// Conjugacy classes of quasipolarities under the full affine group.
///
/// Orbits and centralizers are found by brute-force conjugation and then
/// checked against sigma(v)*phi(n) and n/sigma(v); any disagreement throws
/// VerificationFailure.
std::vector<QuasipolarityClass> quasipolarity_conjugacy(Modulus modulus);

}  // namespace quasipolar
