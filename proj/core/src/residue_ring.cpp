#include "quasipolar/residue_ring.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "quasipolar/error.hpp"

namespace quasipolar {

namespace {

void require_same(const Modulus& a, const Modulus& b) {
  if (a != b) {
    throw std::invalid_argument("modulus mismatch: " + std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()));
  }
}

std::int64_t reduce(std::int64_t value, std::int64_t n) {
  std::int64_t r = value % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Modulus::Modulus(std::int64_t n) : n_(n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("modulus must be an even integer >= 2, got " + std::to_string(n));
  }
}

Residue::Residue(std::int64_t value, Modulus modulus)
    : value_(reduce(value, modulus.n())), modulus_(modulus) {}

Residue operator+(const Residue& a, const Residue& b) {
  require_same(a.modulus_, b.modulus_);
  return Residue(checked::add(a.value_, b.value_), a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same(a.modulus_, b.modulus_);
  return Residue(checked::sub(a.value_, b.value_), a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same(a.modulus_, b.modulus_);
  return Residue(checked::mul(a.value_, b.value_), a.modulus_);
}

Residue Residue::operator-() const { return Residue(-value_, modulus_); }

UnitResidue::UnitResidue(Residue residue) : residue_(residue) {
  if (std::gcd(residue.value(), residue.modulus().n()) != 1) {
    throw std::invalid_argument(std::to_string(residue.value()) + " is not a unit mod " +
                                std::to_string(residue.modulus().n()));
  }
}

UnitResidue UnitResidue::inverse() const {
  // Extended Euclid on (value, n).
  std::int64_t old_r = value(), r = modulus().n();
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = checked::sub(old_r, checked::mul(q, r));
    std::swap(old_r, r);
    old_s = checked::sub(old_s, checked::mul(q, s));
    std::swap(old_s, s);
  }
  return UnitResidue(old_s, modulus());
}

bool UnitResidue::is_involution() const {
  return (residue_ * residue_).value() == Residue(1, modulus()).value();
}

UnitResidue operator*(const UnitResidue& a, const UnitResidue& b) {
  return UnitResidue(a.residue_ * b.residue_);
}

std::int64_t euler_phi(Modulus modulus) {
  std::int64_t count = 0;
  for (std::int64_t m = 1; m <= modulus.n(); ++m) {
    if (std::gcd(m, modulus.n()) == 1) ++count;
  }
  return count;
}

UnitsAndInvolutions units_and_involutions(Modulus modulus) {
  UnitsAndInvolutions out;
  for (std::int64_t m = 0; m < modulus.n(); ++m) {
    if (std::gcd(m, modulus.n()) != 1) continue;
    UnitResidue v(m, modulus);
    out.units.push_back(v);
    if (v.is_involution()) out.involutions.push_back(v);
  }
  return out;
}

SigmaTau sigma_tau_u0(const UnitResidue& v) {
  const std::int64_t n = v.modulus().n();
  const std::int64_t nu = v.value();
  // std::gcd(0, n) == n, which gives sigma(1) = n.
  const std::int64_t sigma = std::gcd(nu - 1, n);
  const std::int64_t tau = std::gcd(checked::add(nu, 1), n);
  return {sigma, tau, n / tau};
}

}  // namespace quasipolar
