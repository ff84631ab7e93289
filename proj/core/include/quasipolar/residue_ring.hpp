#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace quasipolar {

/// An even modulus n = 2k >= 2.
class Modulus {
 public:
  /// Throws std::invalid_argument for odd or non-positive n.
  explicit Modulus(std::int64_t n);

  std::int64_t n() const { return n_; }
  std::int64_t k() const { return n_ / 2; }

  friend bool operator==(const Modulus&, const Modulus&) = default;
  friend auto operator<=>(const Modulus&, const Modulus&) = default;

 private:
  std::int64_t n_;
};

/// An element of Z_n, always stored as its least non-negative representative.
class Residue {
 public:
  Residue(std::int64_t value, Modulus modulus);

  std::int64_t value() const { return value_; }
  Modulus modulus() const { return modulus_; }

  // Binary operators throw std::invalid_argument on a modulus mismatch.
  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  Residue operator-() const;

  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;

 private:
  std::int64_t value_;
  Modulus modulus_;
};

/// An element of the unit group Z_n^x.
class UnitResidue {
 public:
  /// Throws std::invalid_argument if gcd(value, n) != 1.
  explicit UnitResidue(Residue residue);
  UnitResidue(std::int64_t value, Modulus modulus) : UnitResidue(Residue(value, modulus)) {}

  static UnitResidue one(Modulus modulus) { return UnitResidue(1, modulus); }

  const Residue& residue() const { return residue_; }
  std::int64_t value() const { return residue_.value(); }
  Modulus modulus() const { return residue_.modulus(); }

  UnitResidue inverse() const;
  bool is_involution() const;

  friend UnitResidue operator*(const UnitResidue& a, const UnitResidue& b);
  friend bool operator==(const UnitResidue&, const UnitResidue&) = default;
  friend auto operator<=>(const UnitResidue&, const UnitResidue&) = default;

 private:
  Residue residue_;
};

/// |Z_n^x| by trial gcd.
std::int64_t euler_phi(Modulus modulus);

struct UnitsAndInvolutions {
  std::vector<UnitResidue> units;        // ascending
  std::vector<UnitResidue> involutions;  // ascending, v^2 = 1
};

UnitsAndInvolutions units_and_involutions(Modulus modulus);

/// gcd-based invariants of a unit v, computed from its least non-negative lift.
struct SigmaTau {
  std::int64_t sigma;  // gcd(v - 1, n)
  std::int64_t tau;    // gcd(v + 1, n)
  std::int64_t u0;     // n / tau
};

SigmaTau sigma_tau_u0(const UnitResidue& v);

}  // namespace quasipolar
