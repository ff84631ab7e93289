#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "oracle.hpp"
#include "quasipolar/error.hpp"
#include "quasipolar/residue_ring.hpp"

using namespace quasipolar;

namespace {

std::vector<std::int64_t> values(const std::vector<UnitResidue>& xs) {
  std::vector<std::int64_t> out;
  for (const auto& x : xs) out.push_back(x.value());
  return out;
}

}  // namespace

TEST_CASE("modulus rejects odd and non-positive n") {
  CHECK_THROWS_AS(Modulus(0), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(-4), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(7), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(1), std::invalid_argument);
  CHECK(Modulus(2).k() == 1);
  CHECK(Modulus(12).k() == 6);
}

TEST_CASE("residues store the least non-negative representative") {
  const Modulus m(12);
  CHECK(Residue(-1, m).value() == 11);
  CHECK(Residue(25, m).value() == 1);
  CHECK(Residue(-24, m).value() == 0);
  CHECK((Residue(7, m) * Residue(5, m)).value() == 11);
  CHECK((Residue(3, m) - Residue(5, m)).value() == 10);
  CHECK((-Residue(0, m)).value() == 0);
  CHECK_THROWS_AS(Residue(1, m) + Residue(1, Modulus(10)), std::invalid_argument);
}

TEST_CASE("units") {
  const Modulus m(12);
  CHECK_THROWS_AS(UnitResidue(4, m), std::invalid_argument);
  CHECK(UnitResidue(5, m).inverse().value() == 5);
  CHECK(UnitResidue(3, Modulus(10)).inverse().value() == 7);
  for (int n = 2; n <= 40; n += 2) {
    for (const auto& v : units_and_involutions(Modulus(n)).units) {
      CHECK((v * v.inverse()).value() == 1);
    }
  }
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(Modulus(12)) == 4);
  CHECK(euler_phi(Modulus(2)) == 1);
  CHECK(euler_phi(Modulus(10)) == 4);
  for (int n = 2; n <= 60; n += 2) {
    CHECK(euler_phi(Modulus(n)) == static_cast<std::int64_t>(oracle::units(n).size()));
  }
}

TEST_CASE("units_and_involutions") {
  using V = std::vector<std::int64_t>;
  const auto z12 = units_and_involutions(Modulus(12));
  CHECK(values(z12.units) == V{1, 5, 7, 11});
  CHECK(values(z12.involutions) == V{1, 5, 7, 11});

  const auto z10 = units_and_involutions(Modulus(10));
  CHECK(values(z10.units) == V{1, 3, 7, 9});
  CHECK(values(z10.involutions) == V{1, 9});

  const auto z8 = units_and_involutions(Modulus(8));
  CHECK(values(z8.involutions) == V{1, 3, 5, 7});

  // Exhaustive squares as the oracle.
  for (int n = 2; n <= 40; n += 2) {
    V expected;
    for (int v : oracle::units(n)) {
      if (v * v % n == 1 % n) expected.push_back(v);
    }
    CHECK(values(units_and_involutions(Modulus(n)).involutions) == expected);
  }
}

TEST_CASE("sigma_tau_u0") {
  const Modulus m(12);
  auto st = sigma_tau_u0(UnitResidue(5, m));
  CHECK(st.sigma == 4);
  CHECK(st.tau == 6);
  CHECK(st.u0 == 2);

  st = sigma_tau_u0(UnitResidue(11, m));
  CHECK(st.sigma == 2);
  CHECK(st.tau == 12);
  CHECK(st.u0 == 1);

  st = sigma_tau_u0(UnitResidue(1, m));
  CHECK(st.sigma == 12);  // gcd(0, n) = n
  CHECK(st.tau == 2);
  CHECK(st.u0 == 6);

  // Defined for non-involutions too: 3 mod 10.
  st = sigma_tau_u0(UnitResidue(3, Modulus(10)));
  CHECK(st.sigma == 2);
  CHECK(st.tau == 2);
  CHECK(st.u0 == 5);
}

TEST_CASE("involution invariants for all even n <= 30") {
  for (int n = 2; n <= 30; n += 2) {
    CAPTURE(n);
    for (const auto& v : units_and_involutions(Modulus(n)).involutions) {
      CAPTURE(v.value());
      const auto st = sigma_tau_u0(v);
      CHECK(st.sigma % st.u0 == 0);
      CHECK(st.sigma >= 2);
      CHECK(st.tau >= 2);
      if ((n / 2) % 2 == 1) CHECK(st.sigma == 2 * st.u0);
    }
  }
}

TEST_CASE("checked arithmetic never wraps") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(checked::add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked::mul(big / 2 + 1, 2), std::overflow_error);
  CHECK_THROWS_AS(checked::pow2(63), std::overflow_error);
  const Modulus huge(std::int64_t{1} << 62);
  CHECK_THROWS_AS(Residue((std::int64_t{1} << 62) - 1, huge) * Residue((std::int64_t{1} << 62) - 1, huge),
                  std::overflow_error);
}
