#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracle.hpp"
#include "quasipolar/antichain.hpp"
#include "quasipolar/dichotomy.hpp"

using namespace quasipolar;

namespace {

const Modulus z12(12);

Dichotomy set12(std::initializer_list<int> xs) { return Dichotomy::from_elements(xs, z12); }

}  // namespace

TEST_CASE("dichotomy invariants") {
  CHECK_THROWS_AS(Dichotomy(0b111, Modulus(4)), std::invalid_argument);
  CHECK_THROWS_AS(Dichotomy(0b10001, Modulus(4)), std::invalid_argument);
  CHECK_THROWS_AS(Dichotomy(0, Modulus(66)), std::invalid_argument);
  CHECK_NOTHROW(Dichotomy(full_mask(32), Modulus(64)));
  CHECK(set12({0, 3, 4, 7, 8, 9}).elements() == std::vector<int>{0, 3, 4, 7, 8, 9});
}

TEST_CASE("act") {
  const Dichotomy d = set12({0, 3, 4, 7, 8, 9});
  CHECK(act(AffineMap(2, 5, z12), d) == set12({1, 2, 5, 6, 10, 11}));
  CHECK(act(AffineMap(2, 5, z12), d) == complement(d));
  CHECK(act(AffineMap::identity(z12), d) == d);
  CHECK(act(Permutation::identity(12), d) == d);
  CHECK(act(AffineMap(6, 1, z12), set12({0, 1, 2, 3, 4, 5})) == set12({6, 7, 8, 9, 10, 11}));
  CHECK_THROWS_AS(act(Permutation::identity(4), d), std::invalid_argument);
}

TEST_CASE("complement") {
  const Modulus z6(6);
  CHECK(complement(Dichotomy::from_elements({0, 1, 2}, z6)) == Dichotomy::from_elements({3, 4, 5}, z6));
  CHECK(complement(set12({0, 3, 4, 7, 8, 9})) == set12({1, 2, 5, 6, 10, 11}));
  for (const auto& s : oracle::half_subsets(8)) {
    const Dichotomy d = Dichotomy::from_elements(std::vector<int>(s.begin(), s.end()), Modulus(8));
    CHECK(complement(complement(d)) == d);
  }
}

TEST_CASE("strength") {
  const PermGroup g = builtin_group(GroupKind::affine, z12);

  const StrengthReport strong = strength(set12({0, 3, 4, 7, 8, 9}), g);
  CHECK(strong.rigid);
  CHECK(strong.strong);
  CHECK(strong.stabilizer_order == 1);
  REQUIRE(strong.polarity.has_value());
  CHECK(*as_affine(*strong.polarity) == AffineMap(2, 5, z12));

  const StrengthReport block = strength(set12({0, 1, 2, 3, 4, 5}), g);
  CHECK_FALSE(block.rigid);
  CHECK_FALSE(block.strong);
  CHECK_FALSE(block.polarity.has_value());
  bool reflection_fixes = false, shift_complements = false;
  for (const Permutation& p : g.elements()) {
    if (*as_affine(p) == AffineMap(5, 11, z12)) reflection_fixes = act(p, set12({0, 1, 2, 3, 4, 5})) == set12({0, 1, 2, 3, 4, 5});
  }
  for (const Permutation& w : block.witnesses) shift_complements |= *as_affine(w) == AffineMap(6, 1, z12);
  CHECK(reflection_fixes);
  CHECK(shift_complements);

  const Modulus z4(4);
  const StrengthReport pair = strength(Dichotomy::from_elements({0, 2}, z4), builtin_group(GroupKind::affine, z4));
  CHECK_FALSE(pair.rigid);
  CHECK_FALSE(pair.strong);
}

TEST_CASE("base_set") {
  CHECK(base_set(AffineMap(6, 1, z12)) == set12({0, 1, 2, 3, 4, 5}));
  CHECK(base_set(AffineMap(1, 1, Modulus(2))) == Dichotomy::from_elements({0}, Modulus(2)));
  CHECK(base_set(AffineMap(1, 11, z12)) == set12({0, 2, 3, 4, 5, 6}));
  CHECK_THROWS_AS(base_set(AffineMap(0, 11, z12)), std::invalid_argument);
  for (int n = 2; n <= 20; n += 2) {
    for (const auto& q : enumerate_quasipolarities(Modulus(n))) {
      const Dichotomy u = base_set(q);
      CHECK(act(q, u) == complement(u));
    }
  }
}

TEST_CASE("complementing_family") {
  CHECK(complementing_family(AffineMap(6, 1, z12)).size() == 64);

  const Modulus z2(2);
  const auto tiny = complementing_family(AffineMap(1, 1, z2));
  CHECK(tiny == std::vector<Dichotomy>{Dichotomy::from_elements({1}, z2), Dichotomy::from_elements({0}, z2)});

  const auto family = complementing_family(AffineMap(2, 5, z12));
  CHECK(std::find(family.begin(), family.end(), set12({0, 3, 4, 7, 8, 9})) != family.end());
  CHECK_THROWS_AS(complementing_family(AffineMap(0, 1, z12)), std::invalid_argument);
}

TEST_CASE("complementing family equals the brute-force filter, n <= 14") {
  for (int n = 2; n <= 14; n += 2) {
    for (const auto& q : enumerate_quasipolarities(Modulus(n))) {
      const auto img = oracle::images({static_cast<int>(q.u()), static_cast<int>(q.v()), n});
      std::set<oracle::Subset> expected;
      for (const auto& s : oracle::half_subsets(n)) {
        if (oracle::image(img, s) == oracle::complement(s, n)) expected.insert(s);
      }
      std::set<oracle::Subset> built;
      for (const auto& d : complementing_family(q)) {
        const auto xs = d.elements();
        built.insert(oracle::Subset(xs.begin(), xs.end()));
      }
      REQUIRE(built == expected);
      CHECK(expected.size() == (std::size_t{1} << (n / 2)));
    }
  }
}

TEST_CASE("family size is 2^(n/2), n <= 20") {
  for (int n = 2; n <= 20; n += 2) {
    for (const auto& q : enumerate_quasipolarities(Modulus(n))) {
      const auto family = complementing_family(q);
      CHECK(std::set<Dichotomy>(family.begin(), family.end()).size() == (std::size_t{1} << (n / 2)));
    }
  }
}

TEST_CASE("centralizer maps the family to itself, n <= 16") {
  for (int n = 2; n <= 16; n += 2) {
    const auto group = enumerate_group(Modulus(n));
    for (const auto& q : enumerate_quasipolarities(Modulus(n))) {
      const auto family = complementing_family(q);
      const std::set<Dichotomy> as_set(family.begin(), family.end());
      for (const auto& g : group) {
        if (compose(g, q) != compose(q, g)) continue;
        std::set<Dichotomy> image;
        for (const auto& d : family) image.insert(act(g, d));
        REQUIRE(image == as_set);
      }
    }
  }
}

TEST_CASE("conjugation transports the family, n <= 12") {
  for (int n = 2; n <= 12; n += 2) {
    const auto group = enumerate_group(Modulus(n));
    for (const auto& q : enumerate_quasipolarities(Modulus(n))) {
      const auto family = complementing_family(q);
      for (const auto& h : group) {
        const auto target = complementing_family(conjugate(h, q));
        std::set<Dichotomy> image;
        for (const auto& d : family) image.insert(act(h, d));
        REQUIRE(image == std::set<Dichotomy>(target.begin(), target.end()));
      }
    }
  }
}

TEST_CASE("images of strong dichotomies are strong with the conjugated polarity, n <= 12") {
  for (int n = 2; n <= 12; n += 2) {
    const Modulus m(n);
    const PermGroup g = builtin_group(GroupKind::affine, m);
    for (const auto& c : strong_classes(g, m, Strategy::bruteforce)) {
      std::set<Mask> orbit;
      for (const Permutation& h : g.elements()) {
        const Dichotomy image = act(h, c.representative);
        orbit.insert(image.mask());
        const StrengthReport r = strength(image, g);
        REQUIRE(r.strong);
        CHECK(*r.polarity == conjugate(h, *c.strength.polarity));
        CHECK(r.polarity->is_quasipolarity());
      }
      CHECK(orbit.size() == g.order());
    }
  }
}
