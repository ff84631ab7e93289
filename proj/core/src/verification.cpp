#include "quasipolar/verification.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "quasipolar/affine_group.hpp"
#include "quasipolar/dichotomy.hpp"
#include "quasipolar/error.hpp"
#include "quasipolar/residue_ring.hpp"

namespace quasipolar {

namespace {

using Witness = std::optional<std::string>;
using Check = std::function<Witness(Modulus)>;

class Runner {
 public:
  explicit Runner(const VerifyConfig& config) : config_(config) {}

  // Runs `check` for each even n in [n_min, min(n_max, limit)].
  void property(std::string name, int n_min, int limit, const Check& check) {
    const int hi = std::min(config_.n_max, limit);
    if (hi < n_min) return;
    PropertyResult result{std::move(name), true, ""};
    for (int n = n_min; n <= hi; n += 2) {
      Witness w;
      try {
        w = check(Modulus(n));
      } catch (const VerificationFailure& e) {
        w = e.what();
      }
      if (w) {
        result.passed = false;
        result.detail = "n=" + std::to_string(n) + ": " + *w;
        break;
      }
    }
    if (result.passed) result.detail = "n=" + std::to_string(n_min) + ".." + std::to_string(hi);
    results_.push_back(std::move(result));
  }

  bool check() const { return config_.check; }
  const ScanOptions& options() const { return config_.options; }
  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  const VerifyConfig& config_;
  std::vector<PropertyResult> results_;
};

std::string str(const AffineMap& g) { return to_string(g); }

PermGroup affine(Modulus n) { return builtin_group(GroupKind::affine, n); }

void affine_properties(Runner& run) {
  run.property("u0_divides_sigma", 2, 1 << 20, [](Modulus n) -> Witness {
    for (const auto& v : units_and_involutions(n).involutions) {
      const auto st = sigma_tau_u0(v);
      if (st.sigma % st.u0 != 0) return "v=" + std::to_string(v.value());
    }
    return std::nullopt;
  });

  run.property("odd_k_sigma_is_twice_u0", 2, 1 << 20, [](Modulus n) -> Witness {
    if (n.k() % 2 == 0) return std::nullopt;
    for (const auto& v : units_and_involutions(n).involutions) {
      const auto st = sigma_tau_u0(v);
      if (st.sigma != 2 * st.u0) return "v=" + std::to_string(v.value());
    }
    return std::nullopt;
  });

  run.property("sigma_tau_at_least_two", 2, 1 << 20, [](Modulus n) -> Witness {
    for (const auto& v : units_and_involutions(n).involutions) {
      const auto st = sigma_tau_u0(v);
      if (st.sigma < 2 || st.tau < 2) return "v=" + std::to_string(v.value());
    }
    return std::nullopt;
  });

  if (run.check()) {
    run.property("characterization_matches_bruteforce", 2, 1 << 20, [](Modulus n) -> Witness {
      for (const AffineMap& g : enumerate_group(n)) {
        if (is_quasipolarity_characterized(g) != is_quasipolarity_bruteforce(g)) return str(g);
      }
      return std::nullopt;
    });

    run.property("generation_matches_filter", 2, 1 << 20, [](Modulus n) -> Witness {
      std::vector<AffineMap> filtered;
      for (const AffineMap& g : enumerate_group(n)) {
        if (is_quasipolarity_bruteforce(g)) filtered.push_back(g);
      }
      if (filtered != enumerate_quasipolarities(n)) return std::string("lists differ");
      return std::nullopt;
    });

    run.property("involution_matches_composition", 2, 1 << 20, [](Modulus n) -> Witness {
      for (const AffineMap& g : enumerate_group(n)) {
        if (is_involution(g) != compose(g, g).is_identity()) return str(g);
      }
      return std::nullopt;
    });
  }

  run.property("quasipolarities_per_linear_part", 2, 1 << 20, [](Modulus n) -> Witness {
    const auto qps = enumerate_quasipolarities(n);
    for (const auto& v : units_and_involutions(n).involutions) {
      const auto st = sigma_tau_u0(v);
      const auto count = std::count_if(qps.begin(), qps.end(),
                                       [&](const AffineMap& q) { return q.v() == v.value(); });
      const std::int64_t expected = st.u0 == st.sigma ? 0 : (2 * st.u0 == st.sigma ? n.n() / st.sigma : -1);
      if (count != expected) return "v=" + std::to_string(v.value());
    }
    return std::nullopt;
  });

  run.property("stabilizer_formula", 2, 30, [](Modulus n) -> Witness {
    const std::int64_t phi = euler_phi(n);
    for (const auto& c : quasipolarity_conjugacy(n)) {
      const auto sigma = sigma_tau_u0(c.representative.linear()).sigma;
      if (c.stabilizer_size != sigma * phi) return str(c.representative);
      if (static_cast<std::int64_t>(c.members.size()) * c.stabilizer_size != n.n() * phi) {
        return str(c.representative);
      }
    }
    return std::nullopt;
  });

  run.property("transitive_on_fixed_linear_part", 2, 30, [](Modulus n) -> Witness {
    std::set<std::int64_t> linear_parts;
    for (const auto& c : quasipolarity_conjugacy(n)) {
      for (const auto& m : c.members) {
        if (m.v() != c.representative.v()) return str(m);
      }
      if (!linear_parts.insert(c.representative.v()).second) {
        return "two classes with v=" + std::to_string(c.representative.v());
      }
    }
    return std::nullopt;
  });

  run.property("class_count_at_most_phi", 2, 30, [](Modulus n) -> Witness {
    if (static_cast<std::int64_t>(quasipolarity_conjugacy(n).size()) > euler_phi(n)) {
      return std::string("too many classes");
    }
    return std::nullopt;
  });

  run.property("stabilizer_at_least_two_phi", 2, 30, [](Modulus n) -> Witness {
    for (const auto& c : quasipolarity_conjugacy(n)) {
      if (c.stabilizer_size < 2 * euler_phi(n)) return str(c.representative);
    }
    return std::nullopt;
  });

  run.property("conjugation_closed_form", 2, 12, [](Modulus n) -> Witness {
    const auto group = enumerate_group(n);
    for (const auto& h : group) {
      for (const auto& g : group) {
        if (conjugate(h, g) != conjugate_closed_form(h, g)) return str(h) + " on " + str(g);
      }
    }
    return std::nullopt;
  });

  run.property("embedding_is_homomorphism", 2, 12, [](Modulus n) -> Witness {
    const auto group = enumerate_group(n);
    for (const auto& g : group) {
      for (const auto& h : group) {
        if (Permutation::from_affine(compose(g, h)) !=
            compose(Permutation::from_affine(g), Permutation::from_affine(h))) {
          return str(g) + " o " + str(h);
        }
      }
    }
    return std::nullopt;
  });

  run.property("embedded_quasipolarities", 2, 20, [](Modulus n) -> Witness {
    std::set<Permutation> expected;
    for (const auto& q : enumerate_quasipolarities(n)) expected.insert(Permutation::from_affine(q));
    const auto found = quasipolarities_of(affine(n));
    if (std::set<Permutation>(found.begin(), found.end()) != expected) return std::string("sets differ");
    return std::nullopt;
  });

  run.property("complementing_family_size", 2, 20, [](Modulus n) -> Witness {
    for (const auto& q : enumerate_quasipolarities(n)) {
      const auto family = complementing_family(q);
      const std::set<Dichotomy> unique(family.begin(), family.end());
      if (unique.size() != (std::size_t{1} << n.k())) return str(q);
      for (const auto& d : family) {
        if (act(q, d) != complement(d)) return str(q);
      }
    }
    return std::nullopt;
  });

  if (run.check()) {
    run.property("complementing_family_matches_filter", 2, 16, [](Modulus n) -> Witness {
      const int degree = static_cast<int>(n.n());
      for (const auto& q : enumerate_quasipolarities(n)) {
        const Permutation p = Permutation::from_affine(q);
        std::set<Mask> filtered;
        for (Mask m = 0; m <= full_mask(degree); ++m) {
          if (std::popcount(m) == degree / 2 && act_mask(p, m) == (~m & full_mask(degree))) {
            filtered.insert(m);
          }
        }
        std::set<Mask> built;
        for (const auto& d : complementing_family(q)) built.insert(d.mask());
        if (built != filtered) return str(q);
      }
      return std::nullopt;
    });
  }

  run.property("centralizer_preserves_family", 2, 16, [](Modulus n) -> Witness {
    const auto group = enumerate_group(n);
    for (const auto& q : enumerate_quasipolarities(n)) {
      const auto family = complementing_family(q);
      const std::set<Dichotomy> as_set(family.begin(), family.end());
      for (const auto& g : group) {
        if (compose(g, q) != compose(q, g)) continue;
        std::set<Dichotomy> image;
        for (const auto& d : family) image.insert(act(g, d));
        if (image != as_set) return str(g) + " on family of " + str(q);
      }
    }
    return std::nullopt;
  });

  run.property("conjugation_transports_family", 2, 12, [](Modulus n) -> Witness {
    const auto group = enumerate_group(n);
    for (const auto& q : enumerate_quasipolarities(n)) {
      const auto family = complementing_family(q);
      for (const auto& h : group) {
        const auto target = complementing_family(conjugate(h, q));
        std::set<Dichotomy> image;
        for (const auto& d : family) image.insert(act(h, d));
        if (image != std::set<Dichotomy>(target.begin(), target.end())) return str(h) + ", " + str(q);
      }
    }
    return std::nullopt;
  });

  run.property("polarity_transported_by_conjugation", 2, 12, [&run](Modulus n) -> Witness {
    const PermGroup g = affine(n);
    for (const auto& c : strong_classes(g, n, Strategy::bruteforce, run.options())) {
      for (const Permutation& h : g.elements()) {
        const Dichotomy image = act(h, c.representative);
        const StrengthReport r = strength(image, g);
        if (!r.strong || r.polarity != conjugate(h, *c.strength.polarity)) {
          return "mask " + std::to_string(c.representative.mask());
        }
      }
    }
    return std::nullopt;
  });

  run.property("strong_orbits_have_full_size", 2, 16, [&run](Modulus n) -> Witness {
    const PermGroup g = affine(n);
    for (const auto& c : strong_classes(g, n, Strategy::bruteforce, run.options())) {
      std::set<Mask> orbit;
      for (const Permutation& h : g.elements()) orbit.insert(act_mask(h, c.representative.mask()));
      if (orbit.size() != g.order() || c.orbit_size != g.order()) {
        return "mask " + std::to_string(c.representative.mask());
      }
    }
    return std::nullopt;
  });

  if (run.check()) {
    run.property("strategy_equivalence", 2, 16, [&run](Modulus n) -> Witness {
      const PermGroup g = affine(n);
      const auto a = strong_classes(g, n, Strategy::bruteforce, run.options());
      const auto b = strong_classes(g, n, Strategy::via_mq, run.options());
      if (a.size() != b.size()) return "counts " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].representative != b[i].representative || a[i].strength.polarity != b[i].strength.polarity) {
          return "class " + std::to_string(i);
        }
      }
      return std::nullopt;
    });
  }

  run.property("strong_family_is_complement_free_antichain", 2, 16, [&run](Modulus n) -> Witness {
    const PermGroup g = affine(n);
    std::vector<Dichotomy> reps;
    for (const auto& c : strong_classes(g, n, Strategy::bruteforce, run.options())) {
      reps.push_back(c.representative);
      if (canonicalize(complement(c.representative), g) != c.representative) {
        return "complement leaves orbit of " + std::to_string(c.representative.mask());
      }
    }
    if (!is_antichain(reps)) return std::string("not an antichain");
    if (!is_complement_free(reps)) return std::string("not complement-free");
    return std::nullopt;
  });

  run.property("bound_chain", 2, run.options().budget.max_n_via_mq, [&run](Modulus n) -> Witness {
    const BoundReport r = bounds(affine(n), n, run.options());
    if (!r.consistent()) return std::string("inconsistent report");
    if (static_cast<std::int64_t>(r.exact_strong_count) > r.ekr) return std::string("count exceeds EKR");
    if (r.cota > Rational(checked::pow2(static_cast<int>(n.k()) - 1))) return "cota " + to_string(r.cota);
    return std::nullopt;
  });
}

void dihedral_properties(Runner& run) {
  run.property("quasipolarity_count_k_plus_1", 4, 64, [](Modulus n) -> Witness {
    const auto qps = quasipolarities_of(builtin_group(GroupKind::dihedral, n));
    if (static_cast<std::int64_t>(qps.size()) != n.k() + 1) return std::to_string(qps.size()) + " found";
    return std::nullopt;
  });

  run.property("rotation_centralizer_is_whole_group", 4, 64, [](Modulus n) -> Witness {
    const PermGroup g = builtin_group(GroupKind::dihedral, n);
    const auto rotation = Permutation::from_affine(AffineMap(n.k(), 1, n));
    if (centralizer_size(g, rotation) != g.order()) return std::string("rotation by k");
    return std::nullopt;
  });

  run.property("reflections_form_one_class", 4, 64, [](Modulus n) -> Witness {
    const auto classes = quasipolarity_classes(builtin_group(GroupKind::dihedral, n));
    if (classes.size() != 2) return std::to_string(classes.size()) + " classes";
    for (const auto& c : classes) {
      if (c.representative.images()[0] == static_cast<int>(n.k())) continue;  // rotation
      if (static_cast<std::int64_t>(c.members.size()) != n.k()) return "reflection class size";
      // Rotation by k is central, so each reflection commutes with four elements.
      if (c.centralizer_size != 4) return "reflection centralizer " + std::to_string(c.centralizer_size);
    }
    return std::nullopt;
  });

  run.property("bound_chain", 4, run.options().budget.max_n_bruteforce, [&run](Modulus n) -> Witness {
    const BoundReport r = bounds(builtin_group(GroupKind::dihedral, n), n, run.options());
    if (!r.consistent()) return std::string("inconsistent report");
    if (Rational(static_cast<std::int64_t>(r.exact_strong_count)) > *r.closed_form) return std::string("count exceeds closed form");
    return std::nullopt;
  });
}

void symmetric_properties(Runner& run) {
  run.property("quasipolarities_form_one_class", 2, kMaxSymmetricDegree, [](Modulus n) -> Witness {
    const auto classes = quasipolarity_classes(builtin_group(GroupKind::symmetric, n));
    if (classes.size() != 1) return std::to_string(classes.size()) + " classes";
    std::int64_t expected = checked::pow2(static_cast<int>(n.k()));
    for (int i = 2; i <= n.k(); ++i) expected *= i;
    if (static_cast<std::int64_t>(classes.front().centralizer_size) != expected) {
      return "centralizer " + std::to_string(classes.front().centralizer_size);
    }
    return std::nullopt;
  });

  run.property("no_strong_dichotomies", 4, kMaxSymmetricDegree, [&run](Modulus n) -> Witness {
    const PermGroup g = builtin_group(GroupKind::symmetric, n);
    const auto strong = strong_classes(g, n, Strategy::bruteforce, run.options());
    if (!strong.empty()) return std::to_string(strong.size()) + " strong classes";
    return std::nullopt;
  });

  run.property("bound_chain", 2, kMaxSymmetricDegree, [&run](Modulus n) -> Witness {
    const BoundReport r = bounds(builtin_group(GroupKind::symmetric, n), n, run.options());
    if (!r.consistent()) return std::string("inconsistent report");
    if (r.cota != *r.closed_form) return "cota " + to_string(r.cota);
    return std::nullopt;
  });
}

}  // namespace

std::vector<PropertyResult> verify_properties(const VerifyConfig& config) {
  Runner run(config);
  switch (config.kind) {
    case GroupKind::affine: affine_properties(run); break;
    case GroupKind::dihedral: dihedral_properties(run); break;
    case GroupKind::symmetric: symmetric_properties(run); break;
    case GroupKind::generic: throw std::invalid_argument("verify needs a builtin group family");
  }
  return run.take();
}

}  // namespace quasipolar
