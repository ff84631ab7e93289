#include "quasipolar/dichotomy.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "quasipolar/error.hpp"

namespace quasipolar {

Dichotomy::Dichotomy(Mask mask, Modulus modulus) : mask_(mask), modulus_(modulus) {
  const auto n = static_cast<int>(modulus.n());
  if (n > kMaxDichotomyDegree) {
    throw std::invalid_argument("dichotomies are limited to n <= 64, got " + std::to_string(n));
  }
  if ((mask & ~full_mask(n)) != 0) throw std::invalid_argument("mask has bits at positions >= n");
  if (std::popcount(mask) != n / 2) {
    throw std::invalid_argument("a dichotomy of Z_" + std::to_string(n) + " needs " +
                                std::to_string(n / 2) + " elements, got " +
                                std::to_string(std::popcount(mask)));
  }
}

Dichotomy Dichotomy::from_elements(std::span<const int> elements, Modulus modulus) {
  Mask mask = 0;
  for (int x : elements) {
    if (x < 0 || x >= modulus.n() || x >= kMaxDichotomyDegree) {
      throw std::invalid_argument("element " + std::to_string(x) + " out of range");
    }
    mask |= Mask{1} << x;
  }
  return Dichotomy(mask, modulus);
}

std::vector<int> Dichotomy::elements() const {
  std::vector<int> out;
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Mask act_mask(const Permutation& g, Mask mask) {
  Mask out = 0;
  for (Mask m = mask; m != 0; m &= m - 1) out |= Mask{1} << g(std::countr_zero(m));
  return out;
}

Dichotomy act(const Permutation& g, const Dichotomy& d) {
  if (g.degree() != d.degree()) throw std::invalid_argument("degree mismatch in act");
  return Dichotomy(act_mask(g, d.mask()), d.modulus());
}

Dichotomy act(const AffineMap& g, const Dichotomy& d) {
  if (g.modulus() != d.modulus()) throw std::invalid_argument("modulus mismatch in act");
  Mask out = 0;
  for (int x : d.elements()) out |= Mask{1} << apply(g, x);
  return Dichotomy(out, d.modulus());
}

Dichotomy complement(const Dichotomy& d) {
  return Dichotomy(~d.mask() & full_mask(d.degree()), d.modulus());
}

StrengthReport strength(const Dichotomy& d, const PermGroup& group) {
  if (group.degree() != d.degree()) throw std::invalid_argument("degree mismatch in strength");
  const Mask self = d.mask();
  const Mask other = ~self & full_mask(d.degree());

  StrengthReport report;
  for (std::size_t i = 0; i < group.order(); ++i) {
    const Permutation& g = group.element(i);
    const Mask image = act_mask(g, self);
    if (image == self) ++report.stabilizer_order;
    if (image == other) report.witnesses.push_back(g);
  }
  report.rigid = report.stabilizer_order == 1;
  report.strong = report.rigid && !report.witnesses.empty();
  if (report.strong) {
    if (report.witnesses.size() != 1) {
      throw VerificationFailure("rigid dichotomy has " + std::to_string(report.witnesses.size()) +
                                " complementing elements");
    }
    if (!report.witnesses.front().is_quasipolarity()) {
      throw VerificationFailure("polarity " + to_string(report.witnesses.front()) +
                                " is not an involutive derangement");
    }
    report.polarity = report.witnesses.front();
  }
  return report;
}

Dichotomy base_set(const Permutation& q) {
  if (!q.is_quasipolarity()) throw std::invalid_argument(to_string(q) + " is not a quasipolarity");
  if (q.degree() > kMaxDichotomyDegree) throw std::invalid_argument("degree exceeds 64");
  Mask mask = 0;
  for (int x = 0; x < q.degree(); ++x) {
    if (x < q(x)) mask |= Mask{1} << x;
  }
  return Dichotomy(mask, Modulus(q.degree()));
}

Dichotomy base_set(const AffineMap& q) { return base_set(Permutation::from_affine(q)); }

std::vector<Dichotomy> complementing_family(const Permutation& q) {
  const Dichotomy base = base_set(q);
  const std::vector<int> transversal = base.elements();
  const Mask others = ~base.mask() & full_mask(q.degree());
  const std::size_t half = transversal.size();
  if (half > 62) throw std::invalid_argument("complementing family too large");

  std::vector<Dichotomy> out;
  out.reserve(std::size_t{1} << half);
  for (Mask counter = 0; counter < (Mask{1} << half); ++counter) {
    Mask a = 0;
    for (std::size_t i = 0; i < half; ++i) {
      if ((counter >> i) & 1U) a |= Mask{1} << transversal[i];
    }
    const Mask b = others & ~act_mask(q, a);
    out.emplace_back(a | b, base.modulus());
  }
  return out;
}

std::vector<Dichotomy> complementing_family(const AffineMap& q) {
  return complementing_family(Permutation::from_affine(q));
}

}  // namespace quasipolar
