#include "quasipolar/antichain.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "quasipolar/affine_group.hpp"
#include "quasipolar/error.hpp"

namespace quasipolar {

namespace {

// Calls body(i) for i in [0, count) over `workers` threads. Each index is
// visited exactly once, so writes to slot i need no synchronization.
template <class Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  threads.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void require_degree(const PermGroup& group, Modulus n) {
  if (group.degree() != n.n()) {
    throw std::invalid_argument("group of degree " + std::to_string(group.degree()) +
                                " does not act on Z_" + std::to_string(n.n()));
  }
}

// Colex rank of a k-subset mask among all k-subsets.
class SubsetRanker {
 public:
  explicit SubsetRanker(int n) : table_(static_cast<std::size_t>(n + 1)) {
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= i; ++j) table_[static_cast<std::size_t>(i)].push_back(binomial(i, j));
    }
  }

  std::size_t rank(Mask mask) const {
    std::size_t r = 0;
    std::size_t i = 1;
    for (Mask m = mask; m != 0; m &= m - 1, ++i) {
      const auto pos = static_cast<std::size_t>(std::countr_zero(m));
      if (i <= pos) r += static_cast<std::size_t>(table_[pos][i]);
    }
    return r;
  }

 private:
  std::vector<std::vector<std::int64_t>> table_;
};

// Next larger integer with the same popcount.
Mask next_same_popcount(Mask x) {
  const Mask lowest = x & (~x + 1);
  const Mask ripple = x + lowest;
  return ripple | (((x ^ ripple) >> 2) / lowest);
}

}  // namespace

Budget Budget::with_max_n(int max_n) {
  Budget b;
  b.max_n_bruteforce = std::max(b.max_n_bruteforce, max_n);
  b.max_n_via_mq = std::max(b.max_n_via_mq, max_n);
  return b;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i after the previous step.
    result = checked::mul(result, n - k + i) / i;
  }
  return result;
}

Dichotomy canonicalize(const Dichotomy& d, const PermGroup& group) {
  if (group.degree() != d.degree()) throw std::invalid_argument("degree mismatch in canonicalize");
  Mask best = d.mask();
  for (const Permutation& g : group.elements()) best = std::min(best, act_mask(g, d.mask()));
  return Dichotomy(best, d.modulus());
}

std::vector<CanonicalClass> orbit_traversal(const PermGroup& group, Modulus n,
                                            const ScanOptions& options) {
  require_degree(group, n);
  if (n.n() > options.budget.max_n_bruteforce) {
    throw BudgetExceeded("orbit traversal of Z_" + std::to_string(n.n()) +
                         " exceeds brute-force budget n <= " +
                         std::to_string(options.budget.max_n_bruteforce));
  }
  const int degree = static_cast<int>(n.n());
  const int half = static_cast<int>(n.k());
  const SubsetRanker ranker(degree);
  std::vector<bool> visited(static_cast<std::size_t>(binomial(degree, half)), false);

  // Masks come in ascending order, so the first unvisited member of an orbit
  // is its minimum.
  std::vector<Mask> representatives;
  std::vector<std::size_t> orbit_sizes;
  const Mask last = full_mask(degree) & ~full_mask(half);
  for (Mask m = full_mask(half);; m = next_same_popcount(m)) {
    if (!visited[ranker.rank(m)]) {
      std::size_t size = 0;
      for (const Permutation& g : group.elements()) {
        const std::size_t r = ranker.rank(act_mask(g, m));
        if (!visited[r]) {
          visited[r] = true;
          ++size;
        }
      }
      representatives.push_back(m);
      orbit_sizes.push_back(size);
    }
    if (m == last) break;
  }

  std::vector<std::optional<CanonicalClass>> slots(representatives.size());
  parallel_for(representatives.size(), options.workers, [&](std::size_t i) {
    const Dichotomy rep(representatives[i], n);
    StrengthReport report = strength(rep, group);
    if (report.stabilizer_order * orbit_sizes[i] != group.order()) {
      throw VerificationFailure("orbit-stabilizer mismatch at mask " + std::to_string(rep.mask()));
    }
    slots[i] = CanonicalClass{rep, orbit_sizes[i], std::move(report)};
  });

  std::vector<CanonicalClass> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<CanonicalClass> strong_classes(const PermGroup& group, Modulus n, Strategy strategy,
                                           const ScanOptions& options) {
  require_degree(group, n);
  if (strategy == Strategy::bruteforce) {
    std::vector<CanonicalClass> out;
    for (CanonicalClass& c : orbit_traversal(group, n, options)) {
      if (c.strength.strong) out.push_back(std::move(c));
    }
    return out;
  }

  if (group.kind() != GroupKind::affine) {
    throw std::invalid_argument("the complementing-family strategy needs the affine group");
  }
  if (n.n() > options.budget.max_n_via_mq) {
    throw BudgetExceeded("complementing-family scan of Z_" + std::to_string(n.n()) +
                         " exceeds budget n <= " + std::to_string(options.budget.max_n_via_mq));
  }

  std::set<Mask> canonical;
  for (const QuasipolarityClass& cls : quasipolarity_conjugacy(n)) {
    const std::vector<Dichotomy> family = complementing_family(cls.representative);
    std::vector<Mask> images(family.size());
    parallel_for(family.size(), options.workers,
                 [&](std::size_t i) { images[i] = canonicalize(family[i], group).mask(); });
    canonical.insert(images.begin(), images.end());
  }

  const std::vector<Mask> candidates(canonical.begin(), canonical.end());
  std::vector<std::optional<CanonicalClass>> slots(candidates.size());
  parallel_for(candidates.size(), options.workers, [&](std::size_t i) {
    const Dichotomy rep(candidates[i], n);
    StrengthReport report = strength(rep, group);
    if (report.witnesses.empty()) {
      throw VerificationFailure("complementing-family member " + std::to_string(rep.mask()) +
                                " is not autocomplementary");
    }
    if (report.strong) {
      const std::size_t orbit = group.order() / report.stabilizer_order;
      slots[i] = CanonicalClass{rep, orbit, std::move(report)};
    }
  });

  std::vector<CanonicalClass> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

bool is_antichain(std::span<const Dichotomy> family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      const Mask a = family[i].mask(), b = family[j].mask();
      if ((a & b) == a) return false;
    }
  }
  return true;
}

bool is_complement_free(std::span<const Dichotomy> family) {
  std::set<Mask> masks;
  for (const Dichotomy& d : family) masks.insert(d.mask());
  for (const Dichotomy& d : family) {
    if (masks.contains(complement(d).mask())) return false;
  }
  return true;
}

bool BoundReport::consistent() const {
  if (!(ekr <= purdy && purdy <= sperner)) return false;
  if (static_cast<std::int64_t>(exact_strong_count) > cota_floor) return false;
  if (closed_form && cota_floor > closed_form->floor()) return false;
  return true;
}

std::optional<Rational> closed_form_bound(GroupKind kind, Modulus n) {
  const int k = static_cast<int>(n.k());
  switch (kind) {
    case GroupKind::affine:
      return Rational(checked::pow2(k - 1));
    case GroupKind::dihedral:
      if (k < 2) return std::nullopt;
      return Rational(checked::pow2(k - 1)) + Rational(checked::pow2(k - 2), k);
    case GroupKind::symmetric: {
      std::int64_t factorial = 1;
      for (int i = 2; i <= k; ++i) factorial = checked::mul(factorial, i);
      return Rational(1, factorial);
    }
    case GroupKind::generic:
      return std::nullopt;
  }
  return std::nullopt;
}

BoundReport bounds(const PermGroup& group, Modulus n, const ScanOptions& options) {
  require_degree(group, n);
  const int degree = static_cast<int>(n.n());
  const int half = static_cast<int>(n.k());

  std::size_t exact = 0;
  if (degree <= options.budget.max_n_bruteforce) {
    exact = strong_classes(group, n, Strategy::bruteforce, options).size();
  } else if (group.kind() == GroupKind::affine) {
    exact = strong_classes(group, n, Strategy::via_mq, options).size();
  } else {
    throw BudgetExceeded("exact strong count for n = " + std::to_string(degree) +
                         " exceeds brute-force budget");
  }

  std::vector<PermQuasipolarityClass> classes = quasipolarity_classes(group);
  Rational cota(0);
  for (const PermQuasipolarityClass& c : classes) {
    cota += Rational(checked::pow2(half), static_cast<std::int64_t>(c.centralizer_size));
  }

  return BoundReport{
      .n = n,
      .kind = group.kind(),
      .group_order = group.order(),
      .exact_strong_count = exact,
      .sperner = binomial(degree, half),
      .purdy = binomial(degree, half - 1),
      .ekr = binomial(degree - 1, half - 1),
      .cota = cota,
      .cota_floor = cota.floor(),
      .closed_form = closed_form_bound(group.kind(), n),
      .classes = std::move(classes),
  };
}

}  // namespace quasipolar
