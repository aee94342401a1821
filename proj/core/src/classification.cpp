#include "multinv/classification.hpp"

#include <algorithm>
#include <set>

namespace multinv {

namespace {

bool is_odd_prime(std::size_t n) {
  if (n < 3 || n % 2 == 0)
    return false;
  for (std::size_t d = 3; d * d <= n; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

// Indices i with g_ii = -1 for a diagonal sign matrix.
std::vector<std::size_t> inversion_set(const IntegerMatrix &g) {
  std::vector<std::size_t> j;
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (g(i, i) == -1)
      j.push_back(i);
  return j;
}

} // namespace

std::size_t height_of_ideal(const GroupAction &g) {
  if (g.is_trivial())
    throw Error(ErrorCode::TrivialGroup, "height of I needs a nontrivial group");
  const IntegerMatrix id = IntegerMatrix::identity(g.rank());
  std::size_t best = g.rank();
  for (std::size_t i = 1; i < g.order(); ++i)
    best = std::min(best, rank(id - g.element(i)));
  return best;
}

bool is_fixed_point_free(const GroupAction &g) {
  if (g.is_trivial())
    return true;
  return height_of_ideal(g) == g.rank();
}

ElementaryDivisors class_group(const GroupAction &g) {
  if (!is_reflection_group(g))
    throw Error(ErrorCode::NotReflectionGroup,
                "class group formula needs a reflection group");
  const EffectiveQuotient eq = effective_quotient(g);
  if (eq.quotient_rank == 0)
    return {};

  std::vector<IntegerMatrix> diagonalizable;
  for (const auto &r : find_reflections(eq.induced))
    if (r.diagonalizable)
      diagonalizable.push_back(r.matrix);

  if (diagonalizable.empty()) {
    const RootDatum rd = build_root_system(eq.induced);
    return cokernel_invariants(rd.projected_lattice.basis());
  }

  // B = Abar^D with the action of G restricted to it.
  const GroupAction d = close_group(eq.quotient_rank, diagonalizable, g.order());
  const Sublattice b = fixed_sublattice(d);
  const std::size_t k = b.rank();
  if (k == 0)
    return {};
  std::vector<IntegerMatrix> restricted;
  for (const auto &h : eq.induced.generators()) {
    const IntegerMatrix images = b.basis() * h;
    IntegerMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto c = b.coordinates(images.row(i));
      if (!c)
        throw Error(ErrorCode::AxiomFailure,
                    "fixed lattice of D is not G-stable");
      for (std::size_t j = 0; j < k; ++j)
        m(i, j) = (*c)[j];
    }
    restricted.push_back(std::move(m));
  }
  const GroupAction on_b = close_group(k, restricted, g.order());
  if (on_b.is_trivial())
    return ElementaryDivisors{std::vector<Integer>(k, Integer(1))};
  if (!is_reflection_group(on_b))
    throw Error(ErrorCode::AmbiguousFormula,
                "G does not act on the D-fixed lattice as a reflection group");
  const RootDatum rd = build_root_system(on_b);
  return cokernel_invariants(rd.projected_lattice.basis());
}

std::string_view to_string(VerdictStatus s) {
  switch (s) {
  case VerdictStatus::SemigroupAlgebra: return "SemigroupAlgebra";
  case VerdictStatus::NotSemigroupAlgebra: return "NotSemigroupAlgebra";
  case VerdictStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(VerdictReason r) {
  switch (r) {
  case VerdictReason::TrivialAction: return "trivial action";
  case VerdictReason::ReflectionGroup: return "reflection group";
  case VerdictReason::FixedPointFree: return "fixed point free";
  case VerdictReason::OddPrimeOrder: return "odd prime order";
  case VerdictReason::SignGroupSingularities: return "sign group singularities";
  case VerdictReason::OpenQuestion: return "open question";
  }
  return "open question";
}

Verdict verdict(const GroupAction &g, unsigned threads,
                const std::optional<std::vector<IntegerVector>> &base_override) {
  Verdict v;
  const IntegerMatrix id = IntegerMatrix::identity(g.rank());
  const bool trivial_action =
      std::all_of(g.elements().begin(), g.elements().end(),
                  [&](const IntegerMatrix &m) { return m == id; });
  if (trivial_action) {
    v.status = VerdictStatus::SemigroupAlgebra;
    v.reason = VerdictReason::TrivialAction;
    v.explanation = "G acts trivially, so R = k[A] is the group algebra of A";
    WeightMonoid empty;
    empty.box_points = {IntegerVector{}};
    v.monoid = MonoidDescription{Sublattice::full(g.rank()), std::move(empty)};
    return v;
  }

  if (is_reflection_group(g)) {
    const RootDatum rd = build_root_system(g, base_override);
    const WeightMonoid wm = compute_weight_monoid(rd, threads);
    v.status = VerdictStatus::SemigroupAlgebra;
    v.reason = VerdictReason::ReflectionGroup;
    v.explanation = "G is generated by reflections, so R = k[M] with "
                    "M = A^G x (pi(A) cap Lambda+)";
    v.monoid = full_monoid(effective_quotient(g), wm);
    return v;
  }

  const EffectiveQuotient eq = effective_quotient(g);
  if (eq.quotient_rank >= 2 && is_fixed_point_free(eq.induced)) {
    v.status = VerdictStatus::NotSemigroupAlgebra;
    if (is_odd_prime(g.order())) {
      v.reason = VerdictReason::OddPrimeOrder;
      v.explanation = "G has odd prime order " + std::to_string(g.order()) +
                      ", so it acts fixed point freely on A/A^G";
    } else {
      v.reason = VerdictReason::FixedPointFree;
      v.explanation = "G acts fixed point freely on A/A^G of rank " +
                      std::to_string(eq.quotient_rank) +
                      ": the singular locus is finite with at least two "
                      "points, but a torus can fix only one";
    }
    return v;
  }

  if (is_sign_group(g) && find_reflections(g).empty()) {
    const SignGroupReport report = sign_group_singular_locus(g);
    if (report.intersection_point_count >= 2) {
      v.status = VerdictStatus::NotSemigroupAlgebra;
      v.reason = VerdictReason::SignGroupSingularities;
      v.explanation = std::to_string(report.intersection_point_count) +
                      " sign points lie on several singular components and "
                      "would all be torus fixed points, but there can be only "
                      "one";
      return v;
    }
  }

  v.status = VerdictStatus::Unknown;
  v.reason = VerdictReason::OpenQuestion;
  v.explanation = "G is neither a reflection group nor covered by a negative "
                  "criterion; whether every semigroup algebra of "
                  "multiplicative invariants comes from a reflection group "
                  "is open";
  return v;
}

bool is_sign_group(const GroupAction &g) {
  for (const auto &m : g.elements())
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Integer &x = m(i, j);
        if (i == j ? (x != 1 && x != -1) : x != 0)
          return false;
      }
  return true;
}

SignGroupReport sign_group_singular_locus(const GroupAction &g) {
  if (!is_sign_group(g))
    throw Error(ErrorCode::NotSignGroup, "G contains a non-diagonal element");
  const std::size_t n = g.rank();

  std::set<std::vector<std::size_t>> inversion_sets;
  for (std::size_t i = 1; i < g.order(); ++i) {
    auto j = inversion_set(g.element(i));
    if (j.size() == 1)
      throw Error(ErrorCode::HasReflections,
                  "G contains the reflection inverting coordinate " +
                      std::to_string(j[0] + 1));
    inversion_sets.insert(std::move(j));
  }
  std::vector<std::vector<std::size_t>> minimal;
  for (const auto &t : inversion_sets) {
    const bool has_smaller = std::any_of(
        inversion_sets.begin(), inversion_sets.end(), [&](const auto &s) {
          return s != t && std::includes(t.begin(), t.end(), s.begin(), s.end());
        });
    if (!has_smaller)
      minimal.push_back(t);
  }

  SignGroupReport report;
  for (const auto &t : minimal) {
    for (unsigned long mask = 0; mask < (1ul << t.size()); ++mask) {
      SignPrime p;
      p.coordinates = t;
      for (std::size_t k = 0; k < t.size(); ++k)
        p.signs.push_back((mask >> k) & 1 ? -1 : 1);
      report.minimal_primes.push_back(std::move(p));
    }
    report.component_dimension = std::max(report.component_dimension, n - t.size());
  }
  report.component_count = report.minimal_primes.size();

  if (n >= 8 * sizeof(unsigned long))
    throw Error(ErrorCode::InvalidInput, "rank too large for sign enumeration");
  for (unsigned long point = 0; point < (1ul << n); ++point) {
    std::size_t containing = 0;
    for (const auto &p : report.minimal_primes) {
      bool on = true;
      for (std::size_t k = 0; k < p.coordinates.size() && on; ++k) {
        const int sign = (point >> p.coordinates[k]) & 1 ? -1 : 1;
        on = sign == p.signs[k];
      }
      containing += on;
    }
    if (containing >= 2)
      ++report.intersection_point_count;
  }
  return report;
}

} // namespace multinv
