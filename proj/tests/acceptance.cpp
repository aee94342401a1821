// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "multinv/classification.hpp"
#include "multinv/error.hpp"
#include "multinv/laurent.hpp"
#include "support.hpp"

using namespace multinv;
using namespace multinv::test;

namespace {

constexpr double kRank2Seconds = 1.0;
constexpr double kRank3Seconds = 10.0;
constexpr double kNegativeSeconds = 1.0;
constexpr double kSignGroupSeconds = 1.0;
constexpr int kSmithCases = 200;
constexpr long kSmithEntryBound = 5;
constexpr int kRandomGroups = 50;
constexpr std::size_t kRandomGroupMaxOrder = 8;
constexpr int kIsotropyPoints = 100;
constexpr long kIsotropyBound = 6;

// Collects the first few failure messages of a criterion.
struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string &what) {
    if (!ok)
      failures.push_back(what);
  }
  bool ok() const { return failures.empty(); }
};

template <class T> std::string show(const T &v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs body under a time limit; exceptions count as failures.
bool run(int number, const char *title, double limit, const std::function<void(Check &)> &body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception &e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const double elapsed = seconds_since(t0);
  if (limit > 0)
    c.expect(elapsed < limit, "took " + std::to_string(elapsed) + " s, limit " +
                                  std::to_string(limit) + " s");
  std::printf("criterion %d: %s %s (%.3f s)\n", number, c.ok() ? "PASS" : "FAIL", title, elapsed);
  for (const auto &n : c.notes)
    std::printf("    %s\n", n.c_str());
  for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i)
    std::printf("    %s\n", c.failures[i].c_str());
  std::fflush(stdout);
  return c.ok();
}

IntegerVector negated(IntegerVector v) {
  for (auto &x : v)
    x = -x;
  return v;
}

Poly linear2(int s) { return Poly::sum({{s, 0}, {0, s}, {0, 0}}); }
Poly linear3(int s) { return Poly::sum({{s, 0, 0}, {0, s, 0}, {0, 0, s}, {0, 0, 0}}); }
Poly quadric3(int s) {
  return Poly::sum({{s, 0, 0}, {0, s, 0}, {0, 0, s}, {s, s, 0}, {s, 0, s}, {0, s, s}});
}

void expect_mus(Check &c, const std::vector<FundamentalInvariant> &mus,
                const std::vector<Poly> &expected) {
  c.expect(mus.size() == expected.size(), "invariant count " + std::to_string(mus.size()));
  for (std::size_t i = 0; i < std::min(mus.size(), expected.size()); ++i)
    c.expect(as_poly(mus[i].expanded).terms == expected[i].terms,
             "mu" + std::to_string(i + 1) + " = " + mus[i].expanded.to_string());
}

// ---------------------------------------------------------------------------

void rank_two(Check &c) {
  const auto g = group(2, a2_generators());
  const auto rd = build_root_system(g, a2_base());
  c.expect(rd.fundamental_weights.size() == 2, "weight count");
  c.expect(rd.fundamental_weights.at(0) == qvec({"-2/3", "1/3"}),
           "lambda1 = " + show(rd.fundamental_weights.at(0)));
  c.expect(rd.fundamental_weights.at(1) == qvec({"-1/3", "2/3"}),
           "lambda2 = " + show(rd.fundamental_weights.at(1)));
  const auto wm = compute_weight_monoid(rd);
  c.expect(wm.multipliers == std::vector<Integer>{3, 3}, "z = " + show(wm.multipliers));
  c.expect(wm.hilbert_basis == std::vector{ivec({3, 0}), ivec({0, 3}), ivec({1, 1})},
           "Hilbert basis");
  expect_mus(c, fundamental_invariants(g, rd, wm),
             {Poly::term({1, 1}) * linear2(-1).pow(3), Poly::term({-1, -1}) * linear2(1).pow(3),
              linear2(1) * linear2(-1)});
  const auto cl = class_group(g).to_string();
  c.expect(cl == "Z/3", "Cl = " + cl);
}

void rank_three(Check &c) {
  const auto g = group(3, a3_generators());
  const auto rd = build_root_system(g, a3_base());
  c.expect(rd.roots.size() == 12, "root count " + std::to_string(rd.roots.size()));
  for (const auto &a : {ivec({1, 0, 0}), ivec({1, 0, -1}), ivec({1, -1, 0}), ivec({0, 1, 0}),
                        ivec({0, 0, 1}), ivec({0, 1, -1})}) {
    const bool both = std::count(rd.roots.begin(), rd.roots.end(), a) == 1 &&
                      std::count(rd.roots.begin(), rd.roots.end(), negated(a)) == 1;
    c.expect(both, "missing root +-" + show(a));
  }
  const std::vector<RationalVector> weights{qvec({"-1/2", "-1/2", "1/2"}),
                                            qvec({"1/4", "-3/4", "1/4"}),
                                            qvec({"-1/4", "-1/4", "-1/4"})};
  c.expect(rd.fundamental_weights == weights, "fundamental weights");
  const auto wm = compute_weight_monoid(rd);
  c.expect(wm.multipliers == std::vector<Integer>{2, 4, 4}, "z = " + show(wm.multipliers));
  c.expect(wm.hilbert_basis == std::vector{ivec({2, 0, 0}), ivec({0, 4, 0}), ivec({0, 0, 4}),
                                           ivec({0, 1, 1}), ivec({1, 2, 0}), ivec({1, 0, 2})},
           "Hilbert basis");
  expect_mus(c, fundamental_invariants(g, rd, wm),
             {Poly::term({-1, -1, -1}) * quadric3(1).pow(2),
              Poly::term({1, 1, 1}) * linear3(-1).pow(4),
              Poly::term({-1, -1, -1}) * linear3(1).pow(4), linear3(1) * linear3(-1),
              quadric3(1) * linear3(-1).pow(2), quadric3(-1) * linear3(1).pow(2)});
  const auto cl = class_group(g).to_string();
  c.expect(cl == "Z/4", "Cl = " + cl);
}

void expect_odd_prime(Check &c, const GroupAction &g, std::size_t p, const std::string &name) {
  c.expect(g.order() == p, name + ": order " + std::to_string(g.order()));
  c.expect(fixed_sublattice(g).rank() == 0, name + ": not effective");
  const auto v = verdict(g);
  c.expect(v.status == VerdictStatus::NotSemigroupAlgebra,
           name + ": status " + std::string(to_string(v.status)));
  c.expect(v.reason == VerdictReason::OddPrimeOrder,
           name + ": reason " + std::string(to_string(v.reason)));
}

void negative_cases(Check &c) {
  expect_odd_prime(c, group(2, {IntegerMatrix{{0, 1}, {-1, -1}}}), 3, "Z/3 on Z^2");
  for (std::size_t p : {3u, 5u, 7u})
    expect_odd_prime(c, group(p - 1, {cyclotomic_companion(p)}), p,
                     "companion p=" + std::to_string(p));
}

void sign_groups(Check &c) {
  for (std::size_t n : {3u, 4u, 5u}) {
    const auto g = group(n, sign_group_generators(n));
    const auto rep = sign_group_singular_locus(g);
    const std::string tag = "n=" + std::to_string(n) + ": ";
    c.expect(rep.component_count == 2 * n * (n - 1),
             tag + "components " + std::to_string(rep.component_count));
    for (const auto &prime : rep.minimal_primes)
      c.expect(n - prime.coordinates.size() == n - 2, tag + "component dimension");
    c.expect(rep.component_dimension == n - 2,
             tag + "dimension " + std::to_string(rep.component_dimension));
    c.expect(rep.intersection_point_count == (std::size_t{1} << n),
             tag + "points " + std::to_string(rep.intersection_point_count));
    const auto v = verdict(g);
    c.expect(v.status == VerdictStatus::NotSemigroupAlgebra, tag + "verdict");
  }
}

// ---------------------------------------------------------------------------
// Property suites

bool is_unit(const Integer &d) { return d == 1 || d == -1; }

void smith_property(Check &c) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> entry(-kSmithEntryBound, kSmithEntryBound);
  for (int trial = 0; trial < kSmithCases; ++trial) {
    IntegerMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        m(i, j) = entry(rng);
    const auto s = smith_normal_form(m);
    const std::string tag = "SNF trial " + std::to_string(trial) + ": ";
    c.expect(s.u * m * s.v == s.d, tag + "u m v != d");
    c.expect(is_unit(det_oracle(s.u)) && is_unit(det_oracle(s.v)), tag + "not unimodular");
    const auto expected = invariant_factors_oracle(m);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        c.expect(s.d(i, j) == (i == j ? expected[i] : Integer(0)), tag + "entry mismatch");
    for (std::size_t i = 0; i + 1 < 3; ++i)
      if (s.d(i + 1, i + 1) != 0)
        c.expect(s.d(i, i) != 0 &&
                     mpz_divisible_p(s.d(i + 1, i + 1).get_mpz_t(), s.d(i, i).get_mpz_t()),
                 tag + "divisibility chain");
  }
}

// Root-system axioms checked from the raw group data.
void root_axioms(Check &c, const std::string &name, const GroupAction &g, const RootDatum &rd) {
  const std::set<IntegerVector> roots(rd.roots.begin(), rd.roots.end());
  for (const auto &a : rd.roots) {
    c.expect(roots.count(negated(a)) == 1, name + ": -a missing for " + show(a));
    for (const auto &b : rd.roots)
      if (b != a && b != negated(a))
        c.expect(rank(IntegerMatrix::from_rows(std::vector{a, b}, a.size())) == 2,
                 name + ": not reduced");
  }
  for (const auto &s : find_reflections(g))
    for (const auto &beta : rd.roots) {
      const Rational k = coroot_pairing(to_rational(beta), s);
      c.expect(k.get_den() == 1, name + ": non-integral pairing");
      IntegerVector image(beta);
      for (std::size_t i = 0; i < image.size(); ++i)
        image[i] -= k.get_num() * s.root[i];
      c.expect(roots.count(image) == 1, name + ": root set not reflection-stable");
    }
  // every positive root is a nonnegative combination of the base
  const auto base = IntegerMatrix::from_rows(rd.base, rd.ambient_rank);
  for (const auto &a : rd.positive_roots) {
    const auto x = solve_rational(base, to_rational(a));
    bool ok = x.has_value();
    if (ok)
      for (const auto &q : *x)
        ok = ok && q.get_den() == 1 && q >= 0;
    c.expect(ok, name + ": positive root outside the base cone " + show(a));
  }
  c.expect(rd.positive_roots.size() * 2 == rd.roots.size(), name + ": positive roots");
  const auto &rho = rd.projections.rho;
  for (std::size_t i = 0; i < rd.rank(); ++i) {
    const auto &lambda = rd.fundamental_weights[i];
    for (const auto &x : lambda * rho)
      c.expect(x == 0, name + ": weight not in pi(V)");
    for (std::size_t j = 0; j < rd.rank(); ++j) {
      const RationalVector moved = lambda * to_rational(g.element(rd.base_reflections[j]));
      for (std::size_t k = 0; k < lambda.size(); ++k)
        c.expect(lambda[k] - moved[k] == (i == j ? Rational(rd.base[j][k]) : Rational(0)),
                 name + ": lambda_i - g_j lambda_i != delta_ij alpha_j");
    }
  }
}

struct Golden {
  std::string name;
  GroupAction g;
  std::optional<std::vector<IntegerVector>> base;
};

std::vector<Golden> golden_cases() {
  return {{"A2", group(2, a2_generators()), a2_base()},
          {"A3", group(3, a3_generators()), a3_base()},
          {"A1", group(1, minus_one_generators()), std::nullopt},
          {"A1xA1", group(2, a1a1_generators()), std::nullopt},
          {"B2", group(2, b2_generators()), std::nullopt}};
}

void height_property(Check &c) {
  std::mt19937 rng(1234);
  for (int i = 0; i < kRandomGroups; ++i) {
    const auto g = random_group(2 + i % 2, rng, kRandomGroupMaxOrder);
    if (g.is_trivial())
      continue;
    c.expect(find_reflections(g).empty() == (height_of_ideal(g) >= 2),
             "E:height fails on random group " + std::to_string(i));
  }
}

// Brute force membership in the monoid generated by basis.
bool representable(const IntegerVector &v, const std::vector<IntegerVector> &basis,
                   std::size_t from = 0) {
  if (std::all_of(v.begin(), v.end(), [](const Integer &x) { return x == 0; }))
    return true;
  for (std::size_t k = from; k < basis.size(); ++k) {
    IntegerVector rest(v);
    bool ok = true;
    for (std::size_t i = 0; i < v.size() && ok; ++i) {
      rest[i] -= basis[k][i];
      ok = rest[i] >= 0;
    }
    if (ok && representable(rest, basis, k))
      return true;
  }
  return false;
}

void hilbert_property(Check &c, const std::string &name, const WeightMonoid &wm) {
  for (const auto &p : wm.box_points)
    c.expect(representable(p, wm.hilbert_basis), name + ": box point not generated " + show(p));
  for (std::size_t k = 0; k < wm.hilbert_basis.size(); ++k) {
    auto fewer = wm.hilbert_basis;
    fewer.erase(fewer.begin() + static_cast<long>(k));
    bool broken = false;
    for (const auto &p : wm.box_points)
      broken = broken || !representable(p, fewer);
    c.expect(broken, name + ": basis element " + show(wm.hilbert_basis[k]) + " is redundant");
  }
}

void invariance_property(Check &c, const std::string &name, const GroupAction &g,
                         const RootDatum &rd, const WeightMonoid &wm) {
  for (const auto &mu : fundamental_invariants(g, rd, wm)) {
    c.expect(is_invariant(g, mu.expanded), name + ": mu not invariant");
    c.expect(mu.expanded.has_integral_support(), name + ": mu escapes A");
    // invariance by direct substitution, without the library check
    for (const auto &h : g.elements())
      c.expect(mu.expanded.apply(h) == mu.expanded, name + ": mu moved by an element");
  }
}

void isotropy_property(Check &c, const std::string &name, const GroupAction &g) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> d(-kIsotropyBound, kIsotropyBound);
  const auto eq = effective_quotient(g);
  for (int k = 0; k < kIsotropyPoints; ++k) {
    IntegerVector a;
    for (std::size_t i = 0; i < g.rank(); ++i)
      a.emplace_back(d(rng));
    // stabilizers by direct matrix action
    std::vector<std::size_t> up, down;
    const IntegerVector abar = eq.project(a);
    for (std::size_t e = 0; e < g.order(); ++e) {
      if (a * g.element(e) == a)
        up.push_back(e);
      if (abar * eq.induced.element(e) == abar)
        down.push_back(e);
    }
    c.expect(up == down, name + ": isotropy differs at " + show(a));
  }
}

void property_suites(Check &c) {
  smith_property(c);
  height_property(c);
  for (const auto &gc : golden_cases()) {
    const auto rd = build_root_system(gc.g, gc.base);
    root_axioms(c, gc.name, gc.g, rd);
    const auto wm = compute_weight_monoid(rd);
    hilbert_property(c, gc.name, wm);
    invariance_property(c, gc.name, gc.g, rd, wm);
  }
  for (const auto &gc : golden_cases())
    isotropy_property(c, gc.name, gc.g);
}

void class_group_torsion(Check &c) {
  std::vector<std::pair<std::string, GroupAction>> groups;
  for (auto &gc : golden_cases())
    groups.emplace_back(gc.name, gc.g);
  groups.emplace_back("swap", group(3, {IntegerMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}));
  std::mt19937 rng(99);
  for (int i = 0; i < kRandomGroups; ++i) {
    auto g = random_group(2 + i % 2, rng, kRandomGroupMaxOrder);
    if (is_reflection_group(g))
      groups.emplace_back("random " + std::to_string(i), std::move(g));
  }
  std::size_t checked = 0, ambiguous = 0;
  for (const auto &[name, g] : groups) {
    ElementaryDivisors cl;
    try {
      cl = class_group(g);
    } catch (const Error &e) {
      c.expect(e.code() == ErrorCode::AmbiguousFormula, name + ": " + e.what());
      ++ambiguous;
      continue;
    }
    ++checked;
    c.expect(cl.free_rank() == 0, name + ": class group not finite");
    c.expect(cl.is_trivial() || Integer(g.order()) % cl.exponent() == 0,
             name + ": |G| = " + std::to_string(g.order()) + " does not kill " + cl.to_string());
  }
  c.notes.push_back(std::to_string(checked) + " class groups checked, " +
                    std::to_string(ambiguous) + " outside the formula's scope");
  c.expect(checked >= golden_cases().size(), "too few class groups computed");
}

} // namespace

int main() {
  bool ok = true;
  ok &= run(1, "rank-2 worked example", kRank2Seconds, rank_two);
  ok &= run(2, "rank-3 worked example", kRank3Seconds, rank_three);
  ok &= run(3, "odd prime order actions", kNegativeSeconds, negative_cases);
  ok &= run(4, "sign group singular locus", kSignGroupSeconds, sign_groups);
  ok &= run(5, "property suites", 0, property_suites);
  ok &= run(6, "class group torsion", 0, class_group_torsion);
  return ok ? 0 : 1;
}
