#include "multinv/weight_monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace multinv {

namespace {

Integer coordinate_sum(const IntegerVector &v) {
  Integer s = 0;
  for (const auto &x : v)
    s += x;
  return s;
}

// Rays z_i e_i first (by axis), then by coordinate sum, ties broken by
// descending lexicographic order.
bool basis_order(const IntegerVector &a, const IntegerVector &b) {
  auto axis = [](const IntegerVector &v) -> std::ptrdiff_t {
    std::ptrdiff_t found = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        if (found >= 0)
          return -1;
        found = static_cast<std::ptrdiff_t>(i);
      }
    return found;
  };
  const auto aa = axis(a), ab = axis(b);
  if ((aa >= 0) != (ab >= 0))
    return aa >= 0;
  if (aa >= 0)
    return aa < ab;
  const Integer sa = coordinate_sum(a), sb = coordinate_sum(b);
  if (sa != sb)
    return sa < sb;
  return b < a;
}

} // namespace

std::vector<Integer> minimal_multipliers(const Sublattice &projected) {
  const std::size_t r = projected.ambient_rank();
  if (projected.rank() != r)
    throw Error(ErrorCode::InvalidInput, "projected lattice is not full rank");
  std::vector<Integer> z;
  z.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    RationalVector e(r, Rational(0));
    e[i] = 1;
    const auto c = solve_rational(projected.basis(), e);
    z.push_back(common_denominator(*c));
  }
  return z;
}

std::vector<IntegerVector> enumerate_box(const Sublattice &projected,
                                         std::span<const Integer> multipliers,
                                         unsigned threads) {
  const std::size_t r = multipliers.size();
  if (projected.ambient_rank() != r || projected.rank() != r)
    throw Error(ErrorCode::DimensionMismatch, "box and lattice ranks differ");
  if (r == 0)
    return {IntegerVector{}};

  // c in L  <=>  c * B^-1 integral
  const auto binv = inverse(to_rational(projected.basis()));

  std::vector<unsigned long> extent(r);
  unsigned long total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (!multipliers[i].fits_ulong_p() || multipliers[i] <= 0)
      throw Error(ErrorCode::InvalidInput, "multiplier out of range");
    extent[i] = multipliers[i].get_ui() + 1;
    total *= extent[i];
  }

  // Linear index in lexicographic order (last coordinate fastest).
  auto point_at = [&](unsigned long idx) {
    IntegerVector c(r);
    for (std::size_t i = r; i-- > 0;) {
      c[i] = idx % extent[i];
      idx /= extent[i];
    }
    return c;
  };
  auto scan = [&](unsigned long begin, unsigned long end,
                  std::vector<IntegerVector> &out) {
    for (unsigned long idx = begin; idx < end; ++idx) {
      IntegerVector c = point_at(idx);
      if (is_integral(to_rational(c) * *binv))
        out.push_back(std::move(c));
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, 64));
  if (threads == 1 || total < 4096) {
    std::vector<IntegerVector> out;
    scan(0, total, out);
    return out;
  }
  std::vector<std::vector<IntegerVector>> parts(threads);
  std::vector<std::thread> workers;
  const unsigned long chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const unsigned long begin = std::min(total, t * chunk);
    const unsigned long end = std::min(total, begin + chunk);
    workers.emplace_back(scan, begin, end, std::ref(parts[t]));
  }
  for (auto &w : workers)
    w.join();
  std::vector<IntegerVector> out;
  for (auto &p : parts)
    std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

bool generates(std::span<const IntegerVector> points,
               std::span<const IntegerVector> basis) {
  std::vector<const IntegerVector *> order;
  for (const auto &p : points)
    order.push_back(&p);
  std::stable_sort(order.begin(), order.end(),
                   [](const IntegerVector *a, const IntegerVector *b) {
                     return coordinate_sum(*a) < coordinate_sum(*b);
                   });
  std::map<IntegerVector, bool> reachable;
  for (const IntegerVector *p : order) {
    bool ok = std::all_of(p->begin(), p->end(),
                          [](const Integer &x) { return x == 0; });
    for (std::size_t k = 0; !ok && k < basis.size(); ++k) {
      IntegerVector rest(p->size());
      bool nonneg = true;
      for (std::size_t i = 0; i < p->size() && nonneg; ++i) {
        rest[i] = (*p)[i] - basis[k][i];
        nonneg = rest[i] >= 0;
      }
      if (!nonneg)
        continue;
      auto it = reachable.find(rest);
      ok = it != reachable.end() && it->second;
    }
    reachable[*p] = ok;
  }
  return std::all_of(reachable.begin(), reachable.end(),
                     [](const auto &kv) { return kv.second; });
}

std::vector<IntegerVector>
hilbert_basis(std::span<const IntegerVector> points) {
  const std::set<IntegerVector> in_monoid(points.begin(), points.end());
  auto is_zero = [](const IntegerVector &v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Integer &x) { return x == 0; });
  };

  std::vector<IntegerVector> basis;
  for (const auto &m : points) {
    if (is_zero(m))
      continue;
    bool decomposable = false;
    for (const auto &n : points) {
      if (is_zero(n) || n == m)
        continue;
      IntegerVector rest(m.size());
      bool nonneg = true;
      for (std::size_t i = 0; i < m.size() && nonneg; ++i) {
        rest[i] = m[i] - n[i];
        nonneg = rest[i] >= 0;
      }
      if (nonneg && in_monoid.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable)
      basis.push_back(m);
  }
  std::sort(basis.begin(), basis.end(), basis_order);
  if (!generates(points, basis))
    throw Error(ErrorCode::GenerationFailure,
                "indecomposables do not generate the box points");
  return basis;
}

WeightMonoid compute_weight_monoid(const RootDatum &rd, unsigned threads) {
  WeightMonoid wm;
  wm.multipliers = minimal_multipliers(rd.projected_lattice);
  wm.box_points = enumerate_box(rd.projected_lattice, wm.multipliers, threads);
  wm.hilbert_basis = hilbert_basis(wm.box_points);
  const std::size_t r = rd.rank();
  if (wm.hilbert_basis.size() < r)
    throw Error(ErrorCode::GenerationFailure, "fewer generators than rank");
  for (std::size_t i = 0; i < r; ++i) {
    IntegerVector ray(r, Integer(0));
    ray[i] = wm.multipliers[i];
    if (wm.hilbert_basis[i] != ray)
      throw Error(ErrorCode::GenerationFailure,
                  "scaled weight missing from the Hilbert basis");
    wm.cone_rays.push_back(rd.weight(ray));
  }
  return wm;
}

MonoidDescription full_monoid(const EffectiveQuotient &eq,
                              const WeightMonoid &wm) {
  return {eq.fixed, wm};
}

} // namespace multinv
