#include "multinv/root_system.hpp"

#include <algorithm>
#include <set>

namespace multinv {

namespace {

void normalize_sign(IntegerVector &v) {
  for (const auto &x : v) {
    if (x == 0)
      continue;
    if (x < 0)
      for (auto &y : v)
        y = -y;
    return;
  }
}

IntegerVector negated(const IntegerVector &v) {
  IntegerVector out(v);
  for (auto &x : out)
    x = -x;
  return out;
}

[[noreturn]] void axiom_failure(const std::string &what) {
  throw Error(ErrorCode::AxiomFailure, what);
}

// Column functional h with v * h = <v, alpha^vee> for the reflection g
// attached to alpha, from v - v*g = <v, alpha^vee> alpha.
RationalVector coroot_functional(const IntegerMatrix &g,
                                 const IntegerVector &alpha) {
  const std::size_t n = alpha.size();
  std::size_t k = 0;
  while (k < n && alpha[k] == 0)
    ++k;
  if (k == n)
    axiom_failure("zero root");
  RationalVector h(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer entry = (i == k ? Integer(1) : Integer(0)) - g(i, k);
    h[i] = make_rational(entry, alpha[k]);
  }
  return h;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

// Coordinates of every root in the base; each root must be an integral
// combination with coefficients of one sign.
std::vector<IntegerVector>
base_coordinates(const std::vector<IntegerVector> &roots,
                 const std::vector<IntegerVector> &base, std::size_t n) {
  const IntegerMatrix b = IntegerMatrix::from_rows(base, n);
  std::vector<IntegerVector> coords;
  coords.reserve(roots.size());
  for (const auto &root : roots) {
    const auto c = solve_rational(b, to_rational(root));
    if (!c || !is_integral(*c))
      throw Error(ErrorCode::InvalidInput,
                  "root " + to_string(root) +
                      " is not an integral combination of the base");
    const IntegerVector ci = to_integer(*c);
    const bool nonneg =
        std::all_of(ci.begin(), ci.end(), [](const Integer &x) { return x >= 0; });
    const bool nonpos =
        std::all_of(ci.begin(), ci.end(), [](const Integer &x) { return x <= 0; });
    if (!nonneg && !nonpos)
      throw Error(ErrorCode::InvalidInput,
                  "root " + to_string(root) +
                      " has coefficients of mixed sign in the base");
    coords.push_back(ci);
  }
  return coords;
}

std::vector<IntegerVector> default_base(const std::vector<IntegerVector> &roots,
                                        std::size_t n) {
  IntegerVector f(n);
  for (Integer t = 1;; ++t) {
    Integer p = 1;
    for (std::size_t i = 0; i < n; ++i, p *= t)
      f[i] = p;
    bool generic = true;
    for (const auto &root : roots) {
      Integer s = 0;
      for (std::size_t i = 0; i < n; ++i)
        s += f[i] * root[i];
      if (s == 0) {
        generic = false;
        break;
      }
    }
    if (generic)
      break;
  }

  std::set<IntegerVector> positive;
  for (const auto &root : roots) {
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i)
      s += f[i] * root[i];
    if (s > 0)
      positive.insert(root);
  }
  std::vector<IntegerVector> base;
  for (const auto &alpha : positive) {
    bool decomposable = false;
    for (const auto &beta : positive) {
      IntegerVector diff(n);
      for (std::size_t i = 0; i < n; ++i)
        diff[i] = alpha[i] - beta[i];
      if (positive.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable)
      base.push_back(alpha);
  }
  return base;
}

} // namespace

std::vector<Reflection> find_reflections(const GroupAction &g) {
  const std::size_t n = g.rank();
  const IntegerMatrix id = IntegerMatrix::identity(n);
  std::vector<Reflection> out;
  for (std::size_t i = 1; i < g.order(); ++i) {
    const IntegerMatrix &m = g.element(i);
    if (rank(id - m) != 1)
      continue;
    if (!(m * m == id))
      axiom_failure("rank-one element of order > 2");
    const Sublattice minus = kernel_lattice(m + id);
    const Sublattice plus = kernel_lattice(m - id);
    if (minus.rank() != 1 || plus.rank() + 1 != n)
      axiom_failure("reflection eigenlattices have wrong rank");
    Reflection r;
    r.element_index = i;
    r.matrix = m;
    r.root = minus.basis().row_vector(0);
    normalize_sign(r.root);
    IntegerMatrix both(n, n);
    for (std::size_t a = 0; a + 1 < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        both(a, b) = plus.basis()(a, b);
    for (std::size_t b = 0; b < n; ++b)
      both(n - 1, b) = r.root[b];
    const Integer det = determinant(both);
    r.diagonalizable = det == 1 || det == -1;
    out.push_back(std::move(r));
  }
  return out;
}

Rational coroot_pairing(std::span<const Rational> v, const Reflection &refl) {
  const RationalVector image = v * to_rational(refl.matrix);
  RationalVector diff(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    diff[i] = v[i] - image[i];
  std::size_t k = 0;
  while (k < refl.root.size() && refl.root[k] == 0)
    ++k;
  const Rational c = diff[k] / Rational(refl.root[k]);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (diff[i] != c * refl.root[i])
      throw Error(ErrorCode::NotMultiple,
                  "v - v*g is not a multiple of the root " +
                      to_string(refl.root));
  return c;
}

bool is_reflection_group(const GroupAction &g) {
  if (g.is_trivial())
    return true;
  const auto refls = find_reflections(g);
  if (refls.empty())
    return false;
  std::vector<IntegerMatrix> gens;
  for (const auto &r : refls)
    gens.push_back(r.matrix);
  return close_group(g.rank(), gens, g.order()).order() == g.order();
}

RationalVector RootDatum::weight(std::span<const Integer> coords) const {
  RationalVector out(ambient_rank, Rational(0));
  for (std::size_t j = 0; j < coords.size(); ++j)
    for (std::size_t i = 0; i < ambient_rank; ++i)
      out[i] += coords[j] * fundamental_weights[j][i];
  return out;
}

std::optional<RationalVector>
RootDatum::weight_coordinates(std::span<const Rational> v) const {
  const RationalMatrix w = RationalMatrix::from_rows(
      std::span<const RationalVector>(fundamental_weights), ambient_rank);
  return solve_rational(w, v);
}

RootDatum build_root_system(
    const GroupAction &g,
    const std::optional<std::vector<IntegerVector>> &base_override) {
  if (!is_reflection_group(g))
    throw Error(ErrorCode::NotReflectionGroup,
                "the reflections of G generate a proper subgroup");
  const std::size_t n = g.rank();
  RootDatum rd;
  rd.ambient_rank = n;
  rd.reflections = find_reflections(g);
  rd.projections = reynolds(g);

  std::set<IntegerVector> root_set;
  for (const auto &r : rd.reflections) {
    root_set.insert(r.root);
    root_set.insert(negated(r.root));
  }
  rd.roots.assign(root_set.begin(), root_set.end());

  const std::size_t r = rank(rd.projections.pi);
  if (rank(IntegerMatrix::from_rows(rd.roots, n)) != r)
    axiom_failure("roots do not span pi(V)");

  for (std::size_t a = 0; a < rd.roots.size(); ++a)
    for (std::size_t b = a + 1; b < rd.roots.size(); ++b) {
      const IntegerVector pair[] = {rd.roots[a], rd.roots[b]};
      if (rank(IntegerMatrix::from_rows(pair, n)) == 1 &&
          rd.roots[b] != negated(rd.roots[a]))
        axiom_failure("root system is not reduced");
    }

  if (base_override) {
    for (const auto &alpha : *base_override) {
      if (alpha.size() != n)
        throw Error(ErrorCode::InvalidInput,
                    "base vector " + to_string(alpha) + " has wrong length");
      if (!root_set.count(alpha))
        throw Error(ErrorCode::InvalidInput,
                    "base vector " + to_string(alpha) + " is not a root");
    }
    rd.base = *base_override;
  } else {
    rd.base = default_base(rd.roots, n);
  }
  if (rd.base.size() != r ||
      (r > 0 && rank(IntegerMatrix::from_rows(rd.base, n)) != r))
    throw Error(ErrorCode::InvalidInput,
                "base must consist of " + std::to_string(r) +
                    " independent roots");
  const auto coords = base_coordinates(rd.roots, rd.base, n);
  for (std::size_t k = 0; k < rd.roots.size(); ++k)
    if (std::all_of(coords[k].begin(), coords[k].end(),
                    [](const Integer &x) { return x >= 0; }))
      rd.positive_roots.push_back(rd.roots[k]);

  for (const auto &alpha : rd.base) {
    const IntegerVector key = [&] {
      IntegerVector a = alpha;
      normalize_sign(a);
      return a;
    }();
    auto it = std::find_if(rd.reflections.begin(), rd.reflections.end(),
                           [&](const Reflection &x) { return x.root == key; });
    if (it == rd.reflections.end())
      axiom_failure("simple root without reflection");
    rd.base_reflections.push_back(it->element_index);
  }

  // lambda * [h_1 .. h_r | rho] = [e_i | 0]
  std::vector<RationalVector> coroots;
  for (std::size_t j = 0; j < r; ++j)
    coroots.push_back(
        coroot_functional(g.element(rd.base_reflections[j]), rd.base[j]));
  RationalMatrix system(n, r + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j)
      system(i, j) = coroots[j][i];
    for (std::size_t j = 0; j < n; ++j)
      system(i, r + j) = rd.projections.rho(i, j);
  }
  for (std::size_t i = 0; i < r; ++i) {
    RationalVector rhs(r + n, Rational(0));
    rhs[i] = 1;
    auto lambda = solve_rational(system, rhs);
    if (!lambda)
      axiom_failure("fundamental weight equations are inconsistent");
    rd.fundamental_weights.push_back(std::move(*lambda));
  }

  rd.cartan = IntegerMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Rational c = dot(to_rational(rd.base[i]), coroots[j]);
      if (c.get_den() != 1)
        axiom_failure("non-integral Cartan entry");
      rd.cartan(i, j) = c.get_num();
    }

  // Crystallographic closure and integrality of all pairings.
  for (const auto &refl : rd.reflections) {
    const RationalMatrix m = to_rational(refl.matrix);
    for (const auto &beta : rd.roots) {
      const RationalVector qb = to_rational(beta);
      if (coroot_pairing(qb, refl).get_den() != 1)
        axiom_failure("non-integral root pairing");
      const RationalVector image = qb * m;
      if (!is_integral(image) || !root_set.count(to_integer(image)))
        axiom_failure("reflection does not permute the roots");
    }
  }

  // lambda_i - lambda_i g_j = delta_ij alpha_j and rho(lambda_i) = 0.
  for (std::size_t i = 0; i < r; ++i) {
    const RationalVector &lambda = rd.fundamental_weights[i];
    for (std::size_t j = 0; j < r; ++j) {
      const RationalVector image =
          lambda * to_rational(g.element(rd.base_reflections[j]));
      for (std::size_t k = 0; k < n; ++k) {
        const Rational expected = i == j ? Rational(rd.base[j][k]) : Rational(0);
        if (lambda[k] - image[k] != expected)
          axiom_failure("weight equation fails");
      }
    }
    const RationalVector avg = lambda * rd.projections.rho;
    if (std::any_of(avg.begin(), avg.end(),
                    [](const Rational &x) { return x != 0; }))
      axiom_failure("weight outside pi(V)");
  }

  rd.root_lattice =
      Sublattice::span(IntegerMatrix::from_rows(rd.roots, n));

  // pi(A) inside Lambda, written in weight coordinates.
  std::vector<IntegerVector> projected;
  if (r > 0) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto c = rd.weight_coordinates(rd.projections.pi.row(k));
      if (!c || !is_integral(*c))
        axiom_failure("pi(A) is not contained in the weight lattice");
      projected.push_back(to_integer(*c));
    }
  }
  rd.projected_lattice = Sublattice::span(IntegerMatrix::from_rows(projected, r));
  if (rd.projected_lattice.rank() != r)
    axiom_failure("pi(A) does not have full rank");
  for (std::size_t i = 0; i < r; ++i)
    if (!rd.projected_lattice.contains(rd.cartan.row(i)))
      axiom_failure("root lattice is not contained in pi(A)");

  rd.fundamental_group = cokernel_invariants(rd.cartan);
  return rd;
}

ElementaryDivisors fundamental_group_of_roots(const RootDatum &rd) {
  return cokernel_invariants(rd.cartan);
}

} // namespace multinv
