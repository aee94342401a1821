#include "multinv/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace multinv {

namespace {

Integer floor_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer abs_value(const Integer &a) { return a < 0 ? Integer(-a) : a; }

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix &a,
                                    std::size_t col_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < col_limit && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0)
      ++p;
    if (p == a.rows())
      continue;
    a.swap_rows(r, p);
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j)
      a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0)
        continue;
      const Rational f = -a(i, c);
      a.add_row_multiple(i, r, f);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Standard upper row-style HNF: pivot columns strictly increase, pivots
// positive, entries above a pivot reduced into [0, pivot).
IntegerMatrix upper_hermite(IntegerMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    while (true) {
      std::size_t best = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i)
        if (a(i, c) != 0 &&
            (best == a.rows() || abs_value(a(i, c)) < abs_value(a(best, c))))
          best = i;
      if (best == a.rows())
        break;
      a.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0)
          continue;
        const Integer q = floor_div(a(i, c), a(r, c));
        a.add_row_multiple(i, r, Integer(-q));
        if (a(i, c) != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (a(r, c) == 0)
      continue;
    if (a(r, c) < 0)
      a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(a(i, c), a(r, c));
      if (q != 0)
        a.add_row_multiple(i, r, Integer(-q));
    }
    ++r;
  }
  IntegerMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = a(i, j);
  return out;
}

IntegerMatrix reverse_columns(const IntegerMatrix &m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, m.cols() - 1 - j) = m(i, j);
  return out;
}

} // namespace

// ---------------------------------------------------------------------------

Rational make_rational(const Integer &num, const Integer &den) {
  if (den == 0)
    throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

RationalVector to_rational(std::span<const Integer> v) {
  return RationalVector(v.begin(), v.end());
}

RationalMatrix to_rational(const IntegerMatrix &m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j);
  return out;
}

Integer common_denominator(std::span<const Rational> v) {
  Integer d = 1;
  for (const auto &x : v)
    d = lcm(d, x.get_den());
  return d;
}

Integer common_denominator(const RationalMatrix &m) {
  Integer d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    d = lcm(d, common_denominator(m.row(i)));
  return d;
}

bool is_integral(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational &x) { return x.get_den() == 1; });
}

IntegerVector to_integer(std::span<const Rational> v) {
  IntegerVector out;
  out.reserve(v.size());
  for (const auto &x : v) {
    if (x.get_den() != 1)
      throw Error(ErrorCode::InvalidInput, "non-integral rational vector");
    out.push_back(x.get_num());
  }
  return out;
}

Integer gcd(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto &x : v)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Integer lcm(const Integer &a, const Integer &b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::string to_string(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

Integer determinant(const IntegerMatrix &m) {
  if (!m.is_square())
    throw Error(ErrorCode::DimensionMismatch, "determinant of non-square");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntegerMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return Integer(sign * a(n - 1, n - 1));
}

Rational determinant(const RationalMatrix &m) {
  if (!m.is_square())
    throw Error(ErrorCode::DimensionMismatch, "determinant of non-square");
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < a.rows(); ++c) {
    std::size_t p = c;
    while (p < a.rows() && a(p, c) == 0)
      ++p;
    if (p == a.rows())
      return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0)
        continue;
      const Rational f = -a(i, c) / a(c, c);
      a.add_row_multiple(i, c, f);
    }
  }
  return det;
}

std::size_t rank(const RationalMatrix &m) {
  RationalMatrix a = m;
  return row_reduce(a, a.cols()).size();
}

std::size_t rank(const IntegerMatrix &m) { return rank(to_rational(m)); }

std::optional<RationalMatrix> inverse(const RationalMatrix &m) {
  if (!m.is_square())
    return std::nullopt;
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  if (row_reduce(aug, n).size() != n)
    return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<RationalVector> solve_rational(const RationalMatrix &m,
                                             std::span<const Rational> b) {
  if (b.size() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "solve_rational rhs length");
  // x * m = b  <=>  m^T x^T = b^T
  const std::size_t unknowns = m.rows();
  RationalMatrix aug(m.cols(), unknowns + 1);
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t j = 0; j < unknowns; ++j)
      aug(i, j) = m(j, i);
    aug(i, unknowns) = b[i];
  }
  const auto pivots = row_reduce(aug, unknowns);
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    if (aug(i, unknowns) != 0)
      return std::nullopt;
  RationalVector x(unknowns, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug(i, unknowns);
  return x;
}

std::optional<RationalVector> solve_rational(const IntegerMatrix &m,
                                             std::span<const Rational> b) {
  return solve_rational(to_rational(m), b);
}

IntegerMatrix hermite_normal_form(const IntegerMatrix &m) {
  IntegerMatrix upper = reverse_columns(upper_hermite(reverse_columns(m)));
  const std::size_t r = upper.rows();
  for (std::size_t i = 0; i < r / 2; ++i)
    upper.swap_rows(i, r - 1 - i);
  return upper;
}

SmithForm smith_normal_form(const IntegerMatrix &m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm s{IntegerMatrix::identity(rows), m, IntegerMatrix::identity(cols)};
  IntegerMatrix &d = s.d;

  auto row_op = [&](std::size_t dst, std::size_t src, const Integer &f) {
    d.add_row_multiple(dst, src, f);
    s.u.add_row_multiple(dst, src, f);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer &f) {
    d.add_col_multiple(dst, src, f);
    s.v.add_col_multiple(dst, src, f);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool have_pivot = false;
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 &&
              (pi == rows || abs_value(d(i, j)) < abs_value(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows)
        break;
      have_pivot = true;
      d.swap_rows(t, pi);
      s.u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0)
          continue;
        const Integer q = d(i, t) / d(t, t);
        row_op(i, t, Integer(-q));
        clean = clean && d(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0)
          continue;
        const Integer q = d(t, j) / d(t, t);
        col_op(j, t, Integer(-q));
        clean = clean && d(t, j) == 0;
      }
      if (!clean)
        continue;

      // the pivot must divide the whole remaining block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows)
        break;
      row_op(t, bad, Integer(1));
    }
    if (!have_pivot)
      break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

Sublattice::Sublattice(std::size_t ambient_rank)
    : ambient_rank_(ambient_rank), basis_(0, ambient_rank) {}

Sublattice Sublattice::span(const IntegerMatrix &generators) {
  Sublattice l(generators.cols());
  l.basis_ = hermite_normal_form(generators);
  return l;
}

Sublattice Sublattice::span(std::size_t ambient_rank,
                            std::span<const IntegerVector> generators) {
  return span(IntegerMatrix::from_rows(generators, ambient_rank));
}

Sublattice Sublattice::full(std::size_t ambient_rank) {
  Sublattice l(ambient_rank);
  l.basis_ = IntegerMatrix::identity(ambient_rank);
  return l;
}

std::optional<IntegerVector>
Sublattice::coordinates(std::span<const Integer> v) const {
  if (v.size() != ambient_rank_)
    throw Error(ErrorCode::DimensionMismatch, "lattice vector length");
  const RationalVector target = to_rational(v);
  auto x = solve_rational(basis_, target);
  if (!x || !is_integral(*x))
    return std::nullopt;
  return to_integer(*x);
}

bool Sublattice::contains(std::span<const Integer> v) const {
  return coordinates(v).has_value();
}

bool Sublattice::contains(const Sublattice &other) const {
  if (other.ambient_rank_ != ambient_rank_)
    return false;
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_.row(i)))
      return false;
  return true;
}

bool Sublattice::is_saturated() const {
  const auto q = cokernel_invariants(basis_);
  return q.nontrivial().size() == q.free_rank();
}

// ---------------------------------------------------------------------------

bool ElementaryDivisors::is_trivial() const {
  return std::all_of(divisors.begin(), divisors.end(),
                     [](const Integer &d) { return d == 1; });
}

std::size_t ElementaryDivisors::free_rank() const {
  return static_cast<std::size_t>(
      std::count_if(divisors.begin(), divisors.end(),
                    [](const Integer &d) { return d == 0; }));
}

Integer ElementaryDivisors::order() const {
  Integer n = 1;
  for (const auto &d : divisors)
    n *= d;
  return n;
}

std::vector<Integer> ElementaryDivisors::nontrivial() const {
  std::vector<Integer> out;
  for (const auto &d : divisors)
    if (d != 1)
      out.push_back(d);
  return out;
}

Integer ElementaryDivisors::exponent() const {
  Integer e = 1;
  for (const auto &d : divisors)
    if (d != 0)
      e = lcm(e, d);
  return e;
}

std::string ElementaryDivisors::to_string() const {
  const auto parts = nontrivial();
  if (parts.empty())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i)
      out += " x ";
    out += parts[i] == 0 ? std::string("Z") : "Z/" + parts[i].get_str();
  }
  return out;
}

ElementaryDivisors cokernel_invariants(const IntegerMatrix &relations) {
  const SmithForm s = smith_normal_form(relations);
  ElementaryDivisors out;
  out.divisors.reserve(relations.cols());
  for (std::size_t i = 0; i < relations.cols(); ++i)
    out.divisors.push_back(i < relations.rows() ? s.d(i, i) : Integer(0));
  return out;
}

Sublattice kernel_lattice(const IntegerMatrix &m) {
  const SmithForm s = smith_normal_form(m);
  std::size_t r = 0;
  while (r < std::min(m.rows(), m.cols()) && s.d(r, r) != 0)
    ++r;
  IntegerMatrix gens(m.rows() - r, m.rows());
  for (std::size_t i = r; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j)
      gens(i - r, j) = s.u(i, j);
  return Sublattice::span(gens);
}

Sublattice image_sublattice(const IntegerMatrix &m) {
  return Sublattice::span(m);
}

ElementaryDivisors quotient_invariants(const Sublattice &sub,
                                       const Sublattice &amb) {
  if (sub.ambient_rank() != amb.ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "ambient ranks differ");
  IntegerMatrix coords(sub.rank(), amb.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    const auto c = amb.coordinates(sub.basis().row(i));
    if (!c)
      throw Error(ErrorCode::NotContained,
                  "basis vector " + to_string(sub.basis().row(i)) +
                      " is not in the ambient lattice");
    for (std::size_t j = 0; j < amb.rank(); ++j)
      coords(i, j) = (*c)[j];
  }
  return cokernel_invariants(coords);
}

} // namespace multinv
