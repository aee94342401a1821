#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "multinv/error.hpp"
#include "multinv/group_action.hpp"
#include "multinv/laurent.hpp"

namespace multinv::test {

inline IntegerVector ivec(std::initializer_list<long> xs) {
  IntegerVector v;
  for (long x : xs)
    v.emplace_back(x);
  return v;
}

inline RationalVector qvec(std::initializer_list<const char *> xs) {
  RationalVector v;
  for (const char *x : xs) {
    Rational q(x);
    q.canonicalize();
    v.push_back(q);
  }
  return v;
}

inline GroupAction group(std::size_t rank, std::vector<IntegerMatrix> gens) {
  return close_group(rank, gens);
}

// The A2 and A3 examples, with their standard bases.
inline std::vector<IntegerMatrix> a2_generators() {
  return {IntegerMatrix{{0, 1}, {1, 0}}, IntegerMatrix{{1, -1}, {0, -1}}};
}
inline std::vector<IntegerVector> a2_base() {
  return {ivec({-1, 0}), ivec({0, 1})};
}
inline std::vector<IntegerMatrix> a3_generators() {
  return {IntegerMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
          IntegerMatrix{{1, 0, -1}, {0, 1, -1}, {0, 0, -1}},
          IntegerMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
}
inline std::vector<IntegerVector> a3_base() {
  return {ivec({-1, 0, 1}), ivec({1, -1, 0}), ivec({0, 0, -1})};
}
inline std::vector<IntegerMatrix> a1a1_generators() {
  return {IntegerMatrix{{-1, 0}, {0, 1}}, IntegerMatrix{{1, 0}, {0, -1}}};
}
inline std::vector<IntegerMatrix> b2_generators() {
  return {IntegerMatrix{{-1, 0}, {0, 1}}, IntegerMatrix{{0, 1}, {1, 0}}};
}
inline std::vector<IntegerMatrix> minus_one_generators() {
  return {IntegerMatrix{{-1}}};
}

/// Companion matrix of 1 + x + ... + x^(p-1), last row all -1.
inline IntegerMatrix cyclotomic_companion(std::size_t p) {
  const std::size_t n = p - 1;
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    m(i, i + 1) = 1;
  for (std::size_t j = 0; j < n; ++j)
    m(n - 1, j) = -1;
  return m;
}

/// Generators of the diagonal sign matrices of determinant 1.
inline std::vector<IntegerMatrix> sign_group_generators(std::size_t n) {
  std::vector<IntegerMatrix> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntegerMatrix g = IntegerMatrix::identity(n);
    g(i, i) = -1;
    g(i + 1, i + 1) = -1;
    gens.push_back(g);
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Smith form oracle
// ---------------------------------------------------------------------------

// Cofactor expansion.
inline Integer det_oracle(const IntegerMatrix &m) {
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  if (n == 1)
    return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntegerMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != j)
          minor(i - 1, kk++) = m(i, k);
    const Integer term = m(0, j) * det_oracle(minor);
    total += (j % 2 ? -term : term);
  }
  return total;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (static_cast<std::size_t>(__builtin_popcount(mask)) == k) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1)
          s.push_back(i);
      out.push_back(s);
    }
  return out;
}

// Invariant factors from determinantal divisors: s_k = d_k / d_(k-1) with
// d_k the gcd of all k x k minors.
inline std::vector<Integer> invariant_factors_oracle(const IntegerMatrix &m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<Integer> d{1};
  for (std::size_t k = 1; k <= n; ++k) {
    Integer g = 0;
    for (const auto &rows : subsets(m.rows(), k))
      for (const auto &cols : subsets(m.cols(), k)) {
        IntegerMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            minor(i, j) = m(rows[i], cols[j]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det_oracle(minor).get_mpz_t());
      }
    d.push_back(g);
  }
  std::vector<Integer> s;
  for (std::size_t k = 1; k <= n; ++k)
    s.push_back(d[k] == 0 ? Integer(0) : Integer(d[k] / d[k - 1]));
  return s;
}

// ---------------------------------------------------------------------------
// Polynomial oracle: integer exponents and coefficients, schoolbook
// convolution. Shares no code with LaurentPolynomial.
// ---------------------------------------------------------------------------

struct Poly {
  std::map<std::vector<long>, long> terms;

  static Poly term(std::vector<long> e, long c = 1) {
    Poly p;
    p.terms[std::move(e)] = c;
    return p;
  }
  /// Sum of monomials with coefficient 1.
  static Poly sum(const std::vector<std::vector<long>> &es) {
    Poly p;
    for (const auto &e : es)
      p.terms[e] += 1;
    return p;
  }
  friend Poly operator*(const Poly &a, const Poly &b) {
    Poly out;
    for (const auto &[ea, ca] : a.terms)
      for (const auto &[eb, cb] : b.terms) {
        std::vector<long> e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i)
          e[i] = ea[i] + eb[i];
        out.terms[e] += ca * cb;
      }
    std::erase_if(out.terms, [](const auto &kv) { return kv.second == 0; });
    return out;
  }
  Poly pow(int k) const {
    Poly out = term(std::vector<long>(terms.begin()->first.size(), 0));
    for (int i = 0; i < k; ++i)
      out = out * *this;
    return out;
  }
};

/// Terms of a polynomial with integral support as an oracle Poly.
inline Poly as_poly(const LaurentPolynomial &p) {
  Poly out;
  if (!p.has_integral_support())
    return out;
  for (const auto &[key, c] : p.terms()) {
    std::vector<long> e;
    for (const auto &x : key)
      e.push_back(x.get_si());
    out.terms[e] = Rational(c).get_num().get_si();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random finite groups
// ---------------------------------------------------------------------------

/// Unimodular matrix built from a few random elementary operations.
inline IntegerMatrix random_unimodular(std::size_t n, std::mt19937 &rng) {
  IntegerMatrix p = IntegerMatrix::identity(n);
  if (n < 2)
    return p;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> coeff(-2, 2);
  for (int step = 0; step < 4; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i != j)
      p.add_row_multiple(i, j, Integer(coeff(rng)));
  }
  return p;
}

/// Finite-order matrices: signed permutations, plus the hexagonal lattice
/// symmetries in rank 2.
inline std::vector<IntegerMatrix> finite_order_pool(std::size_t n) {
  std::vector<IntegerMatrix> pool;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i)
    perm[i] = i;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      IntegerMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        m(i, perm[i]) = (mask >> i) & 1 ? -1 : 1;
      pool.push_back(m);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (n == 2) {
    pool.push_back(IntegerMatrix{{0, -1}, {1, 1}});
    pool.push_back(IntegerMatrix{{1, 1}, {-1, 0}});
    pool.push_back(IntegerMatrix{{0, 1}, {-1, -1}});
    pool.push_back(IntegerMatrix{{1, 0}, {-1, -1}});
  }
  return pool;
}

/// Random conjugate P^-1 H P of a random subgroup H of order <= max_order.
inline GroupAction random_group(std::size_t n, std::mt19937 &rng,
                                std::size_t max_order = 8) {
  const auto pool = finite_order_pool(n);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> count(1, 2);
  const IntegerMatrix p = random_unimodular(n, rng);
  const auto p_inv = inverse(to_rational(p));
  for (;;) {
    std::vector<IntegerMatrix> gens;
    for (int k = count(rng); k > 0; --k)
      gens.push_back(pool[pick(rng)]);
    std::optional<GroupAction> h;
    try {
      h = close_group(n, gens, 64);
    } catch (const Error &e) {
      if (e.code() != ErrorCode::GroupTooLarge)
        throw;
      continue; // two finite-order matrices can generate an infinite group
    }
    if (h->order() > max_order)
      continue;
    std::vector<IntegerMatrix> conj;
    for (const auto &g : gens) {
      const RationalMatrix c = *p_inv * to_rational(g) * to_rational(p);
      IntegerMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          m(i, j) = c(i, j).get_num();
      conj.push_back(m);
    }
    return close_group(n, conj);
  }
}

} // namespace multinv::test
