#pragma once

#include <map>
#include <string>
#include <vector>

#include "multinv/weight_monoid.hpp"

namespace multinv {

/// Sparse Laurent polynomial with rational exponents and coefficients.
///
/// Exponents live in (1/N)Z^n: each stored key is N times the true exponent
/// vector. The representation is canonical (no zero coefficients, N minimal),
/// so equality is structural.
class LaurentPolynomial {
public:
  using Terms = std::map<IntegerVector, Rational>;

  explicit LaurentPolynomial(std::size_t rank = 0);
  static LaurentPolynomial constant(std::size_t rank, const Rational &c);
  static LaurentPolynomial monomial(std::span<const Rational> exponent,
                                    const Rational &c = 1);
  static LaurentPolynomial monomial(std::span<const Integer> exponent,
                                    const Rational &c = 1);

  std::size_t rank() const noexcept { return rank_; }
  const Integer &denominator() const noexcept { return denominator_; }
  const Terms &terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Support contained in Z^n.
  bool has_integral_support() const noexcept { return denominator_ == 1; }

  std::vector<RationalVector> support() const;
  Rational coefficient(std::span<const Rational> exponent) const;

  /// Substitutes x^e -> x^(e*g).
  LaurentPolynomial apply(const IntegerMatrix &g) const;
  LaurentPolynomial pow(unsigned long k) const;

  LaurentPolynomial &operator+=(const LaurentPolynomial &o);
  LaurentPolynomial &operator-=(const LaurentPolynomial &o);
  LaurentPolynomial &operator*=(const Rational &c);
  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial &b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial &b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial &a,
                                     const LaurentPolynomial &b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational &c) {
    return a *= c;
  }
  friend bool operator==(const LaurentPolynomial &a,
                         const LaurentPolynomial &b) {
    return a.rank_ == b.rank_ && a.denominator_ == b.denominator_ &&
           a.terms_ == b.terms_;
  }

  /// Canonical rendering, e.g. `a*b^-1 + 3 - a^(2/3)`. Terms are sorted by
  /// descending total degree, then descending lexicographic exponent.
  std::string to_string(const std::vector<std::string> &labels) const;
  std::string to_string() const;

private:
  void rescale(const Integer &n);
  void canonicalize();

  std::size_t rank_ = 0;
  Integer denominator_ = 1;
  Terms terms_;
};

/// a, b, c, ... for rank <= 26, otherwise x1, x2, ...
std::vector<std::string> default_labels(std::size_t rank);

LaurentPolynomial orbit_sum(const GroupAction &g, std::span<const Rational> a);

bool is_invariant(const GroupAction &g, const LaurentPolynomial &p);

/// Unique expansion of an invariant in orbit sums, keyed by the
/// lexicographically largest element of each orbit. Throws NotInvariant.
std::map<RationalVector, Rational>
orbit_sum_decomposition(const GroupAction &g, const LaurentPolynomial &p);

/// mu_i = x^unit * prod_j orb(lambda_j)^{z_ij} for one Hilbert-basis
/// element. The unit is rho(a) for some a in A with pi(a) = weight; it is
/// zero for effective actions.
struct FundamentalInvariant {
  IntegerVector exponents; // z_i1 .. z_ir
  RationalVector weight;   // sum_j z_ij lambda_j
  RationalVector unit;
  LaurentPolynomial expanded;

  /// e.g. `orb(l1)^2*orb(l3)`, or `x^(1/2,1/2,0)*orb(l1)` with a unit
  std::string factored() const;
};

/// One invariant per Hilbert-basis element, each checked to be G-invariant
/// with support in A (SupportEscape otherwise).
std::vector<FundamentalInvariant>
fundamental_invariants(const GroupAction &g, const RootDatum &rd,
                       const WeightMonoid &wm);

} // namespace multinv
