#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multinv/matrix.hpp"

namespace multinv {

// ---------------------------------------------------------------------------
// Scalar and vector helpers
// ---------------------------------------------------------------------------

Rational make_rational(const Integer &num, const Integer &den);
RationalVector to_rational(std::span<const Integer> v);
RationalMatrix to_rational(const IntegerMatrix &m);

/// Least common multiple of the denominators (1 for an empty vector).
Integer common_denominator(std::span<const Rational> v);
Integer common_denominator(const RationalMatrix &m);
bool is_integral(std::span<const Rational> v);
/// Requires is_integral(v).
IntegerVector to_integer(std::span<const Rational> v);

Integer gcd(std::span<const Integer> v);
Integer lcm(const Integer &a, const Integer &b);

std::string to_string(std::span<const Integer> v);
std::string to_string(std::span<const Rational> v);

// ---------------------------------------------------------------------------
// Linear algebra over Q and Z
// ---------------------------------------------------------------------------

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntegerMatrix &m);
Rational determinant(const RationalMatrix &m);

std::size_t rank(const RationalMatrix &m);
std::size_t rank(const IntegerMatrix &m);

std::optional<RationalMatrix> inverse(const RationalMatrix &m);

/// Some x with x * m = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero, so a unique solution is returned exactly.
std::optional<RationalVector> solve_rational(const RationalMatrix &m,
                                             std::span<const Rational> b);
std::optional<RationalVector> solve_rational(const IntegerMatrix &m,
                                             std::span<const Rational> b);

/// Canonical basis of the row span over Z: lower-triangular echelon form.
/// Row i has its last nonzero entry (the pivot) at column p_i with
/// p_0 < p_1 < ..., pivots are positive, and the entries of later rows in a
/// pivot column are reduced into [0, pivot). Zero rows are dropped.
IntegerMatrix hermite_normal_form(const IntegerMatrix &m);

struct SmithForm {
  IntegerMatrix u;
  IntegerMatrix d;
  IntegerMatrix v;
};

/// u * m * v == d with u, v unimodular and d diagonal, nonnegative, with
/// d_11 | d_22 | ... (zeros last).
SmithForm smith_normal_form(const IntegerMatrix &m);

// ---------------------------------------------------------------------------
// Sublattices and quotients
// ---------------------------------------------------------------------------

/// A subgroup of Z^n stored by its Hermite basis, so equal subgroups compare
/// equal.
class Sublattice {
public:
  Sublattice() = default;
  explicit Sublattice(std::size_t ambient_rank);
  /// Z-span of the rows of `generators`.
  static Sublattice span(const IntegerMatrix &generators);
  static Sublattice span(std::size_t ambient_rank,
                         std::span<const IntegerVector> generators);
  static Sublattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const IntegerMatrix &basis() const noexcept { return basis_; }

  bool contains(std::span<const Integer> v) const;
  bool contains(const Sublattice &other) const;
  /// Integer coordinates of v in the stored basis, or nullopt if v is not in
  /// the lattice.
  std::optional<IntegerVector> coordinates(std::span<const Integer> v) const;
  /// True when Z^n / L is torsion free.
  bool is_saturated() const;

  friend bool operator==(const Sublattice &a, const Sublattice &b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_rank_ = 0;
  IntegerMatrix basis_;
};

/// Invariant factors of a finitely generated abelian group. Nonzero entries
/// form a divisibility chain; each trailing zero stands for a free Z summand.
struct ElementaryDivisors {
  std::vector<Integer> divisors;

  bool is_trivial() const;
  std::size_t free_rank() const;
  /// Group order, or 0 when the group is infinite.
  Integer order() const;
  /// The entries different from 1.
  std::vector<Integer> nontrivial() const;
  /// Exponent of the torsion part (1 for a torsion-free group).
  Integer exponent() const;
  /// Human-readable form, e.g. "Z/3", "Z/2 x Z/4 x Z", or "0".
  std::string to_string() const;

  friend bool operator==(const ElementaryDivisors &,
                         const ElementaryDivisors &) = default;
};

/// Z^cols / (row span of relations).
ElementaryDivisors cokernel_invariants(const IntegerMatrix &relations);

/// Saturated lattice {x : x * m == 0}.
Sublattice kernel_lattice(const IntegerMatrix &m);
/// Row span of m over Z.
Sublattice image_sublattice(const IntegerMatrix &m);
/// Structure of amb / sub; throws NotContained unless sub is inside amb.
ElementaryDivisors quotient_invariants(const Sublattice &sub,
                                       const Sublattice &amb);

} // namespace multinv
