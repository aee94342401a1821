#pragma once

#include <optional>
#include <vector>

#include "multinv/group_action.hpp"

namespace multinv {

/// A group element g with rank(I - g) = 1. Its root spans Ker(g + I),
/// normalized so the first nonzero coordinate is positive.
struct Reflection {
  std::size_t element_index = 0;
  IntegerMatrix matrix;
  IntegerVector root;
  /// Ker(g - I) + Ker(g + I) is all of A, i.e. g ~ diag(-1, 1, ..., 1).
  bool diagonalizable = false;
};

std::vector<Reflection> find_reflections(const GroupAction &g);

/// The scalar c with v - v*g = c * root. Throws NotMultiple when v - v*g is
/// not proportional to the root (v lies outside the span of the roots
/// plus the fixed space).
Rational coroot_pairing(std::span<const Rational> v, const Reflection &refl);

/// True iff the reflections generate all of G (vacuously for the trivial
/// group).
bool is_reflection_group(const GroupAction &g);

/// Root system of a reflection group together with its weight data.
///
/// `base[i]` is a simple root and `base_reflections[i]` the element index of
/// the reflection it belongs to. Weights satisfy
/// lambda_i - lambda_i * g_j = delta_ij * alpha_j and lie in pi(V).
struct RootDatum {
  std::size_t ambient_rank = 0;
  std::vector<IntegerVector> roots;          // sorted
  std::vector<IntegerVector> positive_roots; // sorted
  std::vector<IntegerVector> base;
  std::vector<std::size_t> base_reflections;
  std::vector<Reflection> reflections;
  std::vector<RationalVector> fundamental_weights;
  /// cartan(i, j) = <alpha_i, alpha_j^vee>; row i holds the weight
  /// coordinates of alpha_i.
  IntegerMatrix cartan;
  Sublattice root_lattice;
  ElementaryDivisors fundamental_group;
  ProjectionPair projections;
  /// pi(A) written in weight coordinates, a full-rank sublattice of Z^r.
  Sublattice projected_lattice;

  std::size_t rank() const noexcept { return base.size(); }
  /// sum_j coords[j] * lambda_j in ambient coordinates.
  RationalVector weight(std::span<const Integer> coords) const;
  /// Weight coordinates of a vector of pi(V); nullopt outside pi(V).
  std::optional<RationalVector>
  weight_coordinates(std::span<const Rational> v) const;
};

/// Builds Phi, a base, the fundamental weights and the root and weight
/// lattices, and checks every root-system axiom (AxiomFailure on violation).
///
/// Without `base_override` the base is read off from the first functional
/// (1, t, t^2, ...) that vanishes on no root. An override must consist of
/// roots forming a base.
RootDatum build_root_system(
    const GroupAction &g,
    const std::optional<std::vector<IntegerVector>> &base_override =
        std::nullopt);

/// Lambda / Z Phi.
ElementaryDivisors fundamental_group_of_roots(const RootDatum &rd);

} // namespace multinv
