#pragma once

#include <vector>

#include "multinv/root_system.hpp"

namespace multinv {

/// The positive part M+ = pi(A) cap Lambda+ of the invariant monoid.
///
/// Points are written in weight coordinates: c stands for sum_j c_j lambda_j.
/// In these coordinates the zonotope spanned by the m_i = z_i lambda_i is
/// the integer box prod [0, z_i].
struct WeightMonoid {
  std::vector<Integer> multipliers;
  /// Box points lying in M+, lexicographic, including 0.
  std::vector<IntegerVector> box_points;
  /// m_1..m_s; the first r are z_i e_i.
  std::vector<IntegerVector> hilbert_basis;
  /// z_i lambda_i in ambient coordinates.
  std::vector<RationalVector> cone_rays;

  std::size_t rank() const noexcept { return multipliers.size(); }
};

/// Least z_i > 0 with z_i e_i in `projected` (pi(A) in weight coordinates).
std::vector<Integer> minimal_multipliers(const Sublattice &projected);

/// All c in prod [0, z_i] lying in `projected`, lexicographically ordered.
/// The scan is split over `threads` workers; the result does not depend on
/// the split.
std::vector<IntegerVector> enumerate_box(const Sublattice &projected,
                                         std::span<const Integer> multipliers,
                                         unsigned threads = 1);

/// Indecomposable nonzero elements of the box points. Throws
/// GenerationFailure if they do not generate every box point.
std::vector<IntegerVector> hilbert_basis(std::span<const IntegerVector> points);

/// True iff every point is a nonnegative integer combination of `basis`.
/// `points` must be closed under taking differences that stay nonnegative
/// and in the monoid (true for box points).
bool generates(std::span<const IntegerVector> points,
               std::span<const IntegerVector> basis);

WeightMonoid compute_weight_monoid(const RootDatum &rd, unsigned threads = 1);

/// M = U x M+ with U = A^G.
struct MonoidDescription {
  Sublattice units;
  WeightMonoid positive;

  std::size_t unit_rank() const noexcept { return units.rank(); }
  bool is_group() const noexcept { return positive.hilbert_basis.empty(); }
};

MonoidDescription full_monoid(const EffectiveQuotient &eq,
                              const WeightMonoid &wm);

} // namespace multinv
