#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "multinv/lattice.hpp"

namespace multinv {

inline constexpr std::size_t kDefaultGroupCap = 10000;

/// A finite group of unimodular integer matrices acting on Z^rank from the
/// right, with every element materialized.
///
/// Element 0 is always the identity; the others follow in the canonical
/// matrix order, so two closures of the same group list elements
/// identically.
class GroupAction {
public:
  std::size_t rank() const noexcept { return rank_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<IntegerMatrix> &elements() const noexcept {
    return elements_;
  }
  const IntegerMatrix &element(std::size_t i) const { return elements_[i]; }
  const std::vector<std::size_t> &generator_indices() const noexcept {
    return generator_indices_;
  }
  std::vector<IntegerMatrix> generators() const;
  std::optional<std::size_t> index_of(const IntegerMatrix &g) const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  friend GroupAction close_group(std::size_t rank,
                                 std::span<const IntegerMatrix> generators,
                                 std::size_t cap);
  friend GroupAction induced_action(const GroupAction &parent,
                                    std::vector<IntegerMatrix> images,
                                    std::size_t rank);

private:
  GroupAction(std::size_t rank, std::vector<IntegerMatrix> elements,
              std::vector<std::size_t> generator_indices);

  std::size_t rank_ = 0;
  std::vector<IntegerMatrix> elements_;
  std::vector<std::size_t> generator_indices_;
  std::vector<std::size_t> sorted_; // element indices in matrix order
};

/// Breadth-first closure of the generators. Throws NotUnimodular for a
/// generator with determinant other than +-1 and GroupTooLarge once the
/// closure exceeds `cap` elements.
GroupAction close_group(std::size_t rank,
                        std::span<const IntegerMatrix> generators,
                        std::size_t cap = kDefaultGroupCap);

/// The action given by `images[i]` standing in for `parent.element(i)`.
/// Element indices are preserved. The images must be pairwise distinct.
GroupAction induced_action(const GroupAction &parent,
                           std::vector<IntegerMatrix> images,
                           std::size_t rank);

/// Distinct images a*g, sorted.
std::vector<RationalVector> orbit(const GroupAction &g,
                                  std::span<const Rational> a);
/// Indices of the elements fixing a.
std::vector<std::size_t> stabilizer(const GroupAction &g,
                                    std::span<const Rational> a);

/// A^G, the saturated sublattice of vectors fixed by every element.
Sublattice fixed_sublattice(const GroupAction &g);

/// rho is the averaging operator |G|^-1 sum g; pi = I - rho.
struct ProjectionPair {
  RationalMatrix rho;
  RationalMatrix pi;
};

ProjectionPair reynolds(const GroupAction &g);

/// Abar = A / A^G with the induced action, plus a complement A' of A^G.
///
/// `projection` (rank x quotient_rank) maps A onto Abar in the chosen basis;
/// `section` (quotient_rank x rank) holds the basis of A' whose image is the
/// standard basis of Abar.
struct EffectiveQuotient {
  Sublattice fixed;
  std::size_t quotient_rank = 0;
  IntegerMatrix projection;
  IntegerMatrix section;
  Sublattice section_lattice;
  GroupAction induced;

  IntegerVector project(std::span<const Integer> a) const;
};

EffectiveQuotient effective_quotient(const GroupAction &g);

} // namespace multinv
