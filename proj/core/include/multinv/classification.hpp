#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multinv/weight_monoid.hpp"

namespace multinv {

/// min over g != 1 of rank(I - g). Throws TrivialGroup for G = 1.
std::size_t height_of_ideal(const GroupAction &g);

/// Every g != 1 fixes only 0 (vacuously true for the trivial group).
bool is_fixed_point_free(const GroupAction &g);

/// Class group of k[A]^G for a reflection group G, as Lambda_{B,G} / B with
/// B the sublattice of Abar fixed by the diagonalizable reflections.
/// Throws NotReflectionGroup, or AmbiguousFormula when G does not act on B
/// as a reflection group.
ElementaryDivisors class_group(const GroupAction &g);

enum class VerdictStatus { SemigroupAlgebra, NotSemigroupAlgebra, Unknown };

enum class VerdictReason {
  TrivialAction,       // R = k[A]
  ReflectionGroup,     // R = k[A^G x (pi(A) cap Lambda+)]
  FixedPointFree,      // finite singular locus vs. a single torus fixed point
  OddPrimeOrder,       // special case of FixedPointFree
  SignGroupSingularities,
  OpenQuestion,
};

std::string_view to_string(VerdictStatus s);
std::string_view to_string(VerdictReason r);

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  VerdictReason reason = VerdictReason::OpenQuestion;
  std::string explanation;
  /// Present exactly when status is SemigroupAlgebra.
  std::optional<MonoidDescription> monoid;
};

/// `base_override` only affects the monoid payload of a reflection group.
Verdict verdict(const GroupAction &g, unsigned threads = 1,
                const std::optional<std::vector<IntegerVector>> &base_override =
                    std::nullopt);

/// Minimal prime (a_i - signs_i : i in coordinates) over the ideal I.
struct SignPrime {
  std::vector<std::size_t> coordinates; // 0-based, increasing
  std::vector<int> signs;               // +1 or -1, one per coordinate
};

struct SignGroupReport {
  std::vector<SignPrime> minimal_primes;
  std::size_t component_count = 0;
  /// n - |T|, maximal over the components.
  std::size_t component_dimension = 0;
  /// Sign points (+-1, ..., +-1) lying on at least two components.
  std::size_t intersection_point_count = 0;
};

/// Singular locus of k[A]^G for a group of diagonal sign matrices without
/// reflections. Throws NotSignGroup or HasReflections.
SignGroupReport sign_group_singular_locus(const GroupAction &g);

bool is_sign_group(const GroupAction &g);

} // namespace multinv
