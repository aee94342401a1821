#include "multinv/group_action.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace multinv {

GroupAction::GroupAction(std::size_t rank, std::vector<IntegerMatrix> elements,
                         std::vector<std::size_t> generator_indices)
    : rank_(rank), elements_(std::move(elements)),
      generator_indices_(std::move(generator_indices)) {
  sorted_.resize(elements_.size());
  for (std::size_t i = 0; i < sorted_.size(); ++i)
    sorted_[i] = i;
  std::sort(sorted_.begin(), sorted_.end(), [&](std::size_t a, std::size_t b) {
    return elements_[a] < elements_[b];
  });
}

std::vector<IntegerMatrix> GroupAction::generators() const {
  std::vector<IntegerMatrix> out;
  out.reserve(generator_indices_.size());
  for (std::size_t i : generator_indices_)
    out.push_back(elements_[i]);
  return out;
}

std::optional<std::size_t> GroupAction::index_of(const IntegerMatrix &g) const {
  auto it = std::lower_bound(
      sorted_.begin(), sorted_.end(), g,
      [&](std::size_t idx, const IntegerMatrix &m) { return elements_[idx] < m; });
  if (it == sorted_.end() || !(elements_[*it] == g))
    return std::nullopt;
  return *it;
}

GroupAction close_group(std::size_t rank,
                        std::span<const IntegerMatrix> generators,
                        std::size_t cap) {
  for (const auto &gen : generators) {
    if (gen.rows() != rank || gen.cols() != rank)
      throw Error(ErrorCode::DimensionMismatch,
                  "generator is not " + std::to_string(rank) + "x" +
                      std::to_string(rank));
    const Integer det = determinant(gen);
    if (det != 1 && det != -1)
      throw Error(ErrorCode::NotUnimodular,
                  "generator has determinant " + det.get_str());
  }

  const IntegerMatrix id = IntegerMatrix::identity(rank);
  std::set<IntegerMatrix> seen{id};
  std::deque<IntegerMatrix> frontier{id};
  while (!frontier.empty()) {
    const IntegerMatrix x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto &gen : generators) {
      IntegerMatrix y = x * gen;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw Error(ErrorCode::GroupTooLarge,
                      "closure exceeds " + std::to_string(cap) +
                          " elements; the group is probably infinite");
        frontier.push_back(std::move(y));
      }
    }
  }

  std::vector<IntegerMatrix> elements{id};
  for (const auto &m : seen)
    if (!(m == id))
      elements.push_back(m);

  GroupAction g(rank, std::move(elements), {});
  std::vector<std::size_t> gens;
  for (const auto &gen : generators) {
    const std::size_t idx = *g.index_of(gen);
    if (std::find(gens.begin(), gens.end(), idx) == gens.end())
      gens.push_back(idx);
  }
  g.generator_indices_ = std::move(gens);
  return g;
}

GroupAction induced_action(const GroupAction &parent,
                           std::vector<IntegerMatrix> images,
                           std::size_t rank) {
  if (images.size() != parent.order())
    throw Error(ErrorCode::DimensionMismatch, "one image per element");
  std::set<IntegerMatrix> distinct(images.begin(), images.end());
  if (distinct.size() != images.size())
    throw Error(ErrorCode::AxiomFailure, "induced action is not faithful");
  return GroupAction(rank, std::move(images), parent.generator_indices());
}

std::vector<RationalVector> orbit(const GroupAction &g,
                                  std::span<const Rational> a) {
  std::set<RationalVector> out;
  for (const auto &m : g.elements())
    out.insert(a * to_rational(m));
  return {out.begin(), out.end()};
}

std::vector<std::size_t> stabilizer(const GroupAction &g,
                                    std::span<const Rational> a) {
  const RationalVector v(a.begin(), a.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (v * to_rational(g.element(i)) == v)
      out.push_back(i);
  return out;
}

Sublattice fixed_sublattice(const GroupAction &g) {
  const std::size_t n = g.rank();
  const auto gens = g.generators();
  if (gens.empty())
    return Sublattice::full(n);
  // x (g_k - I) = 0 for every generator, stacked side by side
  IntegerMatrix stacked(n, n * gens.size());
  const IntegerMatrix id = IntegerMatrix::identity(n);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const IntegerMatrix diff = gens[k] - id;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        stacked(i, k * n + j) = diff(i, j);
  }
  return kernel_lattice(stacked);
}

ProjectionPair reynolds(const GroupAction &g) {
  const std::size_t n = g.rank();
  RationalMatrix rho(n, n);
  for (const auto &m : g.elements())
    rho += to_rational(m);
  rho *= Rational(1, static_cast<unsigned long>(g.order()));
  RationalMatrix pi = RationalMatrix::identity(n) - rho;
  return {std::move(rho), std::move(pi)};
}

IntegerVector EffectiveQuotient::project(std::span<const Integer> a) const {
  return a * projection;
}

EffectiveQuotient effective_quotient(const GroupAction &g) {
  const std::size_t n = g.rank();
  Sublattice fixed = fixed_sublattice(g);
  const std::size_t f = fixed.rank();
  const std::size_t q = n - f;

  if (f == 0) {
    return {std::move(fixed),
            n,
            IntegerMatrix::identity(n),
            IntegerMatrix::identity(n),
            Sublattice::full(n),
            g};
  }

  // u * F * v = [I_f | 0] for the saturated basis F of A^G. In coordinates
  // y = x v, A^G is spanned by the first f unit vectors, so the last q
  // columns of v project onto A/A^G and the last q rows of v^-1 span a
  // complement.
  const SmithForm s = smith_normal_form(fixed.basis());
  const auto vinv = inverse(to_rational(s.v));
  if (!vinv)
    throw Error(ErrorCode::AxiomFailure, "Smith transform is singular");

  IntegerMatrix projection(n, q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < q; ++j)
      projection(i, j) = s.v(i, f + j);
  IntegerMatrix section(q, n);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational &x = (*vinv)(f + i, j);
      if (x.get_den() != 1)
        throw Error(ErrorCode::AxiomFailure, "Smith transform not unimodular");
      section(i, j) = x.get_num();
    }

  std::vector<IntegerMatrix> images;
  images.reserve(g.order());
  for (const auto &m : g.elements())
    images.push_back(section * m * projection);

  Sublattice section_lattice = Sublattice::span(section);
  GroupAction induced = induced_action(g, std::move(images), q);
  return {std::move(fixed), q, std::move(projection), std::move(section),
          std::move(section_lattice), std::move(induced)};
}

} // namespace multinv
