#include "multinv/laurent.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace multinv {

LaurentPolynomial::LaurentPolynomial(std::size_t rank) : rank_(rank) {}

LaurentPolynomial LaurentPolynomial::constant(std::size_t rank,
                                              const Rational &c) {
  LaurentPolynomial p(rank);
  if (c != 0)
    p.terms_.emplace(IntegerVector(rank, Integer(0)), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(std::span<const Rational> exponent,
                                              const Rational &c) {
  LaurentPolynomial p(exponent.size());
  if (c == 0)
    return p;
  p.denominator_ = common_denominator(exponent);
  IntegerVector key(exponent.size());
  for (std::size_t i = 0; i < exponent.size(); ++i) {
    const Rational scaled = exponent[i] * p.denominator_;
    key[i] = scaled.get_num();
  }
  p.terms_.emplace(std::move(key), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(std::span<const Integer> exponent,
                                              const Rational &c) {
  return monomial(to_rational(exponent), c);
}

std::vector<RationalVector> LaurentPolynomial::support() const {
  std::vector<RationalVector> out;
  out.reserve(terms_.size());
  for (const auto &[key, c] : terms_) {
    RationalVector e(rank_);
    for (std::size_t i = 0; i < rank_; ++i)
      e[i] = make_rational(key[i], denominator_);
    out.push_back(std::move(e));
  }
  return out;
}

Rational LaurentPolynomial::coefficient(std::span<const Rational> exponent) const {
  IntegerVector key(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    const Rational scaled = exponent[i] * denominator_;
    if (scaled.get_den() != 1)
      return 0;
    key[i] = scaled.get_num();
  }
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::rescale(const Integer &n) {
  if (n == denominator_)
    return;
  const Integer factor = n / denominator_;
  Terms scaled;
  for (auto &[key, c] : terms_) {
    IntegerVector k(key);
    for (auto &x : k)
      x *= factor;
    scaled.emplace(std::move(k), c);
  }
  terms_ = std::move(scaled);
  denominator_ = n;
}

void LaurentPolynomial::canonicalize() {
  std::erase_if(terms_, [](const auto &kv) { return kv.second == 0; });
  if (terms_.empty()) {
    denominator_ = 1;
    return;
  }
  Integer g = denominator_;
  for (const auto &[key, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gcd(key).get_mpz_t());
    if (g == 1)
      return;
  }
  Terms reduced;
  for (const auto &[key, c] : terms_) {
    IntegerVector k(key);
    for (auto &x : k)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    reduced.emplace(std::move(k), c);
  }
  terms_ = std::move(reduced);
  denominator_ /= g;
}

LaurentPolynomial LaurentPolynomial::apply(const IntegerMatrix &g) const {
  if (g.rows() != rank_ || g.cols() != rank_)
    throw Error(ErrorCode::DimensionMismatch, "substitution matrix shape");
  LaurentPolynomial out(rank_);
  out.denominator_ = denominator_;
  for (const auto &[key, c] : terms_)
    out.terms_[key * g] += c;
  out.canonicalize();
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned long k) const {
  LaurentPolynomial result = constant(rank_, 1);
  LaurentPolynomial base = *this;
  while (k) {
    if (k & 1)
      result = result * base;
    k >>= 1;
    if (k)
      base = base * base;
  }
  return result;
}

LaurentPolynomial &LaurentPolynomial::operator+=(const LaurentPolynomial &o) {
  if (o.rank_ != rank_)
    throw Error(ErrorCode::DimensionMismatch, "Laurent ranks differ");
  const Integer n = lcm(denominator_, o.denominator_);
  rescale(n);
  LaurentPolynomial other = o;
  other.rescale(n);
  for (const auto &[key, c] : other.terms_)
    terms_[key] += c;
  canonicalize();
  return *this;
}

LaurentPolynomial &LaurentPolynomial::operator-=(const LaurentPolynomial &o) {
  return *this += o * Rational(-1);
}

LaurentPolynomial &LaurentPolynomial::operator*=(const Rational &c) {
  for (auto &[key, coeff] : terms_)
    coeff *= c;
  canonicalize();
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial &a,
                            const LaurentPolynomial &b) {
  if (a.rank_ != b.rank_)
    throw Error(ErrorCode::DimensionMismatch, "Laurent ranks differ");
  const Integer n = lcm(a.denominator_, b.denominator_);
  LaurentPolynomial x = a, y = b;
  x.rescale(n);
  y.rescale(n);
  LaurentPolynomial out(a.rank_);
  out.denominator_ = n;
  IntegerVector key(a.rank_);
  for (const auto &[ka, ca] : x.terms_)
    for (const auto &[kb, cb] : y.terms_) {
      for (std::size_t i = 0; i < key.size(); ++i)
        key[i] = ka[i] + kb[i];
      out.terms_[key] += ca * cb;
    }
  out.canonicalize();
  return out;
}

std::string LaurentPolynomial::to_string() const {
  return to_string(default_labels(rank_));
}

std::string
LaurentPolynomial::to_string(const std::vector<std::string> &labels) const {
  if (terms_.empty())
    return "0";
  struct Entry {
    Integer degree;
    const IntegerVector *key;
    const Rational *coeff;
  };
  std::vector<Entry> entries;
  for (const auto &[key, c] : terms_) {
    Integer d = 0;
    for (const auto &x : key)
      d += x;
    entries.push_back({d, &key, &c});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) {
    if (a.degree != b.degree)
      return a.degree > b.degree;
    return *b.key < *a.key;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto &e : entries) {
    const Rational &c = *e.coeff;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < rank_; ++i) {
      const Integer &k = (*e.key)[i];
      if (k == 0)
        continue;
      const Rational ex = make_rational(k, denominator_);
      std::string f = i < labels.size() ? labels[i] : "x" + std::to_string(i + 1);
      if (ex != 1)
        f += ex.get_den() == 1 ? "^" + ex.get_str() : "^(" + ex.get_str() + ")";
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1)
      os << mag.get_str() << '*';
    for (std::size_t i = 0; i < factors.size(); ++i)
      os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::vector<std::string> default_labels(std::size_t rank) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rank; ++i)
    out.push_back(rank <= 26 ? std::string(1, static_cast<char>('a' + i))
                             : "x" + std::to_string(i + 1));
  return out;
}

// ---------------------------------------------------------------------------

LaurentPolynomial orbit_sum(const GroupAction &g, std::span<const Rational> a) {
  LaurentPolynomial p(g.rank());
  for (const auto &x : orbit(g, a))
    p += LaurentPolynomial::monomial(x);
  return p;
}

bool is_invariant(const GroupAction &g, const LaurentPolynomial &p) {
  return std::all_of(g.elements().begin(), g.elements().end(),
                     [&](const IntegerMatrix &m) { return p.apply(m) == p; });
}

std::map<RationalVector, Rational>
orbit_sum_decomposition(const GroupAction &g, const LaurentPolynomial &p) {
  if (!is_invariant(g, p))
    throw Error(ErrorCode::NotInvariant, "polynomial is not G-invariant");
  std::map<RationalVector, Rational> out;
  LaurentPolynomial rest = p;
  while (!rest.is_zero()) {
    const RationalVector e = rest.support().front();
    const Rational c = rest.coefficient(e);
    const auto orb = orbit(g, e);
    out[orb.back()] = c;
    rest -= orbit_sum(g, e) * c;
  }
  return out;
}

std::string FundamentalInvariant::factored() const {
  std::string out;
  if (std::any_of(unit.begin(), unit.end(), [](const Rational &x) { return x != 0; }))
    out = "x^" + multinv::to_string(std::span<const Rational>(unit));
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += "orb(l" + std::to_string(j + 1) + ")";
    if (exponents[j] != 1)
      out += "^" + exponents[j].get_str();
  }
  return out.empty() ? "1" : out;
}

std::vector<FundamentalInvariant>
fundamental_invariants(const GroupAction &g, const RootDatum &rd,
                       const WeightMonoid &wm) {
  const std::size_t r = rd.rank();
  std::vector<LaurentPolynomial> orbit_sums;
  for (const auto &lambda : rd.fundamental_weights)
    orbit_sums.push_back(orbit_sum(g, lambda));

  // height along the base, used to locate the leading term of each mu_i
  const IntegerMatrix base = IntegerMatrix::from_rows(rd.base, rd.ambient_rank);
  auto height = [&](std::span<const Rational> v) {
    const auto c = solve_rational(base, v);
    if (!c)
      throw Error(ErrorCode::AxiomFailure, "exponent outside pi(V)");
    Rational h = 0;
    for (const auto &x : *c)
      h += x;
    return h;
  };

  // pi(A) is spanned by the images of the complement A' of A^G, injectively
  const EffectiveQuotient eq = effective_quotient(g);
  const RationalMatrix pi_section = to_rational(eq.section) * rd.projections.pi;
  auto lift = [&](std::span<const Rational> w) -> std::optional<IntegerVector> {
    if (eq.quotient_rank == 0)
      return IntegerVector{};
    const auto c = solve_rational(pi_section, w);
    if (!c || !is_integral(*c))
      return std::nullopt;
    return IntegerVector(to_integer(*c) * eq.section);
  };

  std::vector<FundamentalInvariant> out;
  for (const auto &z : wm.hilbert_basis) {
    FundamentalInvariant mu;
    mu.exponents = z;
    mu.weight = rd.weight(z);
    LaurentPolynomial product = LaurentPolynomial::constant(g.rank(), 1);
    for (std::size_t j = 0; j < r; ++j)
      if (z[j] != 0)
        product = product * orbit_sums[j].pow(z[j].get_ui());

    const auto support = product.support();
    std::size_t top = 0;
    Rational best = height(support[0]);
    bool unique = true;
    for (std::size_t k = 1; k < support.size(); ++k) {
      const Rational h = height(support[k]);
      if (h > best) {
        best = h;
        top = k;
        unique = true;
      } else if (h == best) {
        unique = false;
      }
    }
    if (!unique || support[top] != mu.weight)
      throw Error(ErrorCode::AxiomFailure,
                  "leading exponent of " + mu.factored() +
                      " differs from its weight");

    // x^rho(a) with pi(a) = weight is a G-invariant unit moving the product
    // into k[A]
    const auto a = lift(mu.weight);
    if (!a)
      throw Error(ErrorCode::SupportEscape,
                  "weight " + to_string(mu.weight) + " is not in pi(A)");
    mu.unit.resize(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i)
      mu.unit[i] = (*a)[i] - mu.weight[i];
    mu.expanded = product * LaurentPolynomial::monomial(mu.unit);

    if (!mu.expanded.has_integral_support())
      throw Error(ErrorCode::SupportEscape,
                  "invariant " + mu.factored() + " has support outside A");
    if (!is_invariant(g, mu.expanded))
      throw Error(ErrorCode::AxiomFailure,
                  "invariant " + mu.factored() + " is not G-invariant");
    out.push_back(std::move(mu));
  }
  return out;
}

} // namespace multinv
