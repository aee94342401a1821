#include "report.hpp"

#include <limits>
#include <sstream>

#include "multinv/classification.hpp"
#include "multinv/error.hpp"
#include "multinv/laurent.hpp"

namespace multinv::cli {

namespace {

using nlohmann::json;

json integer_json(const Integer &x) {
  if (x.fits_slong_p())
    return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

json vector_json(std::span<const Integer> v) {
  json out = json::array();
  for (const auto &x : v)
    out.push_back(integer_json(x));
  return out;
}

json vector_json(std::span<const Rational> v) {
  json out = json::array();
  for (const auto &x : v)
    out.push_back(x.get_str());
  return out;
}

template <class V> json vectors_json(const std::vector<V> &vs) {
  json out = json::array();
  for (const auto &v : vs)
    out.push_back(vector_json(v));
  return out;
}

json divisors_json(const ElementaryDivisors &d) {
  return {{"divisors", vector_json(d.divisors)},
          {"order", d.free_rank() ? json(nullptr) : integer_json(d.order())},
          {"free_rank", d.free_rank()},
          {"description", d.to_string()}};
}

std::string join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i)
      out += sep;
    out += parts[i];
  }
  return out;
}

template <class V> std::string list_text(const std::vector<V> &vs) {
  std::vector<std::string> parts;
  for (const auto &v : vs)
    parts.push_back(to_string(std::span(v)));
  return "{" + join(parts, ", ") + "}";
}

GroupAction close(const ActionDescription &in, const Options &opt) {
  return close_group(in.rank, in.generators, opt.group_cap);
}

json monoid_json(const MonoidDescription &m) {
  return {{"unit_rank", m.unit_rank()},
          {"units", vectors_json(m.units.basis().row_vectors())},
          {"multipliers", vector_json(m.positive.multipliers)},
          {"hilbert_basis", vectors_json(m.positive.hilbert_basis)}};
}

} // namespace

std::string render_json(const json &j) { return j.dump(2) + "\n"; }

Report cmd_analyze(const ActionDescription &in, const Options &opt) {
  const GroupAction g = close(in, opt);
  const auto reflections = find_reflections(g);
  const EffectiveQuotient eq = effective_quotient(g);
  const bool reflection_group = is_reflection_group(g);
  const bool fpf = is_fixed_point_free(eq.induced);
  const Verdict v = verdict(g, opt.threads, in.base_override);

  std::size_t diagonalizable = 0;
  for (const auto &r : reflections)
    diagonalizable += r.diagonalizable;

  Report r;
  r.json = {{"rank", in.rank},
            {"order", g.order()},
            {"reflections", reflections.size()},
            {"diagonalizable_reflections", diagonalizable},
            {"fixed_rank", eq.fixed.rank()},
            {"quotient_rank", eq.quotient_rank},
            {"height_of_ideal",
             g.is_trivial() ? json(nullptr) : json(height_of_ideal(g))},
            {"reflection_group", reflection_group},
            {"fixed_point_free_on_quotient", fpf},
            {"verdict",
             {{"status", std::string(to_string(v.status))},
              {"reason", std::string(to_string(v.reason))},
              {"explanation", v.explanation}}}};

  std::ostringstream os;
  os << "rank:                 " << in.rank << '\n'
     << "group order:          " << g.order() << '\n'
     << "reflections:          " << reflections.size() << " ("
     << diagonalizable << " diagonalizable)\n"
     << "rank A^G:             " << eq.fixed.rank() << '\n'
     << "rank A/A^G:           " << eq.quotient_rank << '\n'
     << "height of I:          "
     << (g.is_trivial() ? std::string("-") : std::to_string(height_of_ideal(g)))
     << '\n'
     << "reflection group:     " << (reflection_group ? "yes" : "no") << '\n'
     << "fixed point free:     " << (fpf ? "yes" : "no") << " (on A/A^G)\n"
     << "verdict:              " << to_string(v.status) << " ("
     << to_string(v.reason) << ")\n"
     << "  " << v.explanation << '\n';
  r.text = os.str();
  return r;
}

Report cmd_invariants(const ActionDescription &in, const Options &opt) {
  const GroupAction g = close(in, opt);
  const RootDatum rd = build_root_system(g, in.base_override);
  const WeightMonoid wm = compute_weight_monoid(rd, opt.threads);
  const auto mus = fundamental_invariants(g, rd, wm);

  Report r;
  json invariants = json::array();
  for (const auto &mu : mus)
    invariants.push_back({{"exponents", vector_json(mu.exponents)},
                          {"weight", vector_json(mu.weight)},
                          {"factored", mu.factored()},
                          {"expanded", mu.expanded.to_string(in.labels)},
                          {"terms", mu.expanded.term_count()}});
  r.json = {{"order", g.order()},
            {"base", vectors_json(rd.base)},
            {"weights", vectors_json(rd.fundamental_weights)},
            {"multipliers", vector_json(wm.multipliers)},
            {"hilbert_basis", vectors_json(wm.hilbert_basis)},
            {"invariants", invariants}};

  std::ostringstream os;
  os << "group order:   " << g.order() << '\n'
     << "base:          " << list_text(rd.base) << '\n';
  for (std::size_t i = 0; i < rd.rank(); ++i)
    os << "l" << i + 1 << " = " << to_string(std::span(rd.fundamental_weights[i]))
       << "   z" << i + 1 << " = " << wm.multipliers[i].get_str() << '\n';
  os << "hilbert basis: " << list_text(wm.hilbert_basis) << '\n';
  for (std::size_t i = 0; i < mus.size(); ++i)
    os << "mu" << i + 1 << " = " << mus[i].factored() << '\n'
       << "    = " << mus[i].expanded.to_string(in.labels) << '\n';
  r.text = os.str();
  return r;
}

Report cmd_classgroup(const ActionDescription &in, const Options &opt) {
  const GroupAction g = close(in, opt);
  const ElementaryDivisors cl = class_group(g);
  ElementaryDivisors pi1;
  if (!g.is_trivial())
    pi1 = fundamental_group_of_roots(build_root_system(g, in.base_override));

  Report r;
  r.json = {{"order", g.order()},
            {"class_group", divisors_json(cl)},
            {"fundamental_group", divisors_json(pi1)}};
  std::ostringstream os;
  os << "Cl(R)          = " << cl.to_string() << '\n'
     << "Lambda / Z Phi = " << pi1.to_string() << '\n';
  r.text = os.str();
  return r;
}

Report cmd_hilbert_basis(const ActionDescription &in, const Options &opt) {
  const GroupAction g = close(in, opt);
  const RootDatum rd = build_root_system(g, in.base_override);
  const WeightMonoid wm = compute_weight_monoid(rd, opt.threads);

  Report r;
  r.json = {{"multipliers", vector_json(wm.multipliers)},
            {"box_point_count", wm.box_points.size()},
            {"hilbert_basis", vectors_json(wm.hilbert_basis)},
            {"cone_rays", vectors_json(wm.cone_rays)}};
  std::ostringstream os;
  os << "multipliers:   " << to_string(std::span(wm.multipliers)) << '\n'
     << "box points:    " << wm.box_points.size() << '\n'
     << "hilbert basis: " << list_text(wm.hilbert_basis) << '\n'
     << "cone rays:     " << list_text(wm.cone_rays) << '\n';
  r.text = os.str();
  return r;
}

Report cmd_verdict(const ActionDescription &in, const Options &opt) {
  const GroupAction g = close(in, opt);
  const Verdict v = verdict(g, opt.threads, in.base_override);

  Report r;
  r.json = {{"status", std::string(to_string(v.status))},
            {"reason", std::string(to_string(v.reason))},
            {"explanation", v.explanation},
            {"monoid", v.monoid ? monoid_json(*v.monoid) : json(nullptr)}};
  std::ostringstream os;
  os << to_string(v.status) << " (" << to_string(v.reason) << ")\n"
     << "  " << v.explanation << '\n';
  if (v.monoid)
    os << "  M = Z^" << v.monoid->unit_rank() << " x monoid generated by "
       << list_text(v.monoid->positive.hilbert_basis) << '\n';
  r.text = os.str();
  if (v.status == VerdictStatus::Unknown && opt.require_verdict) {
    r.exit_code = kExitNoVerdict;
    r.error = "no definite verdict for this action";
  }
  return r;
}

Report cmd_singular_locus(const ActionDescription &in, const Options &opt) {
  const GroupAction g = close(in, opt);
  const SignGroupReport s = sign_group_singular_locus(g);
  const auto &labels = in.labels;

  Report r;
  json primes = json::array();
  std::vector<std::string> prime_text;
  for (const auto &p : s.minimal_primes) {
    json coords = json::array();
    std::vector<std::string> gens;
    for (std::size_t k = 0; k < p.coordinates.size(); ++k) {
      coords.push_back(p.coordinates[k] + 1);
      gens.push_back(labels[p.coordinates[k]] + (p.signs[k] > 0 ? " - 1" : " + 1"));
    }
    primes.push_back({{"coordinates", coords}, {"signs", p.signs}});
    prime_text.push_back("(" + join(gens, ", ") + ")");
  }
  r.json = {{"order", g.order()},
            {"minimal_primes", primes},
            {"component_count", s.component_count},
            {"component_dimension", s.component_dimension},
            {"intersection_point_count", s.intersection_point_count}};
  std::ostringstream os;
  os << "components:          " << s.component_count << " of dimension "
     << s.component_dimension << '\n'
     << "intersection points: " << s.intersection_point_count << '\n';
  for (const auto &t : prime_text)
    os << "  " << t << '\n';
  r.text = os.str();
  return r;
}

Report run_command(std::string_view command, const ActionDescription &in,
                   const Options &opt) {
  try {
    if (command == "analyze")
      return cmd_analyze(in, opt);
    if (command == "invariants")
      return cmd_invariants(in, opt);
    if (command == "classgroup")
      return cmd_classgroup(in, opt);
    if (command == "hilbert-basis")
      return cmd_hilbert_basis(in, opt);
    if (command == "verdict")
      return cmd_verdict(in, opt);
    if (command == "singular-locus")
      return cmd_singular_locus(in, opt);
    throw Error(ErrorCode::InvalidInput,
                "unknown command '" + std::string(command) + "'");
  } catch (const Error &e) {
    Report r;
    r.error = e.what();
    switch (e.code()) {
    case ErrorCode::InvalidInput:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NotUnimodular:
    case ErrorCode::GroupTooLarge:
      r.exit_code = kExitInvalidInput;
      break;
    default:
      r.exit_code = kExitDomainError;
    }
    r.json = {{"error", {{"code", std::string(to_string(e.code()))},
                         {"message", r.error}}}};
    return r;
  }
}

} // namespace multinv::cli
