#include "input.hpp"

#include "multinv/error.hpp"
#include "multinv/laurent.hpp"

namespace multinv::cli {

namespace {

[[noreturn]] void invalid(const std::string &field, const std::string &what) {
  throw Error(ErrorCode::InvalidInput, field + ": " + what);
}

Integer parse_integer(const nlohmann::json &v, const std::string &field) {
  if (v.is_number_integer())
    return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                  : Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    Integer x;
    if (x.set_str(v.get<std::string>(), 10) == 0)
      return x;
  }
  invalid(field, "expected an integer");
}

IntegerVector parse_vector(const nlohmann::json &v, std::size_t len,
                           const std::string &field) {
  if (!v.is_array())
    invalid(field, "expected an array");
  if (v.size() != len)
    invalid(field, "expected " + std::to_string(len) + " entries, got " +
                       std::to_string(v.size()));
  IntegerVector out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(parse_integer(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

} // namespace

nlohmann::json parse_json_text(std::string_view text, const std::string &what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    // byte offset -> line/column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::InvalidInput,
                what + ": JSON syntax error at line " + std::to_string(line) +
                    ", column " + std::to_string(col));
  }
}

std::vector<IntegerVector> parse_base(const nlohmann::json &doc,
                                      std::size_t rank,
                                      const std::string &field) {
  if (!doc.is_array())
    invalid(field, "expected an array of root vectors");
  std::vector<IntegerVector> base;
  for (std::size_t i = 0; i < doc.size(); ++i)
    base.push_back(
        parse_vector(doc[i], rank, field + "[" + std::to_string(i) + "]"));
  return base;
}

ActionDescription parse_action(const nlohmann::json &doc) {
  if (!doc.is_object())
    invalid("document", "expected a JSON object");
  for (const auto &[key, value] : doc.items())
    if (key != "rank" && key != "generators" && key != "base_override" &&
        key != "labels")
      invalid(key, "unknown field");

  ActionDescription a;
  if (!doc.contains("rank"))
    invalid("rank", "missing");
  const auto &rank = doc["rank"];
  if (!rank.is_number_integer() || rank.get<std::int64_t>() < 0)
    invalid("rank", "expected a nonnegative integer");
  a.rank = rank.get<std::size_t>();

  if (!doc.contains("generators"))
    invalid("generators", "missing");
  const auto &gens = doc["generators"];
  if (!gens.is_array())
    invalid("generators", "expected an array of matrices");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string field = "generators[" + std::to_string(k) + "]";
    const auto &m = gens[k];
    if (!m.is_array() || m.size() != a.rank)
      invalid(field, "expected " + std::to_string(a.rank) + " rows");
    IntegerMatrix g(a.rank, a.rank);
    for (std::size_t i = 0; i < a.rank; ++i) {
      const auto row =
          parse_vector(m[i], a.rank, field + "[" + std::to_string(i) + "]");
      for (std::size_t j = 0; j < a.rank; ++j)
        g(i, j) = row[j];
    }
    const Integer det = determinant(g);
    if (det != 1 && det != -1)
      invalid(field, "determinant is " + det.get_str() + ", expected +1 or -1");
    a.generators.push_back(std::move(g));
  }

  if (doc.contains("base_override") && !doc["base_override"].is_null())
    a.base_override = parse_base(doc["base_override"], a.rank);

  if (doc.contains("labels") && !doc["labels"].is_null()) {
    const auto &labels = doc["labels"];
    if (!labels.is_array() || labels.size() != a.rank)
      invalid("labels", "expected " + std::to_string(a.rank) + " strings");
    for (std::size_t i = 0; i < a.rank; ++i) {
      if (!labels[i].is_string() || labels[i].get<std::string>().empty())
        invalid("labels[" + std::to_string(i) + "]", "expected a nonempty string");
      a.labels.push_back(labels[i].get<std::string>());
    }
  } else {
    a.labels = default_labels(a.rank);
  }
  return a;
}

ActionDescription parse_action_text(std::string_view text) {
  return parse_action(parse_json_text(text, "input"));
}

} // namespace multinv::cli
