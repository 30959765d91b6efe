#ifndef VCOUNT_SCENARIO_HPP
#define VCOUNT_SCENARIO_HPP

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vcount/chern.hpp"
#include "vcount/chow.hpp"
#include "vcount/counts.hpp"
#include "vcount/errors.hpp"
#include "vcount/integers.hpp"

namespace vcount {

// ---------------------------------------------------------------------------
// Scenario records: a declarative description of a count problem, read from
// and written to JSON ("schema": "v1"). Classes are given as coefficient
// maps over the context's generators (for P^n just {"h": k}); all
// coefficients are exact integers (numbers, or decimal strings when they do
// not fit in 64 bits).
// ---------------------------------------------------------------------------

struct SupportRecord {
  enum class Type { projective_space, abstract_variety };

  Type type = Type::projective_space;
  unsigned n = 0;    // projective_space
  unsigned dim = 0;  // abstract_variety
  std::vector<ChowContext::Generator> generators;
  std::map<std::string, Int> integration_table;  // canonical monomial keys
  std::optional<std::vector<std::map<std::string, Int>>> cotangent_chern;

  friend bool operator==(const SupportRecord& a, const SupportRecord& b) {
    auto gens = [](const SupportRecord& s) {
      std::vector<std::pair<std::string, unsigned>> out;
      for (const auto& g : s.generators) out.emplace_back(g.name, g.degree);
      return out;
    };
    return a.type == b.type && a.n == b.n && a.dim == b.dim &&
           gens(a) == gens(b) && a.integration_table == b.integration_table &&
           a.cotangent_chern == b.cotangent_chern;
  }
};

struct ComponentRecord {
  std::string label;
  SupportRecord support;
  Int multiplicity = 1;
  std::map<std::string, Int> canonical_twist;
  std::vector<std::map<std::string, Int>> node_divisors;
  Int count = 1;  // replication factor for identical components

  friend bool operator==(const ComponentRecord&,
                         const ComponentRecord&) = default;
};

struct ScenarioFile {
  std::string name;
  std::string description;
  std::optional<unsigned> rank_v;
  std::optional<Int> expected;
  bool golden = false;  // corpus mode compares total against expected
  std::vector<ComponentRecord> components;

  friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;
};

namespace detail {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline std::pair<std::size_t, std::size_t> line_col_at(const std::string& text,
                                                       std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 <= byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline SchemaError schema_error(const std::string& path,
                                const std::string& what) {
  return SchemaError("field '" + path + "': " + what, path);
}

inline const json& require_field(const json& obj, const char* key,
                                 const std::string& path) {
  if (!obj.is_object()) throw schema_error(path, "must be an object");
  auto it = obj.find(key);
  if (it == obj.end())
    throw schema_error(path + "." + key, "is required");
  return *it;
}

inline void reject_unknown_keys(const json& obj,
                                std::initializer_list<const char*> known,
                                const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw schema_error(path + "." + it.key(), "unknown field");
  }
}

inline Int get_int(const json& v, const std::string& path) {
  if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
  if (v.is_number_integer()) return Int(v.get<std::int64_t>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw schema_error(path, "is not an integer");
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw schema_error(path, "is not an integer");
    return Int(s);
  }
  throw schema_error(path, "must be an exact integer (number or string)");
}

inline unsigned get_dim(const json& v, const std::string& path) {
  const Int value = get_int(v, path);
  if (value < 0 || value > 1000000)
    throw schema_error(path, "must be a small nonnegative integer");
  return value.convert_to<unsigned>();
}

inline std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw schema_error(path, "must be a string");
  return v.get<std::string>();
}

inline ordered_json int_to_json(const Int& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return value.convert_to<std::int64_t>();
  return value.str();
}

// --- monomial keys ---------------------------------------------------------

inline bool valid_generator_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

/// Parses "1", "pt", "h^2" or "a*b^3" against a generator list.
inline Exponents parse_monomial_key(
    const std::vector<ChowContext::Generator>& gens, const std::string& key,
    const std::string& path) {
  Exponents expo(gens.size(), 0);
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < key.size() && std::isspace(static_cast<unsigned char>(key[pos])))
      ++pos;
  };
  skip_ws();
  if (pos < key.size() && key[pos] == '1') {
    ++pos;
    skip_ws();
    if (pos != key.size()) throw schema_error(path, "bad monomial '" + key + "'");
    return expo;
  }
  bool first = true;
  while (pos < key.size()) {
    if (!first) {
      if (key[pos] != '*') throw schema_error(path, "bad monomial '" + key + "'");
      ++pos;
      skip_ws();
    }
    first = false;
    std::size_t start = pos;
    while (pos < key.size() &&
           (std::isalnum(static_cast<unsigned char>(key[pos])) || key[pos] == '_'))
      ++pos;
    const std::string name = key.substr(start, pos - start);
    std::size_t index = gens.size();
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i].name == name) index = i;
    if (index == gens.size())
      throw schema_error(path, "unknown generator '" + name + "' in monomial '" +
                                   key + "'");
    unsigned exponent = 1;
    skip_ws();
    if (pos < key.size() && key[pos] == '^') {
      ++pos;
      skip_ws();
      std::size_t dstart = pos;
      while (pos < key.size() && std::isdigit(static_cast<unsigned char>(key[pos])))
        ++pos;
      if (dstart == pos || pos - dstart > 6)
        throw schema_error(path, "bad monomial '" + key + "'");
      exponent = static_cast<unsigned>(std::stoul(key.substr(dstart, pos - dstart)));
    }
    expo[index] += exponent;
    skip_ws();
  }
  if (first) throw schema_error(path, "empty monomial key");
  return expo;
}

inline unsigned key_degree(const std::vector<ChowContext::Generator>& gens,
                           const Exponents& expo) {
  unsigned d = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) d += expo[i] * gens[i].degree;
  return d;
}

inline std::string canonical_key(const std::vector<ChowContext::Generator>& gens,
                                 const Exponents& expo) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (expo[i] == 0) continue;
    if (!first) out << '*';
    out << gens[i].name;
    if (expo[i] > 1) out << '^' << expo[i];
    first = false;
  }
  return first ? "1" : out.str();
}

/// Reparses a coefficient map into canonical-key form, checking that every
/// monomial has the stated degree.
inline std::map<std::string, Int> canonicalize_part(
    const std::vector<ChowContext::Generator>& gens,
    const std::map<std::string, Int>& raw, unsigned degree,
    const std::string& path) {
  std::map<std::string, Int> out;
  for (const auto& [key, coeff] : raw) {
    const Exponents expo = parse_monomial_key(gens, key, path);
    if (key_degree(gens, expo) != degree)
      throw ValidationError("field '" + path + "': monomial '" + key +
                            "' is not of degree " + std::to_string(degree));
    Int& slot = out[canonical_key(gens, expo)];
    slot += coeff;
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

inline std::map<std::string, Int> get_coeff_map(const json& v,
                                                const std::string& path) {
  if (!v.is_object()) throw schema_error(path, "must be an object");
  std::map<std::string, Int> out;
  for (auto it = v.begin(); it != v.end(); ++it)
    out[it.key()] = get_int(it.value(), path + "." + it.key());
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Building library objects from records
// ---------------------------------------------------------------------------

inline ContextPtr build_context(const SupportRecord& support) {
  if (support.type == SupportRecord::Type::projective_space)
    return ChowContext::projective_space(support.n);
  std::map<Exponents, Int> table;
  for (const auto& [key, value] : support.integration_table)
    table[detail::parse_monomial_key(support.generators, key,
                                     "integration_table")] = value;
  return ChowContext::abstract_variety(support.dim, support.generators,
                                       std::move(table));
}

namespace detail {

inline ChowClass class_from_map(const ContextPtr& ctx,
                                const std::map<std::string, Int>& coeffs,
                                const std::string& path) {
  std::map<Exponents, Int> terms;
  for (const auto& [key, coeff] : coeffs) {
    const Exponents expo =
        parse_monomial_key(ctx->generators(), key, path);
    terms[expo] = coeff;
  }
  return ChowClass::from_terms(ctx, std::move(terms));
}

}  // namespace detail

/// Expands one component record into a ConeComponent (one representative;
/// the record's `count` is handled by the caller).
inline ConeComponent build_component(const ComponentRecord& record) {
  const ContextPtr ctx = build_context(record.support);
  ConeComponent component(ctx);
  component.multiplicity = record.multiplicity;
  component.label = record.label;
  component.canonical_twist =
      detail::class_from_map(ctx, record.canonical_twist, "canonical_twist");
  for (const auto& divisor : record.node_divisors)
    component.node_divisors.push_back(
        detail::class_from_map(ctx, divisor, "node_divisors"));
  if (record.support.cotangent_chern) {
    ChowClass total = ChowClass::one(ctx);
    unsigned degree = 1;
    for (const auto& part : *record.support.cotangent_chern) {
      total = total + detail::class_from_map(ctx, part, "cotangent_chern")
                          .graded_part(degree);
      ++degree;
    }
    component.cotangent = ChernPolynomial(ctx->dim(), total);
  }
  return component;
}

/// The fully expanded CountProblem described by a scenario.
inline CountProblem build_problem(const ScenarioFile& scenario) {
  CountProblem problem;
  problem.rank_v = scenario.rank_v;
  for (const ComponentRecord& record : scenario.components) {
    const ConeComponent representative = build_component(record);
    for (Int i = 0; i < record.count; ++i)
      problem.components.push_back(representative);
  }
  return problem;
}

// ---------------------------------------------------------------------------
// Parsing and rendering
// ---------------------------------------------------------------------------

namespace detail {

inline SupportRecord parse_support(const json& v, const std::string& path) {
  SupportRecord support;
  const std::string type = get_string(require_field(v, "type", path), path + ".type");
  if (type == "projective_space") {
    reject_unknown_keys(v, {"type", "n"}, path);
    support.type = SupportRecord::Type::projective_space;
    support.n = get_dim(require_field(v, "n", path), path + ".n");
    return support;
  }
  if (type != "abstract")
    throw schema_error(path + ".type",
                       "must be 'projective_space' or 'abstract'");
  reject_unknown_keys(
      v, {"type", "dim", "generators", "integration_table", "cotangent_chern"},
      path);
  support.type = SupportRecord::Type::abstract_variety;
  support.dim = get_dim(require_field(v, "dim", path), path + ".dim");
  if (v.contains("generators")) {
    const json& gens = v["generators"];
    if (!gens.is_array())
      throw schema_error(path + ".generators", "must be an array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string gpath = path + ".generators[" + std::to_string(i) + "]";
      const json& g = gens[i];
      reject_unknown_keys(g, {"name", "degree"}, gpath);
      ChowContext::Generator generator;
      generator.name = get_string(require_field(g, "name", gpath), gpath + ".name");
      if (!valid_generator_name(generator.name))
        throw ValidationError("field '" + gpath + "': generator name '" +
                              generator.name + "' is not an identifier");
      generator.degree =
          g.contains("degree") ? get_dim(g["degree"], gpath + ".degree") : 1;
      support.generators.push_back(std::move(generator));
    }
  }
  const json& table = require_field(v, "integration_table", path);
  if (!table.is_object())
    throw schema_error(path + ".integration_table", "must be an object");
  // canonicalize keys so that structural equality is meaningful; table
  // values may legitimately be zero, so keep them
  const std::string tpath = path + ".integration_table";
  for (auto it = table.begin(); it != table.end(); ++it) {
    const Exponents expo =
        parse_monomial_key(support.generators, it.key(), tpath);
    if (key_degree(support.generators, expo) != support.dim)
      throw ValidationError("field '" + tpath + "': monomial '" + it.key() +
                            "' is not of top degree");
    const std::string canon = canonical_key(support.generators, expo);
    if (support.integration_table.count(canon))
      throw ValidationError("field '" + tpath + "': duplicate entry for '" +
                            canon + "'");
    support.integration_table[canon] =
        get_int(it.value(), tpath + "." + it.key());
  }

  if (v.contains("cotangent_chern")) {
    const json& parts = v["cotangent_chern"];
    if (!parts.is_array())
      throw schema_error(path + ".cotangent_chern", "must be an array");
    if (parts.size() > support.dim)
      throw ValidationError("field '" + path +
                            ".cotangent_chern': more parts than the dimension");
    std::vector<std::map<std::string, Int>> cotangent;
    for (std::size_t d = 0; d < parts.size(); ++d) {
      const std::string ppath =
          path + ".cotangent_chern[" + std::to_string(d) + "]";
      cotangent.push_back(canonicalize_part(
          support.generators, get_coeff_map(parts[d], ppath),
          static_cast<unsigned>(d + 1), ppath));
    }
    support.cotangent_chern = std::move(cotangent);
  }
  return support;
}

inline ComponentRecord parse_component(const json& v, const std::string& path,
                                       std::size_t index) {
  if (!v.is_object()) throw schema_error(path, "must be an object");
  reject_unknown_keys(v,
                      {"label", "support", "multiplicity", "canonical_twist",
                       "node_divisors", "count"},
                      path);
  ComponentRecord record;
  record.label = v.contains("label")
                     ? get_string(v["label"], path + ".label")
                     : "component " + std::to_string(index + 1);
  record.support = parse_support(require_field(v, "support", path), path + ".support");

  const std::vector<ChowContext::Generator> gens =
      record.support.type == SupportRecord::Type::projective_space
          ? std::vector<ChowContext::Generator>{{"h", 1}}
          : record.support.generators;

  if (v.contains("multiplicity"))
    record.multiplicity = get_int(v["multiplicity"], path + ".multiplicity");
  if (record.multiplicity < 1)
    throw ValidationError("field '" + path +
                          ".multiplicity': must be a positive integer");
  if (v.contains("count"))
    record.count = get_int(v["count"], path + ".count");
  if (record.count < 1 || record.count > 1000000)
    throw ValidationError("field '" + path +
                          ".count': must be between 1 and 1000000");

  if (v.contains("canonical_twist"))
    record.canonical_twist = canonicalize_part(
        gens, get_coeff_map(v["canonical_twist"], path + ".canonical_twist"), 1,
        path + ".canonical_twist");
  if (v.contains("node_divisors")) {
    const json& divisors = v["node_divisors"];
    if (!divisors.is_array())
      throw schema_error(path + ".node_divisors", "must be an array");
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const std::string dpath =
          path + ".node_divisors[" + std::to_string(i) + "]";
      record.node_divisors.push_back(canonicalize_part(
          gens, get_coeff_map(divisors[i], dpath), 1, dpath));
    }
  }
  return record;
}

}  // namespace detail

/// Parses and fully validates a scenario file. Throws ParseError (malformed
/// JSON, with line/position), SchemaError (missing or ill-typed field) or
/// ValidationError (invariant breach such as multiplicity 0 or a missing
/// integration-table entry).
inline ScenarioFile parse_scenario(const std::string& text) {
  detail::json doc;
  try {
    doc = detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    const auto [line, col] = detail::line_col_at(text, e.byte);
    throw ParseError("malformed JSON at line " + std::to_string(line) +
                         ", column " + std::to_string(col),
                     line, col);
  }
  if (!doc.is_object())
    throw detail::schema_error("$", "top level must be an object");
  detail::reject_unknown_keys(doc,
                              {"schema", "name", "description", "rank_v",
                               "expected", "golden", "components"},
                              "$");
  const std::string version =
      detail::get_string(detail::require_field(doc, "schema", "$"), "$.schema");
  if (version != "v1")
    throw detail::schema_error("$.schema", "unsupported version '" + version +
                                               "' (expected 'v1')");

  ScenarioFile scenario;
  scenario.name =
      detail::get_string(detail::require_field(doc, "name", "$"), "$.name");
  if (doc.contains("description"))
    scenario.description = detail::get_string(doc["description"], "$.description");
  if (doc.contains("rank_v"))
    scenario.rank_v = detail::get_dim(doc["rank_v"], "$.rank_v");
  if (doc.contains("expected"))
    scenario.expected = detail::get_int(doc["expected"], "$.expected");
  scenario.golden = scenario.expected.has_value();
  if (doc.contains("golden")) {
    if (!doc["golden"].is_boolean())
      throw detail::schema_error("$.golden", "must be a boolean");
    scenario.golden = doc["golden"].get<bool>();
  }
  if (scenario.golden && !scenario.expected)
    throw ValidationError(
        "field '$.golden': a golden scenario needs an 'expected' value");

  const detail::json& components =
      detail::require_field(doc, "components", "$");
  if (!components.is_array())
    throw detail::schema_error("$.components", "must be an array");
  for (std::size_t i = 0; i < components.size(); ++i)
    scenario.components.push_back(detail::parse_component(
        components[i], "components[" + std::to_string(i) + "]", i));

  // Resolve every reference now: building each component's bundle surfaces
  // missing table entries, absent or ill-ranked cotangent data and bad
  // divisor classes as ValidationError.
  try {
    for (const ComponentRecord& record : scenario.components)
      (void)component_bundle(build_component(record));
  } catch (const ParseError&) {
    throw;
  } catch (const SchemaError&) {
    throw;
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
  return scenario;
}

/// Canonical JSON rendering; parse_scenario(render_scenario(s)) == s, and
/// render is idempotent on its own output.
inline std::string render_scenario(const ScenarioFile& scenario) {
  using detail::ordered_json;
  ordered_json doc;
  doc["schema"] = "v1";
  doc["name"] = scenario.name;
  doc["description"] = scenario.description;
  if (scenario.rank_v) doc["rank_v"] = *scenario.rank_v;
  if (scenario.expected) doc["expected"] = detail::int_to_json(*scenario.expected);
  doc["golden"] = scenario.golden;
  doc["components"] = ordered_json::array();
  for (const ComponentRecord& record : scenario.components) {
    ordered_json c;
    c["label"] = record.label;
    ordered_json s;
    if (record.support.type == SupportRecord::Type::projective_space) {
      s["type"] = "projective_space";
      s["n"] = record.support.n;
    } else {
      s["type"] = "abstract";
      s["dim"] = record.support.dim;
      s["generators"] = ordered_json::array();
      for (const auto& g : record.support.generators)
        s["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
      s["integration_table"] = ordered_json::object();
      for (const auto& [key, value] : record.support.integration_table)
        s["integration_table"][key] = detail::int_to_json(value);
      if (record.support.cotangent_chern) {
        s["cotangent_chern"] = ordered_json::array();
        for (const auto& part : *record.support.cotangent_chern) {
          ordered_json p = ordered_json::object();
          for (const auto& [key, value] : part)
            p[key] = detail::int_to_json(value);
          s["cotangent_chern"].push_back(std::move(p));
        }
      }
    }
    c["support"] = std::move(s);
    c["multiplicity"] = detail::int_to_json(record.multiplicity);
    ordered_json twist = ordered_json::object();
    for (const auto& [key, value] : record.canonical_twist)
      twist[key] = detail::int_to_json(value);
    c["canonical_twist"] = std::move(twist);
    c["node_divisors"] = ordered_json::array();
    for (const auto& divisor : record.node_divisors) {
      ordered_json d = ordered_json::object();
      for (const auto& [key, value] : divisor)
        d[key] = detail::int_to_json(value);
      c["node_divisors"].push_back(std::move(d));
    }
    c["count"] = detail::int_to_json(record.count);
    doc["components"].push_back(std::move(c));
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Evaluation reports
// ---------------------------------------------------------------------------

struct RunFlags {
  bool strict = false;
};

struct ReportEntry {
  std::string label;
  Int count = 1;
  Int unit_contribution = 0;  // m(C) * integral for one copy
  Int contribution = 0;       // unit_contribution * count
};

struct Report {
  std::string name;
  std::string description;
  Int total = 0;
  std::vector<ReportEntry> components;
  ValidationReport validation;
  std::optional<Int> expected;
  bool golden = false;
  bool pass = true;  // total == expected whenever expected is present
  bool strict_validation_failed = false;
};

/// Evaluates a parsed scenario. Validation failures never abort the
/// evaluation; under flags.strict they are flagged on the report and mapped
/// to a nonzero exit status by the driver.
inline Report run(const ScenarioFile& scenario, const RunFlags& flags = {}) {
  Report report;
  report.name = scenario.name;
  report.description = scenario.description;
  report.expected = scenario.expected;
  report.golden = scenario.golden;

  CountProblem representatives;
  representatives.rank_v = scenario.rank_v;
  for (const ComponentRecord& record : scenario.components) {
    const ConeComponent component = build_component(record);
    ReportEntry entry;
    entry.label = record.label;
    entry.count = record.count;
    entry.unit_contribution = component_contribution(component);
    entry.contribution = entry.unit_contribution * record.count;
    report.total += entry.contribution;
    report.components.push_back(std::move(entry));
    representatives.components.push_back(component);
  }
  report.validation = validate_dimensions(representatives);
  if (report.expected) report.pass = (report.total == *report.expected);
  report.strict_validation_failed =
      flags.strict && report.validation.applicable && !report.validation.pass;
  return report;
}

inline detail::ordered_json report_to_json_value(const Report& report) {
  using detail::ordered_json;
  ordered_json doc;
  doc["name"] = report.name;
  doc["total"] = detail::int_to_json(report.total);
  doc["components"] = ordered_json::array();
  for (const ReportEntry& entry : report.components) {
    ordered_json e;
    e["label"] = entry.label;
    e["contribution"] = detail::int_to_json(entry.contribution);
    e["count"] = detail::int_to_json(entry.count);
    e["unit_contribution"] = detail::int_to_json(entry.unit_contribution);
    doc["components"].push_back(std::move(e));
  }
  ordered_json validation;
  validation["applicable"] = report.validation.applicable;
  validation["pass"] = report.validation.pass;
  validation["entries"] = ordered_json::array();
  for (const DimensionEntry& entry : report.validation.entries) {
    ordered_json e;
    e["label"] = entry.label;
    e["support_dim"] = entry.support_dim;
    e["fiber_dim"] = entry.fiber_dim;
    e["pass"] = entry.pass;
    validation["entries"].push_back(std::move(e));
  }
  doc["validation"] = std::move(validation);
  doc["expected"] =
      report.expected ? detail::int_to_json(*report.expected) : ordered_json();
  doc["pass"] = report.pass;
  doc["golden"] = report.golden;
  return doc;
}

inline std::string report_to_json(const Report& report) {
  return report_to_json_value(report).dump(2) + "\n";
}

inline std::string report_to_text(const Report& report, bool quiet = false) {
  std::ostringstream out;
  out << report.name;
  if (!quiet && !report.description.empty())
    out << ": " << report.description;
  out << "\n";
  if (!quiet) {
    std::size_t width = 9;
    for (const ReportEntry& e : report.components)
      width = std::max(width, e.label.size());
    for (const ReportEntry& e : report.components) {
      out << "  " << e.label;
      for (std::size_t i = e.label.size(); i < width + 2; ++i) out << ' ';
      out << e.unit_contribution;
      if (e.count != 1) out << " x " << e.count << " = " << e.contribution;
      out << "\n";
    }
  }
  out << "  total gamma = " << report.total;
  if (report.expected) {
    out << "  (expected " << *report.expected << ": "
        << (report.pass ? "PASS" : "FAIL") << ")";
  }
  out << "\n";
  if (report.validation.applicable) {
    out << "  dimension check: "
        << (report.validation.pass ? "pass" : "FAIL") << "\n";
    if (!quiet)
      for (const DimensionEntry& e : report.validation.entries)
        out << "    " << (e.pass ? "ok   " : "FAIL ") << e.label << ": dim "
            << e.support_dim << ", cone fiber dim " << e.fiber_dim << "\n";
  }
  return out.str();
}

}  // namespace vcount

#endif  // VCOUNT_SCENARIO_HPP
