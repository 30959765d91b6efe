// vcount: evaluates virtual curve counts described by scenario files and
// exposes the two-variable monomial-ideal utilities on the command line.
//
// Exit codes: 0 success; 1 parse/schema/input error; 2 dimension-validation
// failure under --strict; 3 golden mismatch in corpus mode.

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vcount/counts.hpp"
#include "vcount/errors.hpp"
#include "vcount/ideal_text.hpp"
#include "vcount/monomial.hpp"
#include "vcount/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitValidation = 2;
constexpr int kExitGoldenMismatch = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw vcount::Error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Options {
  bool strict = false;
  bool json = false;
  bool quiet = false;
};

int run_eval(const std::string& file, const Options& opt) {
  const vcount::ScenarioFile scenario = vcount::parse_scenario(read_file(file));
  const vcount::Report report = vcount::run(scenario, {opt.strict});
  if (opt.json)
    std::cout << vcount::report_to_json(report);
  else
    std::cout << vcount::report_to_text(report, opt.quiet);
  return report.strict_validation_failed ? kExitValidation : kExitOk;
}

int run_check(const std::string& file, const Options& opt) {
  const vcount::ScenarioFile scenario = vcount::parse_scenario(read_file(file));
  const vcount::Report report = vcount::run(scenario, {opt.strict});
  if (!opt.quiet) {
    std::cout << scenario.name << ": parsed, " << scenario.components.size()
              << " component record(s)\n";
    if (report.validation.applicable)
      std::cout << "dimension check: "
                << (report.validation.pass ? "pass" : "FAIL") << "\n";
  }
  return report.strict_validation_failed ? kExitValidation : kExitOk;
}

int run_corpus(const std::string& dir, const Options& opt) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    std::cerr << "error: not a directory: " << dir << "\n";
    return kExitInput;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());

  struct Row {
    std::string name;
    vcount::Report report;
    bool ok = false;
    std::string error;
  };
  std::vector<Row> rows;
  for (const fs::path& file : files) {
    Row row;
    row.name = file.stem().string();
    try {
      const vcount::ScenarioFile scenario =
          vcount::parse_scenario(read_file(file.string()));
      row.report = vcount::run(scenario, {opt.strict});
      row.name = scenario.name;
      row.ok = true;
    } catch (const vcount::Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.name < b.name; });

  std::size_t golden_total = 0, golden_failed = 0, errors = 0,
              validation_failed = 0;
  for (const Row& row : rows) {
    if (!row.ok) {
      ++errors;
      continue;
    }
    if (row.report.golden) {
      ++golden_total;
      if (!row.report.pass) ++golden_failed;
    }
    if (row.report.strict_validation_failed) ++validation_failed;
  }

  if (opt.json) {
    nlohmann::ordered_json doc;
    doc["scenarios"] = nlohmann::ordered_json::array();
    doc["errors"] = nlohmann::ordered_json::array();
    for (const Row& row : rows) {
      if (row.ok)
        doc["scenarios"].push_back(vcount::report_to_json_value(row.report));
      else
        doc["errors"].push_back({{"name", row.name}, {"error", row.error}});
    }
    doc["golden_total"] = golden_total;
    doc["golden_failed"] = golden_failed;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::size_t width = 8;
    for (const Row& row : rows) width = std::max(width, row.name.size());
    if (!opt.quiet) {
      std::cout << std::left;
      for (const Row& row : rows) {
        std::cout << "  ";
        std::cout.width(static_cast<std::streamsize>(width + 2));
        std::cout << row.name;
        if (!row.ok) {
          std::cout << "ERROR  " << row.error << "\n";
          continue;
        }
        std::cout.width(14);
        std::cout << row.report.total;
        if (row.report.expected) {
          std::cout.width(14);
          std::cout << *row.report.expected;
          std::cout << (row.report.golden
                            ? (row.report.pass ? "PASS" : "FAIL")
                            : "info");
        } else {
          std::cout.width(14);
          std::cout << "-";
          std::cout << "info";
        }
        std::cout << "\n";
      }
    }
    std::cout << golden_total << " golden scenario(s): "
              << (golden_total - golden_failed) << " passed, " << golden_failed
              << " failed";
    if (errors) std::cout << ", " << errors << " error(s)";
    std::cout << "\n";
  }

  if (golden_failed) return kExitGoldenMismatch;
  if (errors) return kExitInput;
  if (validation_failed) return kExitValidation;
  return kExitOk;
}

int run_ideal(const std::string& op, const std::vector<std::string>& exprs,
              const Options& opt) {
  using vcount::MonomialIdeal2;
  if (op == "decompose") {
    if (exprs.size() != 1) {
      std::cerr << "error: decompose takes exactly one ideal\n";
      return kExitInput;
    }
    const MonomialIdeal2 ideal = vcount::parse_monomial_ideal(exprs[0]);
    const std::vector<MonomialIdeal2> components =
        vcount::irreducible_decomposition(ideal);
    if (opt.json) {
      nlohmann::ordered_json doc;
      doc["input"] = ideal.to_string();
      doc["components"] = nlohmann::ordered_json::array();
      for (const MonomialIdeal2& c : components)
        doc["components"].push_back(c.to_string());
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << ideal.to_string() << " =";
      for (std::size_t i = 0; i < components.size(); ++i)
        std::cout << (i ? " meet " : " ") << components[i].to_string();
      std::cout << "\n";
    }
    return kExitOk;
  }
  if (op == "intersect") {
    if (exprs.empty()) {
      std::cerr << "error: intersect needs at least one ideal\n";
      return kExitInput;
    }
    MonomialIdeal2 result = MonomialIdeal2::unit();
    for (const std::string& expr : exprs)
      result = vcount::intersect(result, vcount::parse_monomial_ideal(expr));
    if (opt.json) {
      nlohmann::ordered_json doc;
      doc["intersection"] = result.to_string();
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << result.to_string() << "\n";
    }
    return kExitOk;
  }
  if (op == "colength") {
    if (exprs.size() != 1) {
      std::cerr << "error: colength takes exactly one ideal\n";
      return kExitInput;
    }
    const auto value = vcount::colength(vcount::parse_monomial_ideal(exprs[0]));
    if (opt.json) {
      nlohmann::ordered_json doc;
      doc["finite"] = value.has_value();
      doc["colength"] =
          value ? nlohmann::ordered_json(value->str()) : nlohmann::ordered_json();
      std::cout << doc.dump(2) << "\n";
    } else {
      if (value)
        std::cout << *value << "\n";
      else
        std::cout << "infinite\n";
    }
    return kExitOk;
  }
  std::cerr << "error: unknown ideal operation '" << op
            << "' (expected decompose, intersect or colength)\n";
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "vcount: exact virtual curve counts on (possibly nodal) K-trivial "
      "threefolds from normal-cone scenario files"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--strict", opt.strict,
               "fail (exit 2) when the dimension validation fails");
  app.add_flag("--json", opt.json, "emit machine-readable JSON reports");
  app.add_flag("--quiet", opt.quiet, "suppress per-component detail");

  std::string eval_file;
  auto* eval = app.add_subcommand("eval", "evaluate one scenario file");
  eval->add_option("file", eval_file, "scenario JSON file")->required();
  eval->fallthrough();

  std::string check_file;
  auto* check = app.add_subcommand("check", "parse and validate only");
  check->add_option("file", check_file, "scenario JSON file")->required();
  check->fallthrough();

  std::string corpus_dir = "scenarios";
  auto* corpus =
      app.add_subcommand("corpus", "run every scenario in a directory");
  corpus->add_option("dir", corpus_dir, "directory of scenario JSON files");
  corpus->fallthrough();

  std::string ideal_op;
  std::vector<std::string> ideal_exprs;
  auto* ideal = app.add_subcommand(
      "ideal", "monomial-ideal utilities: decompose, intersect, colength");
  ideal->add_option("op", ideal_op, "decompose | intersect | colength")
      ->required();
  ideal->add_option("expr", ideal_exprs, "ideal expressions, e.g. \"(x,y)^5\"");
  ideal->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) return run_eval(eval_file, opt);
    if (*check) return run_check(check_file, opt);
    if (*corpus) return run_corpus(corpus_dir, opt);
    if (*ideal) return run_ideal(ideal_op, ideal_exprs, opt);
  } catch (const vcount::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const vcount::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitInput;
  } catch (const vcount::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitInput;
  } catch (const vcount::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
