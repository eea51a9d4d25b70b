#include "laurent_lab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "laurent_lab/census.hpp"
#include "laurent_lab/classify.hpp"
#include "laurent_lab/equation.hpp"
#include "laurent_lab/series.hpp"

namespace laurent_lab {

namespace {

struct EquationOptions {
  std::optional<int> k;
  std::optional<std::string> factors;
  std::optional<std::string> exponents;
  std::optional<std::string> text;

  void attach(CLI::App& app) {
    app.add_option("--k", k, "order k of the left-hand derivative");
    app.add_option("--factors", factors, "factor derivative orders j_i, e.g. 1,1");
    app.add_option("--a", exponents, "exponent vector a_0,...,a_l, e.g. 0,2");
    app.add_option("--eq", text, "equation text, e.g. \"k=3 j=1,1\" or \"k=3 a=0,2\"");
  }

  Equation resolve() const {
    const int given = (factors ? 1 : 0) + (exponents ? 1 : 0) + (text ? 1 : 0);
    if (given != 1) throw InputError("give exactly one of --factors, --a, --eq");
    if (text) {
      if (k) throw InputError("--k conflicts with --eq");
      return parse_equation(*text);
    }
    if (!k) throw InputError("missing --k");
    if (factors) return Equation::from_factors(*k, parse_int_list(*factors));
    return Equation::from_exponents(*k, parse_int_list(*exponents));
  }
};

int require_pole(const Equation& eq) {
  auto profile = pole_multiplicity(eq);
  if (!profile)
    throw InputError("no admissible multiplicity: k = m(d-1) + h has no positive integer m for " +
                     eq.to_string());
  return profile->m;
}

std::map<int, Rational> parse_free(const std::vector<std::string>& items) {
  std::map<int, Rational> free;
  for (const std::string& item : items) {
    std::size_t pos = 0;
    while (pos <= item.size()) {
      auto comma = item.find(',', pos);
      std::string part = item.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      auto eq = part.find('=');
      if (eq == std::string::npos) throw InputError("--free expects r=value, got '" + part + "'");
      auto key = parse_int_list(part.substr(0, eq));
      if (key.size() != 1) throw InputError("--free expects one root per assignment");
      if (!free.emplace(key[0], parse_rational(part.substr(eq + 1))).second)
        throw InputError("--free assigns root " + std::to_string(key[0]) + " twice");
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return free;
}

nlohmann::json report_json(const VerificationReport& report) {
  return {{"verified", report.verified()},
          {"first_mismatch",
           report.first_mismatch ? nlohmann::json(*report.first_mismatch) : nlohmann::json()},
          {"checked_through", report.checked_through}};
}

int cmd_classify(const EquationOptions& opts, const std::string& format, std::ostream& out) {
  const Equation eq = opts.resolve();
  const Classification c = classify(eq);
  if (format == "text") {
    out << eq.to_string() << ' ' << to_string(c.label);
    if (c.m) out << " m=" << *c.m;
    out << " roots=" << nlohmann::json(c.roots).dump();
    if (c.q) out << " q=" << *c.q;
    out << '\n';
  } else {
    out << to_json(eq, c).dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_series(const EquationOptions& opts, std::optional<int> order,
               const std::vector<std::string>& free_items, std::ostream& out, std::ostream& err) {
  const Equation eq = opts.resolve();
  const int m = require_pole(eq);
  const int n = order ? *order : default_order(eq, m);
  const SeriesSolution sol = build_series(eq, m, n, parse_free(free_items));
  nlohmann::json doc = to_json(sol);
  doc["equation"] = eq.to_string();
  const int upto = sol.last_index() - eq.order();
  std::optional<VerificationReport> report;
  if (upto >= 0) {
    report = verify_series(eq, sol, upto);
    doc["verification"] = report_json(*report);
  } else {
    doc["verification"] = nullptr;
  }
  int code = kExitOk;
  if (sol.obstructed_at) {
    doc["status"] = "obstructed";
    code = kExitFailed;
  } else if (!report) {
    err << "order " << n << " is too short to verify; need at least k = " << eq.order() << '\n';
    doc["status"] = "unverified";
    code = kExitInvalid;
  } else if (!report->verified()) {
    doc["status"] = "mismatch";
    code = kExitFailed;
  } else {
    doc["status"] = "verified";
  }
  out << doc.dump(2) << '\n';
  return code;
}

int cmd_verify(const EquationOptions& opts, const std::string& path, std::optional<int> through,
               std::ostream& out) {
  const Equation eq = opts.resolve();
  nlohmann::json doc;
  try {
    if (path == "-") {
      doc = nlohmann::json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw InputError("cannot open series file '" + path + "'");
      doc = nlohmann::json::parse(in);
    }
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("series file is not JSON: ") + e.what());
  }
  const SeriesSolution sol = series_from_json(doc);
  if (!admissible(eq, sol.m))
    throw InputError("series multiplicity m = " + std::to_string(sol.m) +
                     " violates k = m(d-1) + h for " + eq.to_string());
  const int upto = through ? *through : sol.last_index() - eq.order();
  const VerificationReport report = verify_series(eq, sol, upto);
  nlohmann::json result = report_json(report);
  result["equation"] = eq.to_string();
  out << result.dump(2) << '\n';
  return report.verified() ? kExitOk : kExitFailed;
}

int cmd_census(int l, int m, const std::string& k_text, int step, const std::string& path,
               std::ostream& out) {
  const std::vector<int> ks = parse_k_range(k_text, step);
  for (int k : ks)
    if (k <= l) throw InputError("census needs k > l; got k=" + std::to_string(k));
  if (m < 1 || l < 0) throw InputError("census needs l >= 0 and m >= 1");
  const unsigned threads = census_threads_from_env();
  std::ostringstream csv;
  csv << census_csv_header() << '\n';
  for (int k : ks) csv << census_csv_row(census_summary(k, l, m, threads)) << '\n';
  if (path.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot write '" + path + "'");
    file << csv.str();
  }
  return kExitOk;
}

}  // namespace

unsigned census_threads_from_env() {
  const char* raw = std::getenv("LAURENT_LAB_THREADS");
  if (!raw) return 0;
  std::vector<int> values;
  try {
    values = parse_int_list(raw);
  } catch (const InputError&) {
  }
  if (values.size() != 1 || values[0] < 1)
    throw InputError("LAURENT_LAB_THREADS must be a positive integer");
  return static_cast<unsigned>(values[0]);
}

std::vector<int> parse_k_range(const std::string& text, int step) {
  if (step < 1) throw InputError("--step must be positive");
  auto dots = text.find("..");
  if (dots == std::string::npos) return parse_int_list(text);
  auto lo = parse_int_list(text.substr(0, dots));
  auto hi = parse_int_list(text.substr(dots + 2));
  if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0])
    throw InputError("malformed k range '" + text + "'");
  std::vector<int> ks;
  for (int k = lo[0]; k <= hi[0]; k += step) ks.push_back(k);
  return ks;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Laurent-series and indicial-root engine for f^(k) = prod (f^(j))^(a_j)",
               "laurent-lab"};
  app.require_subcommand(1);

  EquationOptions classify_eq, series_eq, verify_eq;
  std::string format = "json";
  auto* classify_cmd = app.add_subcommand("classify", "classify the meromorphic solutions");
  classify_eq.attach(*classify_cmd);
  classify_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::optional<int> order;
  std::vector<std::string> free_items;
  auto* series_cmd = app.add_subcommand("series", "build and self-verify a formal Laurent solution");
  series_eq.attach(*series_cmd);
  series_cmd->add_option("--order", order, "truncation order N (default 4(k+l+2m))");
  series_cmd->add_option("--free", free_items, "free coefficient at a root, r=value (repeatable)");

  std::string series_path;
  std::optional<int> through;
  auto* verify_cmd = app.add_subcommand("verify", "check a series JSON document against an equation");
  verify_eq.attach(*verify_cmd);
  verify_cmd->add_option("--series", series_path, "series JSON file, or - for stdin")->required();
  verify_cmd->add_option("--through", through, "last relative index to check");

  int census_l = 1, census_m = 1, census_step = 1;
  std::string census_k, census_out;
  auto* census_cmd = app.add_subcommand("census", "census of A_{k,l,m} as CSV");
  census_cmd->add_option("--l", census_l, "highest derivative order l")->required();
  census_cmd->add_option("--m", census_m, "pole multiplicity m")->required();
  census_cmd->add_option("--k", census_k, "k, or a range lo..hi")->required();
  census_cmd->add_option("--step", census_step, "step for a k range");
  census_cmd->add_option("--out", census_out, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (*classify_cmd) return cmd_classify(classify_eq, format, out);
    if (*series_cmd) return cmd_series(series_eq, order, free_items, out, err);
    if (*verify_cmd) return cmd_verify(verify_eq, series_path, through, out);
    if (*census_cmd)
      return cmd_census(census_l, census_m, census_k, census_step, census_out, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"laurent-lab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace laurent_lab
