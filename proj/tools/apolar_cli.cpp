#include "apolar/apolarity.hpp"
#include "apolar/binary_form.hpp"
#include "apolar/census.hpp"
#include "apolar/duality.hpp"
#include "apolar/moduli.hpp"
#include "apolar/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <stdexcept>

using nlohmann::json;
using namespace apolar;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kZeroForm = 3 };

// Thrown for rejected inputs that CLI11 itself cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("APOLAR_SEED");
  if (!env || !*env) return 7;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(env, &used);
    if (used == std::string(env).size()) return value;
  } catch (const std::exception&) {
  }
  throw UsageError("APOLAR_SEED must be a non-negative integer");
}

BinaryForm read_form(const std::string& text) {
  BinaryForm p;
  try {
    p = parse_form(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("cannot parse form: ") + e.what());
  }
  if (p.is_zero()) throw ZeroFormError("form is zero");
  return p;
}

json coeffs_json(const BinaryForm& p) {
  json out = json::array();
  for (const Rational& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

json form_json(const BinaryForm& p, const VariableNames& names = {}) {
  return {{"expr", render(p, names)}, {"degree", p.degree()}, {"coeffs", coeffs_json(p)}};
}

json splitting_json(const SplittingType& type) {
  json out = json::array();
  for (const auto& [n, s] : type) out.push_back({{"n", n}, {"s", s}});
  return out;
}

void emit(const std::string& command, json inputs, json outputs) {
  const json doc{{"schema_version", kSchemaVersion},
                 {"command", command},
                 {"inputs", std::move(inputs)},
                 {"outputs", std::move(outputs)}};
  std::cout << doc.dump(2) << '\n';
}

int cmd_ann(const std::string& text, std::optional<int> degree) {
  const BinaryForm p = read_form(text);
  const int l = p.degree();
  if (degree && (*degree < 0 || *degree > l)) throw UsageError("--degree must lie in [0, deg P]");
  const ApolarProfile prof = sylvester_generators(p);

  json dims = json::array();
  for (int d = 0; d <= l; ++d) dims.push_back(ann_dim(p, d));
  json outputs{{"l", l},
               {"d1", prof.d1},
               {"d2", prof.d2},
               {"g1", form_json(prof.g1, kDualVariables)},
               {"g2", form_json(prof.g2, kDualVariables)},
               {"waring_rank", prof.waring_rank},
               {"cactus_rank", prof.cactus_rank},
               {"equal_degrees", prof.equal_degrees},
               {"ann_dims", dims}};
  if (degree) {
    json basis = json::array();
    for (const BinaryForm& q : apolar_kernel(p, *degree)) basis.push_back(form_json(q, kDualVariables));
    outputs["degree"] = {{"d", *degree}, {"ann_dim", ann_dim(p, *degree)}, {"basis", basis}};
  }
  json inputs{{"form", form_json(p)}};
  if (degree) inputs["degree"] = *degree;
  emit("ann", inputs, outputs);
  return kOk;
}

int cmd_fiber_dim(int n1, int n2, const std::string& text) {
  const BinaryForm p = read_form(text);
  FiberReport report;
  try {
    report = fiber_report(n1, n2, p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit("fiber-dim", {{"n1", n1}, {"n2", n2}, {"form", form_json(p)}},
       {{"l", report.l},
        {"d", report.d},
        {"cactus_rank", report.cactus_rank},
        {"fiber_dim", report.fiber_dim},
        {"branch", to_string(report.branch)}});
  return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int max_degree) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  if (max_degree < 0) throw UsageError("--max-degree must be non-negative");
  const SuiteReport report = run_suite(suite, seed, max_degree);
  json outputs{{"passed", report.passed()},
               {"checks", report.checks},
               {"failures", report.failures},
               {"first_counterexample", report.first_counterexample ? json(*report.first_counterexample) : json()},
               {"details", report.details}};
  emit("verify", {{"suite", suite}, {"seed", seed}, {"max_degree", max_degree}}, outputs);
  if (!report.passed()) std::cerr << "verify: " << report.failures << " of " << report.checks << " checks failed\n";
  return report.passed() ? kOk : kVerifyFailed;
}

int cmd_census(const CensusParams& params, const std::string& format) {
  CensusTable table;
  try {
    table = census(params);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (format == "csv") {
    std::cout << "crank,fiber_dim,count\n";
    for (const CensusRow& row : table.rows)
      std::cout << row.cactus_rank << ',' << row.fiber_dim << ',' << row.count << '\n';
    return kOk;
  }
  json rows = json::array();
  for (const CensusRow& row : table.rows)
    rows.push_back({{"crank", row.cactus_rank}, {"fiber_dim", row.fiber_dim}, {"count", row.count}});
  emit("census",
       {{"l", params.l}, {"d", params.d}, {"samples", params.samples}, {"seed", params.seed},
        {"bound", params.coeff_bound}},
       {{"rows", rows},
        {"top_stratum", table.top_stratum},
        {"top_count", table.top_count},
        {"top_fraction", to_string(table.top_fraction)}});
  return kOk;
}

int cmd_describe(const std::string& text) {
  ModuliDescriptor desc;
  try {
    desc = describe(parse_splitting(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit("describe", {{"splitting", text}},
       {{"splitting", splitting_json(desc.splitting)},
        {"l", desc.l},
        {"h1_dim", desc.h1_dim},
        {"aut_block_degrees", desc.aut_block_degrees},
        {"aut_dim", desc.aut_dim}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apolar ideals, ranks and fiber dimensions of binary forms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "apolar 0.1.0");

  std::string form_text;
  std::optional<int> degree;
  auto* ann = app.add_subcommand("ann", "Apolar ideal generators, ranks and Ann(P)_d dimensions");
  ann->add_option("form", form_text, "Form as an expression in X0, X1 or a JSON coefficient object")->required();
  ann->add_option("--degree", degree, "Also list a basis of Ann(P) in this degree");

  int n1 = 0, n2 = 0;
  auto* fiber = app.add_subcommand("fiber-dim", "Fiber dimension over a form for splitting (n1, n2)");
  fiber->add_option("--n1", n1, "Larger splitting degree, at most -2")->required();
  fiber->add_option("--n2", n2, "Smaller splitting degree")->required();
  fiber->add_option("form", form_text, "Form of degree -2 - n2")->required();

  std::string suite;
  std::optional<std::uint64_t> seed;
  int max_degree = 8;
  auto* verify = app.add_subcommand("verify", "Run a seeded identity suite");
  verify->add_option("--suite", suite, "duality | dims | quartics | action")->required();
  verify->add_option("--seed", seed, "RNG seed (default: $APOLAR_SEED or 7)");
  verify->add_option("--max-degree", max_degree, "Largest form degree exercised")->capture_default_str();

  CensusParams params;
  std::string format = "json";
  auto* cen = app.add_subcommand("census", "Stratum frequencies of random integer forms");
  cen->add_option("--l", params.l, "Form degree")->required();
  cen->add_option("--d", params.d, "Splitting gap n1 - n2")->required();
  cen->add_option("--samples", params.samples, "Number of samples")->capture_default_str();
  cen->add_option("--seed", seed, "RNG seed (default: $APOLAR_SEED or 7)");
  cen->add_option("--bound", params.coeff_bound, "Coefficient bound")->capture_default_str();
  cen->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::string splitting;
  auto* desc = app.add_subcommand("describe", "Dimensions attached to a splitting type");
  desc->add_option("--splitting", splitting, "Comma-separated n:s pairs, n strictly decreasing")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*ann) return cmd_ann(form_text, degree);
    if (*fiber) return cmd_fiber_dim(n1, n2, form_text);
    if (*verify) return cmd_verify(suite, seed ? *seed : default_seed(), max_degree);
    if (*cen) {
      params.seed = seed ? *seed : default_seed();
      return cmd_census(params, format);
    }
    if (*desc) return cmd_describe(splitting);
  } catch (const ZeroFormError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kZeroForm;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
