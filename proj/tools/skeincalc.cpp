// Command-line front end: dimension tables, verification suites,
// survival certificates, and graded dimension cubes.
//
// Exit codes: 0 all checks passed, 1 verification/consistency failure,
// 2 bad flags or malformed input.  Stdout is byte-deterministic for fixed
// inputs and seeds; timing goes to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <skeincalc/hochschild.hpp>
#include <skeincalc/multiseg_json.hpp>
#include <skeincalc/numtheory.hpp>
#include <skeincalc/verify_suites.hpp>

namespace {

using skeincalc::BigInt;
using skeincalc::cap_exceeded;
using skeincalc::consistency_error;
using skeincalc::input_error;
namespace numtheory = skeincalc::numtheory;
namespace hochschild = skeincalc::hochschild;
namespace multiseg = skeincalc::multiseg;
namespace verify = skeincalc::verify;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw input_error("cannot open output file: " + out_path);
  out << payload;
}

numtheory::Group parse_group(const std::string& s) {
  if (s == "gl") return numtheory::Group::GL;
  if (s == "sl") return numtheory::Group::SL;
  throw input_error("--group must be gl or sl");
}

numtheory::Torus parse_target(const std::string& s) {
  if (s == "t2") return numtheory::Torus::T2;
  if (s == "t3") return numtheory::Torus::T3;
  throw input_error("--target must be t2 or t3");
}

int cmd_dims(const std::string& group_s, const std::string& target_s, long long max_n,
             const std::string& format, const std::string& out_path) {
  if (max_n < 1) throw input_error("--max-n must be >= 1");
  numtheory::Group group = parse_group(group_s);
  numtheory::Torus target = parse_target(target_s);
  long long first = group == numtheory::Group::SL ? 2 : 1;
  std::ostringstream body;
  if (format == "csv") {
    body << "N,dim\n";
    for (long long n = first; n <= max_n; ++n)
      body << n << "," << numtheory::skein_dim(group, target, n).to_string() << "\n";
  } else if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (long long n = first; n <= max_n; ++n)
      rows.push_back({{"n", n},
                      {"dim", skeincalc::bigint_to_json(numtheory::skein_dim(group, target, n))}});
    nlohmann::json doc = {{"group", group_s}, {"target", target_s}, {"rows", rows}};
    body << doc.dump(2) << "\n";
  } else {
    throw input_error("--format must be csv or json");
  }
  write_output(out_path, body.str());
  return kExitOk;
}

int cmd_verify(const std::string& suite, long long max_n, std::uint64_t seed, long long cases,
               const std::string& format, const std::string& out_path) {
  auto started = std::chrono::steady_clock::now();
  verify::SuiteReport report{"", {}};
  if (suite == "coset") {
    report = verify::run_coset_suite(static_cast<int>(max_n > 0 ? max_n : 9));
  } else if (suite == "hecke") {
    report = verify::run_hecke_suite(static_cast<int>(max_n > 0 ? max_n : 5));
  } else if (suite == "dominance") {
    report = verify::run_dominance_suite(static_cast<int>(max_n > 0 ? max_n : 7));
  } else if (suite == "knr") {
    report = verify::run_knr_suite(static_cast<int>(max_n > 0 ? max_n : 8));
  } else if (suite == "window") {
    report = verify::run_window_suite(seed, cases > 0 ? cases : 1000);
  } else if (suite == "identity") {
    report = verify::run_identity_suite(max_n > 0 ? max_n : 500);
  } else {
    throw input_error("--suite must be one of coset, hecke, dominance, knr, window, identity");
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  std::ostringstream body;
  if (format == "json") {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
    nlohmann::json doc = {{"suite", report.suite},
                          {"total", report.checks.size()},
                          {"failures", report.failures()},
                          {"checks", checks}};
    body << doc.dump(2) << "\n";
  } else if (format == "text") {
    for (const auto& c : report.checks) {
      if (c.passed) body << "[pass] " << c.name << "\n";
      else body << "[FAIL] " << c.name << ": " << c.witness << "\n";
    }
    body << "suite " << report.suite << ": " << (report.checks.size() - report.failures())
         << "/" << report.checks.size() << " checks passed\n";
  } else {
    throw input_error("--format must be text or json");
  }
  write_output(out_path, body.str());
  std::cerr << "suite " << report.suite << " finished in " << elapsed << " s\n";
  return report.all_passed() ? kExitOk : kExitVerificationFailure;
}

int cmd_certificate(const std::string& in_path, long long m, long long j,
                    const std::string& out_path) {
  std::ifstream in(in_path, std::ios::binary);
  if (!in) throw input_error("cannot open input file: " + in_path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("input is not valid JSON: ") + e.what());
  }
  multiseg::Multisegment input = multiseg::multisegment_from_json(doc);
  multiseg::SurvivalCertificate cert = multiseg::certificate_e_mj(input, m, j);
  if (!multiseg::replay_certificate(cert))
    throw consistency_error("certificate failed its replay check");
  std::string payload = multiseg::to_json(cert).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << payload;
    std::cerr << "verdict: " << (cert.valid ? "valid" : "refuted") << "\n";
  } else {
    write_output(out_path, payload);
    std::cout << "verdict: " << (cert.valid ? "valid" : "refuted") << "\n";
  }
  return cert.valid ? kExitOk : kExitVerificationFailure;
}

nlohmann::json nest_entries(const hochschild::GradedTable& table, int depth,
                            std::size_t& cursor) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < table.n; ++i) {
    if (depth + 1 == table.dim_k)
      arr.push_back(skeincalc::bigint_to_json(table.entries[cursor++]));
    else
      arr.push_back(nest_entries(table, depth + 1, cursor));
  }
  return arr;
}

int cmd_cube(const std::string& group_s, long long n, int dim_k, const std::string& out_path) {
  if (n < 1) throw input_error("--n must be >= 1");
  hochschild::GradedTable table = hochschild::graded_table(parse_group(group_s),
                                                           static_cast<int>(n), dim_k);
  std::size_t cursor = 0;
  nlohmann::json doc = {{"group", group_s},
                        {"n", n},
                        {"k", dim_k},
                        {"entries", nest_entries(table, 0, cursor)},
                        {"total", skeincalc::bigint_to_json(table.total())}};
  write_output(out_path, doc.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact skein-dimension formulas, Hecke idempotent checks, and "
               "multisegment survival certificates"};
  app.require_subcommand(1);

  std::string group = "gl", target = "t2", suite, format, in_path, out_path;
  long long max_n = 0, m = 0, j = 0, n = 0, cases = 0;
  int dim_k = 2;
  std::uint64_t seed = 0;

  CLI::App* dims = app.add_subcommand("dims", "dimension table for a group and torus");
  dims->add_option("--group", group, "gl or sl")->required();
  dims->add_option("--target", target, "t2 or t3")->required();
  dims->add_option("--max-n", max_n, "largest rank N")->required();
  dims->add_option("--format", format, "csv (default) or json");
  dims->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* ver = app.add_subcommand("verify", "run a named verification suite");
  ver->add_option("--suite", suite, "coset|hecke|dominance|knr|window|identity")->required();
  ver->add_option("--max-n", max_n, "suite-specific bound (documented defaults)");
  ver->add_option("--seed", seed, "random seed for property suites (default 0)");
  ver->add_option("--cases", cases, "number of random cases (default 1000)");
  ver->add_option("--format", format, "text (default) or json");
  ver->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* cert = app.add_subcommand("certificate", "survival certificate for e_{m^j}");
  cert->add_option("--in", in_path, "multisegment JSON file")->required();
  cert->add_option("--m", m, "block size m")->required();
  cert->add_option("--j", j, "block count j")->required();
  cert->add_option("--out", out_path, "certificate output path (default stdout)");

  CLI::App* cube = app.add_subcommand("cube", "graded dimension table over (Z/N)^k");
  cube->add_option("--group", group, "gl or sl")->required();
  cube->add_option("--n", n, "rank N")->required();
  cube->add_option("--k", dim_k, "grading dimension, 2 or 3")->required();
  cube->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (dims->parsed()) return cmd_dims(group, target, max_n, format.empty() ? "csv" : format,
                                        out_path);
    if (ver->parsed())
      return cmd_verify(suite, max_n, seed, cases, format.empty() ? "text" : format, out_path);
    if (cert->parsed()) return cmd_certificate(in_path, m, j, out_path);
    if (cube->parsed()) return cmd_cube(group, n, dim_k, out_path);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const cap_exceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitInputError;
  } catch (const consistency_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitInputError;
}
