// Acceptance suite: one line per criterion, "PASS"/"FAIL" plus wall time.
// Exits nonzero when any criterion fails its exact check or its time
// budget.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <skeincalc/hochschild.hpp>
#include <skeincalc/multiseg_json.hpp>
#include <skeincalc/numtheory.hpp>
#include <skeincalc/verify_suites.hpp>

namespace {

using namespace skeincalc;

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(SKEINCALC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {127, ""};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  return {WEXITSTATUS(pclose(pipe)), out};
}

std::string csv_for(const std::string& group, const std::string& target, int max_n,
                    const std::vector<long long>& dims, int first_n) {
  std::ostringstream expected;
  expected << "N,dim\n";
  for (std::size_t i = 0; i < dims.size(); ++i)
    expected << (first_n + static_cast<int>(i)) << "," << dims[i] << "\n";
  (void)group;
  (void)target;
  (void)max_n;
  return expected.str();
}

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_budget = elapsed < budget_seconds;
  if (ok && in_budget) {
    std::printf("PASS criterion %2d: %s (%.2f s)\n", number, label.c_str(), elapsed);
  } else {
    ++failures;
    std::printf("FAIL criterion %2d: %s (%.2f s%s)%s%s\n", number, label.c_str(), elapsed,
                in_budget ? "" : ", over budget", detail.empty() ? "" : " -- ",
                detail.c_str());
  }
  std::fflush(stdout);
}

bool suite_ok(const verify::SuiteReport& report, std::string& detail) {
  if (report.all_passed()) return true;
  for (const auto& c : report.checks)
    if (!c.passed) {
      detail = c.name + ": " + c.witness;
      return false;
    }
  return false;
}

const std::vector<long long> kGlDims = {1,  2,  3,  5,   7,   11,  15,  22, 30,
                                        42, 56, 77, 101, 135, 176, 231, 297};
const std::vector<long long> kSlT2 = {5,   11,  23,  31,  60,  63,  109, 126,
                                      183, 176, 330, 269, 420, 496, 645, 585};
const std::vector<long long> kSlT3 = {9,    29,   75,   131,  266,  357,  617,  810,  1207,
                                      1386, 2272, 2297, 3318, 3954, 5145, 5209, 7745, 7348};

}  // namespace

int main() {
  criterion(1, "GL dimension sequence, T^2 and T^3, N <= 17", 1.0, [](std::string& detail) {
    std::string expected = csv_for("gl", "t2", 17, kGlDims, 1);
    for (const char* target : {"t2", "t3"}) {
      CliResult r = run_cli(std::string("dims --group gl --target ") + target + " --max-n 17");
      if (r.exit_code != 0 || r.out != expected) {
        detail = std::string("mismatch for target ") + target;
        return false;
      }
    }
    return true;
  });

  criterion(2, "SL T^2 sequence, N = 2..17", 1.0, [](std::string& detail) {
    CliResult r = run_cli("dims --group sl --target t2 --max-n 17");
    if (r.exit_code != 0 || r.out != csv_for("sl", "t2", 17, kSlT2, 2)) {
      detail = "sequence mismatch";
      return false;
    }
    return true;
  });

  criterion(3, "SL T^3 sequence, N = 2..19", 1.0, [](std::string& detail) {
    CliResult r = run_cli("dims --group sl --target t3 --max-n 19");
    if (r.exit_code != 0 || r.out != csv_for("sl", "t3", 19, kSlT3, 2)) {
      detail = "sequence mismatch";
      return false;
    }
    return true;
  });

  criterion(4, "three-route agreement (convolution / gcd sum / SNF class sum), N <= 20", 30.0,
            [](std::string& detail) { return suite_ok(verify::run_three_route_suite(20), detail); });

  criterion(5, "coset torsion = gcd of cycle type, N <= 9; brute oracle N <= 5", 10.0,
            [](std::string& detail) { return suite_ok(verify::run_coset_suite(9), detail); });

  criterion(6, "divisor identity to N = 500; orbit census N <= 24", 10.0,
            [](std::string& detail) { return suite_ok(verify::run_identity_suite(500), detail); });

  criterion(7, "Hecke idempotent identities, all compositions, n <= 5", 60.0,
            [](std::string& detail) { return suite_ok(verify::run_hecke_suite(5), detail); });

  criterion(8, "dominance criterion vs character oracle, n <= 7", 60.0,
            [](std::string& detail) { return suite_ok(verify::run_dominance_suite(7), detail); });

  criterion(9, "rectangle-reduction implication, exhaustive n <= 8", 60.0,
            [](std::string& detail) { return suite_ok(verify::run_knr_suite(8), detail); });

  criterion(10, "averaging-window bound, 1000 seeded sequences", 5.0,
            [](std::string& detail) { return suite_ok(verify::run_window_suite(0, 1000), detail); });

  criterion(11, "certificate pipeline, 500 seeded inputs + rectangular rejection", 60.0,
            [](std::string& detail) {
              if (!suite_ok(verify::run_certificate_suite(0, 500, 12), detail)) return false;
              // the same rejection through the CLI surface
              std::string path = "acceptance_rect.json";
              {
                std::ofstream f(path);
                f << R"({"slope": {"n0": 2, "N0": 1},
                         "segments": [{"line": "L", "z": 0, "len": 2},
                                      {"line": "L", "z": 1, "len": 2}]})";
              }
              CliResult r = run_cli("certificate --in " + path + " --m 4 --j 1");
              std::remove(path.c_str());
              if (r.exit_code != 2) {
                detail = "CLI did not reject the rectangular case with exit 2";
                return false;
              }
              return true;
            });

  criterion(12, "graded cube for SL_2, k = 3: 2 at the origin, 1 elsewhere, total 9", 1.0,
            [](std::string& detail) {
              CliResult r = run_cli("cube --group sl --n 2 --k 3");
              if (r.exit_code != 0) {
                detail = "cube command failed";
                return false;
              }
              nlohmann::json doc = nlohmann::json::parse(r.out, nullptr, false);
              if (doc.is_discarded()) {
                detail = "cube output is not JSON";
                return false;
              }
              for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y)
                  for (int z = 0; z < 2; ++z) {
                    long long want = (x == 0 && y == 0 && z == 0) ? 2 : 1;
                    if (doc["entries"][x][y][z] != want) {
                      detail = "entry mismatch";
                      return false;
                    }
                  }
              if (doc["total"] != 9) {
                detail = "total mismatch";
                return false;
              }
              return true;
            });

  if (failures == 0) std::printf("acceptance: all 12 criteria passed\n");
  else std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
