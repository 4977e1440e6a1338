#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SKEINCALC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("dims csv output is exact and starts at the right rank") {
  RunResult gl = run_cli("dims --group gl --target t3 --max-n 5");
  CHECK(gl.exit_code == 0);
  CHECK(gl.out == "N,dim\n1,1\n2,2\n3,3\n4,5\n5,7\n");

  RunResult sl = run_cli("dims --group sl --target t3 --max-n 4");
  CHECK(sl.exit_code == 0);
  CHECK(sl.out == "N,dim\n2,9\n3,29\n4,75\n");
}

TEST_CASE("dims json carries the same rows") {
  RunResult r = run_cli("dims --group sl --target t2 --max-n 5 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["group"] == "sl");
  REQUIRE(doc["rows"].size() == 4);
  CHECK(doc["rows"][2]["n"] == 4);
  CHECK(doc["rows"][2]["dim"] == 23);
}

TEST_CASE("output is byte-deterministic") {
  RunResult a = run_cli("dims --group sl --target t2 --max-n 12");
  RunResult b = run_cli("dims --group sl --target t2 --max-n 12");
  CHECK(a.out == b.out);
  RunResult c = run_cli("verify --suite window --cases 50 --seed 7");
  RunResult d = run_cli("verify --suite window --cases 50 --seed 7");
  CHECK(c.exit_code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("verify suites pass at reduced bounds and report per check") {
  RunResult r = run_cli("verify --suite coset --max-n 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[pass]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  RunResult j = run_cli("verify --suite identity --max-n 60 --format json");
  CHECK(j.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc["failures"] == 0);
  CHECK(doc["suite"] == "identity");
}

TEST_CASE("bad flags exit 2") {
  CHECK(run_cli("dims --group xx --target t2 --max-n 3").exit_code == 2);
  CHECK(run_cli("dims --group gl --target t2").exit_code == 2);
  CHECK(run_cli("verify --suite nonsense").exit_code == 2);
  CHECK(run_cli("cube --group sl --n 2 --k 5").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("cube reproduces the labeled values") {
  RunResult r = run_cli("cube --group sl --n 2 --k 3");
  REQUIRE(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["total"] == 9);
  CHECK(doc["entries"][0][0][0] == 2);
  CHECK(doc["entries"][0][0][1] == 1);
  CHECK(doc["entries"][1][1][1] == 1);
  RunResult gl = run_cli("cube --group gl --n 3 --k 2");
  nlohmann::json gldoc = nlohmann::json::parse(gl.out);
  CHECK(gldoc["entries"][0][0] == 3);
  CHECK(gldoc["entries"][1][2] == 0);
  CHECK(gldoc["total"] == 3);
  RunResult sl32 = run_cli("cube --group sl --n 3 --k 2");
  CHECK(nlohmann::json::parse(sl32.out)["total"] == 11);
}

TEST_CASE("certificate pipeline end to end") {
  std::string input = temp_path("ms.json");
  {
    std::ofstream f(input);
    f << R"({"slope": {"n0": 2, "N0": 1},
             "segments": [{"line": "L", "z": 0, "len": 2},
                          {"line": "L", "z": 1, "len": 2}]})";
  }
  std::string cert_path = temp_path("cert.json");
  RunResult ok = run_cli("certificate --in " + input + " --m 2 --j 1 --out " + cert_path);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "verdict: valid\n");
  std::ifstream cf(cert_path);
  nlohmann::json cert = nlohmann::json::parse(cf);
  CHECK(cert["verdict"] == "valid");
  CHECK(cert["alpha"] == nlohmann::json::array({2, 2}));
  CHECK(cert["m"] == 2);

  // hypothesis violation: the rectangular shadow m > n/k
  CHECK(run_cli("certificate --in " + input + " --m 4 --j 1").exit_code == 2);
  // j above floor(k)
  CHECK(run_cli("certificate --in " + input + " --m 2 --j 3").exit_code == 2);

  // malformed schema
  std::string bad = temp_path("bad.json");
  {
    std::ofstream f(bad);
    f << R"({"slope": {"n0": 2}, "segments": []})";
  }
  CHECK(run_cli("certificate --in " + bad + " --m 1 --j 1").exit_code == 2);
  CHECK(run_cli("certificate --in missing_file.json --m 1 --j 1").exit_code == 2);

  std::remove(input.c_str());
  std::remove(cert_path.c_str());
  std::remove(bad.c_str());
}
