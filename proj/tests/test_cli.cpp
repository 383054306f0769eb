// End-to-end checks of the command-line tool: exit codes, JSON/CSV output,
// environment overrides, and byte-for-byte determinism of repeated runs.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#ifndef ZETALIM_CLI_PATH
#error "ZETALIM_CLI_PATH must point at the installed binary"
#endif

namespace {

struct run_result {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Temp sandbox shared by all cases in this file.
const std::string& work_dir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/zetalim_cli_XXXXXX";
    char* got = mkdtemp(tmpl);
    REQUIRE(got != nullptr);
    return std::string(got);
  }();
  return dir;
}

run_result run(const std::string& args, const std::string& env = "") {
  static int serial = 0;
  std::string capture = work_dir() + "/out_" + std::to_string(serial++) + ".txt";
  std::string cmd = env + (env.empty() ? "" : " ") + ZETALIM_CLI_PATH + " " +
                    args + " > " + capture + " 2>&1";
  int rc = std::system(cmd.c_str());
  run_result res;
  if (WIFEXITED(rc)) res.exit_code = WEXITSTATUS(rc);
  res.out = slurp(capture);
  return res;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  REQUIRE(out.good());
}

const std::string& p1_json() {
  static std::string path = [] {
    std::string p = work_dir() + "/p1.json";
    write_file(p, R"({"field": {"p": 2, "k": 1},)"
                  R"( "model": {"type": "projective_line"}, "id": "p1_f2"})");
    return p;
  }();
  return path;
}

const std::string& curve_json() {
  static std::string path = [] {
    std::string p = work_dir() + "/e_f3.json";
    write_file(p, R"({"field": {"p": 3, "k": 1},)"
                  R"( "model": {"type": "hyperelliptic", "f": [1, 1, 0, 1]},)"
                  R"( "id": "e_f3"})");
    return p;
  }();
  return path;
}

}  // namespace

TEST_CASE("cli: help and version exit cleanly") {
  CHECK(run("--help").exit_code == 0);
  auto v = run("--version");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("1.0.0") != std::string::npos);
}

TEST_CASE("cli: count emits the expected table") {
  auto res = run("count --curve " + p1_json() + " --B 3");
  CHECK(res.exit_code == 0);
  // counts 3, 5, 9 and places 3, 1, 2
  CHECK(res.out.find("\"N\"") != std::string::npos);
  CHECK(res.out.find("3,") != std::string::npos);
  CHECK(res.out.find("\"2\": 3") != std::string::npos);
  CHECK(res.out.find("\"4\": 1") != std::string::npos);
  CHECK(res.out.find("\"8\": 2") != std::string::npos);
}

TEST_CASE("cli: zeta on a curve reports the root-modulus check") {
  auto res = run("zeta --curve " + curve_json());
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"rh_pass\": true") != std::string::npos);
  CHECK(res.out.find("\"g\": 1") != std::string::npos);
}

TEST_CASE("cli: zeta requires exactly one input") {
  CHECK(run("zeta").exit_code == 2);
  std::string field = work_dir() + "/f.json";
  write_file(field, R"({"d": -1})");
  CHECK(run("zeta --curve " + curve_json() + " --field " + field).exit_code == 2);
  CHECK(run("zeta --field " + field).exit_code == 0);
}

TEST_CASE("cli: malformed inputs exit with the parse code") {
  std::string bad = work_dir() + "/bad.json";
  write_file(bad, "{ not json");
  CHECK(run("count --curve " + bad).exit_code == 2);
  CHECK(run("count --curve " + work_dir() + "/missing.json").exit_code == 2);
  // epsilon grids must have positive real part
  CHECK(run("verify-ff --curve " + curve_json() + " --eps-grid 0").exit_code == 2);
  // unknown subcommand / no subcommand
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("cli: budget exhaustion exits with the budget code") {
  CHECK(run("count --curve " + curve_json() + " --B 9 --budget 10").exit_code == 3);
  // the environment variable overrides the flag
  CHECK(run("count --curve " + curve_json() + " --B 9 --budget 100000000",
            "ZETALIM_BUDGET=10").exit_code == 3);
  // and an invalid value in the environment is a usage error
  CHECK(run("count --curve " + curve_json() + " --B 3",
            "ZETALIM_BUDGET=banana").exit_code == 2);
}

TEST_CASE("cli: family run on a declared-invariant file") {
  std::string fam = work_dir() + "/fam.json";
  write_file(fam, R"({"r": 4, "phi": {"4": 1.0}})");
  auto res = run("family --family " + fam + " --out " + work_dir() + "/famout");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"basic_inequality_equality\": true") != std::string::npos);
  CHECK(res.out.find("\"exact_zero\": true") != std::string::npos);
  std::string csv = slurp(work_dir() + "/famout/residuals.csv");
  CHECK(csv.find("# zetalim.residuals.v1") == 0);
  CHECK(csv.find("cor15") != std::string::npos);

  // infeasible targets are a domain error: exit 4
  std::string bad = work_dir() + "/fam_bad.json";
  write_file(bad, R"({"r": 4, "targets": {"4": 1.2},)"
                  R"( "schedule": [50, 100, 200]})");
  CHECK(run("family --family " + bad).exit_code == 4);
}

TEST_CASE("cli: verify-nf single cell passes") {
  std::string field = work_dir() + "/f23.json";
  write_file(field, R"({"d": -23})");
  auto res = run("verify-nf --field " + field + " --N-grid 100 --eps-grid 0.3");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"fail\": 0") != std::string::npos);
}

TEST_CASE("cli: verify-ff on one curve and its report") {
  std::string outdir = work_dir() + "/ffout";
  auto res = run("verify-ff --curve " + curve_json() +
                 " --N-grid 10,12 --eps-grid 0.1,0.25 --out " + outdir);
  CHECK(res.exit_code == 0);
  std::string csv = slurp(outdir + "/residuals.csv");
  CHECK(csv.find("# zetalim.residuals.v1") == 0);
  // 2 N-values x 2 eps-values = 4 data rows (plus 2 header lines)
  int lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 6);
  std::string summary = slurp(outdir + "/summary.json");
  CHECK(summary.find("\"tool\": \"zetalim\"") != std::string::npos);
}

TEST_CASE("cli: repeated seeded runs are byte-identical") {
  std::string d1 = work_dir() + "/det1";
  std::string d2 = work_dir() + "/det2";
  auto r1 = run("verify-ff --curve " + curve_json() +
                " --N-grid 10,11 --eps-grid 0.1,0.3+0.2i --seed 9 --out " + d1);
  auto r2 = run("verify-ff --curve " + curve_json() +
                " --N-grid 10,11 --eps-grid 0.1,0.3+0.2i --seed 9 --out " + d2);
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  std::string a = slurp(d1 + "/residuals.csv");
  std::string b = slurp(d2 + "/residuals.csv");
  REQUIRE(!a.empty());
  CHECK(a == b);
  // thread count must not change the bytes either
  std::string d3 = work_dir() + "/det3";
  auto r3 = run("verify-ff --curve " + curve_json() +
                " --N-grid 10,11 --eps-grid 0.1,0.3+0.2i --seed 9 --threads 1 --out " + d3);
  CHECK(r3.exit_code == 0);
  CHECK(slurp(d3 + "/residuals.csv") == a);
}

TEST_CASE("cli: bs-sum over a field list") {
  std::string fields = work_dir() + "/fields.json";
  write_file(fields, R"({"fields": [-1, -23, 5]})");
  auto res = run("bs-sum --field " + fields + " --N 10");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("1.2572173188447482") != std::string::npos);
  CHECK(res.out.find("\"diagnostic_divergent\": true") != std::string::npos);
}

TEST_CASE("cli: selftest passes") {
  auto res = run("selftest");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("selftest: ok") != std::string::npos);
}
