#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace qalg::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "qalg");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("field-info") {
  const auto r = run_args({"field-info", "--k", "2"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("modulus x^2+x+1") != std::string::npos);
  const auto j = run_args({"field-info", "--k", "3", "--modulus", "x^3+x^2+1", "--format", "json"});
  REQUIRE(j.code == kOk);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["k"] == 3);
  CHECK(parsed["modulus"] == "x^3+x^2+1");
  CHECK(run_args({"field-info", "--k", "2", "--modulus", "x^2+1"}).code == kUsage);
}

TEST_CASE("enumerate-unitary") {
  auto r = run_args({"enumerate-unitary", "--k", "1", "--count-only"});
  CHECK(r.code == kOk);
  CHECK(r.out == "64\n");
  r = run_args({"enumerate-unitary", "--k", "1"});
  CHECK(r.code == kOk);
  CHECK(lines(r.out) == 64);
  CHECK(r.out.substr(0, r.out.find('\n')) == "0x0,0x0,0x0,0x0,0x0,0x0,0x0,0x1");

  const auto s = run_args({"enumerate-unitary", "--k", "1", "--mode", "structured"});
  CHECK(s.out == r.out);
  CHECK(run_args({"enumerate-unitary", "--k", "2", "--mode", "structured", "--count-only"}).out == "1024\n");
  CHECK(run_args({"enumerate-unitary", "--k", "1", "--group", "q16", "--mode", "structured"}).code == kUsage);

  const auto path = std::filesystem::temp_directory_path() / "qalg_cli_enum.txt";
  CHECK(run_args({"enumerate-unitary", "--k", "1", "--out", path.string()}).code == kOk);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == r.out);
  std::filesystem::remove(path);
}

TEST_CASE("budget and usage exit codes") {
  CHECK(run_args({"enumerate-unitary", "--k", "3", "--budget", "1000", "--count-only"}).code == kBudget);
  CHECK(run_args({"enumerate-unitary", "--k", "1", "--group", "q32", "--count-only"}).code == kBudget);
  CHECK(run_args({"enumerate-unitary", "--k", "0"}).code == kUsage);
  CHECK(run_args({"enumerate-unitary", "--group", "s3"}).code == kUsage);
  CHECK(run_args({"nope"}).code == kUsage);
  CHECK(run_args({}).code == kUsage);
  CHECK(run_args({"verify-paper", "--k", "1", "--modulus", "x+1"}).code == kUsage);
  const auto e = run_args({"enumerate-unitary", "--group-file", "/nonexistent/table.txt"});
  CHECK(e.code == kUsage);
  CHECK(e.err.find("error:") == 0);
}

TEST_CASE("group file") {
  const auto r = run_args({"enumerate-unitary", "--group-file", std::string(QALG_TEST_DATA) + "/d8.txt",
                           "--count-only"});
  CHECK(r.code == kOk);
  const auto bad = run_args({"analyze-structure", "--group-file", std::string(QALG_TEST_DATA) + "/dup_row.txt"});
  CHECK(bad.code == kUsage);
  CHECK(bad.err.find("row 2") != std::string::npos);
}

TEST_CASE("analyze-structure") {
  const auto t = run_args({"analyze-structure", "--k", "1"});
  REQUIRE(t.code == kOk);
  CHECK(t.out.find("order_census 1:1 2:15 4:48") != std::string::npos);
  CHECK(t.out.find("decomposition C_2^3 x Q_8") != std::string::npos);

  const auto j = run_args({"analyze-structure", "--k", "2", "--mode", "structured", "--json"});
  REQUIRE(j.code == kOk);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["group_order"] == 1024);
  CHECK(parsed["center_order"] == 256);
  CHECK(parsed["decomposition"]["rank_m"] == 7);
  CHECK(parsed["hamiltonian_mode"] == "exhaustive");
}

TEST_CASE("matrix-dump") {
  const auto r = run_args({"matrix-dump", "--k", "1", "--element", "0x0,0x1,0x0,0x0,0x0,0x0,0x0,0x0", "--blocks"});
  REQUIRE(r.code == kOk);
  CHECK(r.out.find("0x0 0x1 0x0 0x0 0x0 0x0 0x0 0x0\n") == 0);
  CHECK(r.out.find("A\n0x0 0x1 0x0 0x0\n") != std::string::npos);
  CHECK(run_args({"matrix-dump", "--k", "1", "--element", "0x1"}).code == kUsage);
  CHECK(run_args({"matrix-dump", "--k", "1", "--group", "q16", "--blocks"}).code == kUsage);
}

TEST_CASE("verify-paper") {
  const auto r = run_args({"verify-paper", "--k", "1"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.rfind("19 passed, 0 failed, 0 skipped\n") != std::string::npos);
  CHECK(run_args({"verify-paper", "--k", "1", "--workers", "2"}).out == r.out);
}

TEST_CASE("run with a config") {
  RunConfig c;
  c.command = "enumerate-unitary";
  c.k = 2;
  c.count_only = true;
  std::ostringstream out, err;
  CHECK(run(c, out, err) == kOk);
  CHECK(out.str() == "1024\n");
  c.command = "bogus";
  CHECK(run(c, out, err) == kUsage);
}

TEST_CASE("--group accepts a table path") {
  const std::string d8 = std::string(QALG_TEST_DATA) + "/d8.txt";
  const auto a = run_args({"enumerate-unitary", "--group", d8, "--count-only"});
  const auto b = run_args({"enumerate-unitary", "--group-file", d8, "--count-only"});
  CHECK(a.code == kOk);
  CHECK(a.out == b.out);
}
