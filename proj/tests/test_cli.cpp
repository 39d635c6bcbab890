#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "latpack/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = latpack::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& leaf) {
  return (std::filesystem::temp_directory_path() / ("latpack_test_" + leaf)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("cli examples") {
  auto k = run({"karea", "--lattice", "hex", "--k", "3"});
  CHECK(k.code == 0);
  CHECK(k.out == "6\n");
  CHECK(run({"karea", "--lattice", "tri", "--k", "2", "--direct"}).out == "7\n");

  auto f = run({"feasibility", "--lattice", "tri", "--d", "1", "--n", "1"});
  CHECK(f.code == 0);
  CHECK(f.out.find("INFEASIBLE (chi = infinity)") != std::string::npos);

  auto p = run({"verify-plan", "--plan", "(3,3)-hex"});
  CHECK(p.code == 0);
  CHECK(p.out == "OK: 13 colors\n");

  CHECK(run({"distance", "--lattice", "square", "--from", "0,0", "--to", "3,-4"}).out == "7\n");
  CHECK(run({"ball", "--lattice", "tri", "--radius", "2"}).out == "19\n");
  CHECK(run({"lower-bound", "--lattice", "hex", "--d", "3", "--n", "2"}).out == "15\n");
  CHECK(run({"lower-bound", "--lattice", "tri", "--d", "1", "--n", "1"}).code == 1);
}

TEST_CASE("cli exit codes") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"karea", "--lattice", "cubic", "--k", "3"}).code == 2);
  CHECK(run({"karea", "--lattice", "hex"}).code == 2);
  CHECK(run({"karea", "-l", "hex", "--k", "3"}).code == 2);
  CHECK(run({"verify-plan", "--plan", "(9,9)-hex"}).code == 2);
  CHECK(run({"verify-plan"}).code == 2);
  CHECK(run({"verify-packing", "--lattice", "hex", "--base", "3", "--radius", "3"}).code == 0);
  CHECK(run({"verify-packing", "--lattice", "hex", "--base", "3", "--radius", "4"}).code == 1);
  CHECK(run({"verify-packing", "--lattice", "hex", "--g1", "1,1", "--g2", "2,2", "--radius", "1"}).code == 2);
  CHECK(run({"verify-scheme", "--name", "hex.x3.10k-1>16k-1"}).code == 1);
  CHECK(run({"verify-scheme", "--name", "hex.x3.10k-1", "--k", "2"}).code == 0);
  CHECK(run({"feasibility", "--lattice", "hex", "--d", "2", "--n", "2", "--horizon", "100"}).code == 1);
  CHECK(run({"corollary", "--lattice", "tri", "--sequence", "2,3"}).code == 1);
  CHECK(run({"corollary", "--lattice", "hex", "--sequence", "3,2"}).code == 2);
  CHECK(run({"help"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("corollary subcommand") {
  auto r = run({"corollary", "--lattice", "hex", "--sequence", "2,3x2,5x4,7x8", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("bound 15\n", 0) == 0);
  CHECK(r.out.find("witness coloring: OK: 15 colors") != std::string::npos);
  CHECK(latpack::cli::parse_sequence("2,3x2") == std::vector<latpack::Int>{2, 3, 3});
}

TEST_CASE("export-plan then verify-plan --file gives the catalog verdicts") {
  const std::string path = temp_path("plans.txt");
  REQUIRE(run({"export-plan", "--all", "--output", path}).code == 0);
  auto from_file = run({"verify-plan", "--file", path});
  auto from_catalog = run({"verify-plan", "--all"});
  CHECK(from_file.code == 0);
  CHECK(from_file.out == from_catalog.out);
  auto single = run({"export-plan", "--plan", "(2,3)-hex"});
  CHECK(single.out.rfind("plan (2,3)-hex\n", 0) == 0);
  std::remove(path.c_str());

  const std::string bad = temp_path("bad_plans.txt");
  std::ofstream(bad) << "plan p\nlattice hex\n";
  auto r = run({"verify-plan", "--file", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line") != std::string::npos);
  std::remove(bad.c_str());
}

TEST_CASE("pattern subcommands") {
  auto v = run({"pattern-verify"});
  CHECK(v.code == 0);
  CHECK(v.out.find("(shipped pattern)") != std::string::npos);
  CHECK(v.out.find("OK: 17 colors") != std::string::npos);
  auto d = run({"derive-33", "--jobs", "2"});
  CHECK(d.code == 0);
  CHECK(d.out.find("OK: 33 colors") != std::string::npos);
  CHECK(d.out.find("FAIL") == std::string::npos);
  CHECK(run({"pattern-verify", "--file", "/nonexistent/p.txt"}).code == 2);
}

TEST_CASE("render subcommand") {
  const std::string svg = temp_path("tri.svg");
  auto r = run({"render", "--plan", "(1,3)-tri", "--output", svg});
  CHECK(r.code == 0);
  CHECK(r.out.find("3 colors") != std::string::npos);
  const std::string first = slurp(svg);
  run({"render", "--plan", "(1,3)-tri", "--output", svg});
  CHECK(slurp(svg) == first);
  std::remove(svg.c_str());

  const std::string ppm = temp_path("pattern.ppm");
  CHECK(run({"render", "--pattern", "--format", "ppm", "--output", ppm}).out.find("17 colors") != std::string::npos);
  CHECK(slurp(ppm).rfind("P3\n", 0) == 0);
  std::remove(ppm.c_str());

  CHECK(run({"render", "--plan", "(2,3)-hex", "--output", "/nonexistent/dir/x.svg"}).code == 2);
  CHECK(run({"render", "--plan", "(2,3)-hex", "--format", "gif", "--output", svg}).code == 2);
  CHECK(run({"render", "--output", svg}).code == 2);
}

TEST_CASE("tables subcommand output is stable") {
  auto a = run({"tables", "--lattice", "tri", "--csv", "--jobs", "1"});
  auto b = run({"tables", "--lattice", "tri", "--csv", "--jobs", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto hex = run({"tables", "--lattice", "hex"});
  CHECK(hex.code == 1);
  CHECK(hex.out.find("(2,2) mismatch") != std::string::npos);
  CHECK(hex.out.find("d=2: 5, table 4 (flagged)") != std::string::npos);
}
