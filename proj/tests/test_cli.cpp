#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "minkball/scene_io.hpp"

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "minkball_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliRun run_cli(const std::string& args) {
  fs::path out_file = work_dir() / "cli_stdout.txt";
  std::string cmd = std::string(MINKBALL_CLI_PATH) + " " + args + " > " + out_file.string() +
                    " 2> " + (work_dir() / "cli_stderr.txt").string();
  int rc = std::system(cmd.c_str());
  CliRun res;
  res.code = WEXITSTATUS(rc);
  std::ifstream in(out_file);
  std::ostringstream ss;
  ss << in.rdbuf();
  res.out = ss.str();
  return res;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("examples subcommand materializes the built-in scenes") {
  fs::path dir = work_dir() / "scenes";
  CliRun res = run_cli("examples " + dir.string());
  CHECK(res.code == 0);
  CHECK(fs::exists(dir / "circle_constraint.json"));
  CHECK(fs::exists(dir / "square_two_points.json"));
  CHECK(fs::exists(dir / "two_halfplanes.json"));
  CHECK(fs::exists(dir / "square_two_disks.json"));
}

TEST_CASE("solve writes a certified solution and probes uniqueness") {
  fs::path dir = work_dir() / "scenes";
  run_cli("examples " + dir.string());
  fs::path out = work_dir() / "sol.json";
  CliRun res = run_cli("solve " + (dir / "square_two_points.json").string() +
                       " --probe-uniqueness -o " + out.string());
  CHECK(res.code == 0);
  std::string js = slurp(out);
  CHECK(js.find("\"classification\":\"non_unique\"") != std::string::npos);
  minkball::SolutionSummary s = minkball::parse_solution_summary(js);
  CHECK(s.radius == Catch::Approx(1.0).margin(1e-6));
}

TEST_CASE("same seed gives byte-identical solutions") {
  fs::path dir = work_dir() / "scenes";
  run_cli("examples " + dir.string());
  fs::path a = work_dir() / "a.json";
  fs::path b = work_dir() / "b.json";
  std::string scene = (dir / "two_halfplanes.json").string();
  CHECK(run_cli("solve " + scene + " --seed 7 -o " + a.string()).code == 0);
  CHECK(run_cli("solve " + scene + " --seed 7 -o " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());
}

TEST_CASE("verify accepts the emitted solution and rejects a shrunken radius") {
  fs::path dir = work_dir() / "scenes";
  run_cli("examples " + dir.string());
  std::string scene = (dir / "square_two_points.json").string();
  fs::path sol = work_dir() / "verify_sol.json";
  REQUIRE(run_cli("solve " + scene + " -o " + sol.string()).code == 0);
  CHECK(run_cli("verify " + scene + " " + sol.string()).code == 0);

  minkball::SolutionSummary s = minkball::parse_solution_summary(slurp(sol));
  std::ostringstream tampered;
  tampered << "{\"center\":[" << s.center[0] << "," << s.center[1] << "],\"radius\":"
           << s.radius - 0.1 << "}";
  fs::path bad = work_dir() / "tampered.json";
  std::ofstream(bad) << tampered.str();
  CHECK(run_cli("verify " + scene + " " + bad.string()).code == 2);
}

TEST_CASE("oracle reports a small discrepancy") {
  fs::path dir = work_dir() / "scenes";
  run_cli("examples " + dir.string());
  CliRun res =
      run_cli("oracle " + (dir / "two_halfplanes.json").string() + " --resolution 101");
  CHECK(res.code == 0);
  CHECK(res.out.find("oracle value") != std::string::npos);
  auto pos = res.out.find("discrepancy: ");
  REQUIRE(pos != std::string::npos);
  double disc = std::stod(res.out.substr(pos + 13));
  CHECK(disc <= 1e-3);
}

TEST_CASE("render writes an svg") {
  fs::path dir = work_dir() / "scenes";
  run_cli("examples " + dir.string());
  fs::path svg = work_dir() / "scene.svg";
  CliRun res =
      run_cli("render " + (dir / "square_two_disks.json").string() + " -o " + svg.string());
  CHECK(res.code == 0);
  CHECK(slurp(svg).rfind("<svg", 0) == 0);
}

TEST_CASE("usage and io failures exit with code 1") {
  CHECK(run_cli("frobnicate").code == 1);
  CHECK(run_cli("solve /nonexistent/scene.json").code == 1);
  CHECK(run_cli("solve").code == 1);

  fs::path bad_scene = work_dir() / "bad_scene.json";
  std::ofstream(bad_scene) << "{\"dimension\": 2}";
  CHECK(run_cli("solve " + bad_scene.string()).code == 1);

  fs::path seb_halfspace = work_dir() / "seb_halfspace.json";
  std::ofstream(seb_halfspace) << R"({
    "dimension": 2, "problem": "seb",
    "gauge": {"kind": "euclidean"}, "constraint": {"kind": "whole_space"},
    "targets": [{"kind": "halfspace", "normal": [0, 1], "offset": -1}]
  })";
  CHECK(run_cli("solve " + seb_halfspace.string()).code == 1);
}

TEST_CASE("help exits cleanly") { CHECK(run_cli("--help").code == 0); }
