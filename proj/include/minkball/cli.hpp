#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "minkball/oracle.hpp"
#include "minkball/scene_io.hpp"
#include "minkball/solver.hpp"

namespace minkball::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << data;
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

inline Scene load_scene(const std::string& path) {
  Scene scene = parse_scene(read_file(path));
  for (const std::string& w : scene_warnings(scene)) std::cerr << "warning: " << w << "\n";
  return scene;
}

}  // namespace detail

// Exit codes: 0 on success (certified where applicable), 1 on usage/IO or
// validation errors, 2 when a geometric certificate fails.
inline int run(std::vector<std::string> args) {
  CLI::App app{"generalized smallest enclosing / intersecting ball solver"};
  app.require_subcommand(1);

  std::string scene_path, solution_path, output_path, svg_path, dir_path;
  SolverConfig cfg;
  bool probe = false;
  int resolution = 201;
  int rounds = 3;

  auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--starts", cfg.starts, "independent descent starts");
    cmd->add_option("--max-iters", cfg.max_iters, "iteration cap per start");
    cmd->add_option("--tol", cfg.tol_obj, "relative objective tolerance");
    cmd->add_option("--seed", cfg.seed, "seed for the start points");
    cmd->add_option("--certify-tol", cfg.certify_tol, "certificate tolerance");
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve a scene, write solution JSON");
  solve_cmd->add_option("scene", scene_path, "scene JSON file")->required();
  solve_cmd->add_option("-o,--output", output_path, "solution output path (default stdout)");
  solve_cmd->add_option("--svg", svg_path, "also write an SVG drawing (2D only)");
  solve_cmd->add_flag("--probe-uniqueness", probe, "multi-start uniqueness classification");
  add_solver_flags(solve_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "re-certify a scene/solution pair");
  verify_cmd->add_option("scene", scene_path, "scene JSON file")->required();
  verify_cmd->add_option("solution", solution_path, "solution JSON file")->required();
  verify_cmd->add_option("--certify-tol", cfg.certify_tol, "certificate tolerance");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "grid ground truth and discrepancy vs a solution");
  oracle_cmd->add_option("scene", scene_path, "scene JSON file")->required();
  oracle_cmd->add_option("solution", solution_path, "solution JSON file (default: fresh solve)");
  oracle_cmd->add_option("--resolution", resolution, "grid points per axis");
  oracle_cmd->add_option("--rounds", rounds, "grid refinement rounds");
  add_solver_flags(oracle_cmd);

  CLI::App* render_cmd = app.add_subcommand("render", "draw a scene and its solution as SVG");
  render_cmd->add_option("scene", scene_path, "scene JSON file")->required();
  render_cmd->add_option("solution", solution_path, "solution JSON file (default: fresh solve)");
  render_cmd->add_option("-o,--output", output_path, "SVG output path")->required();
  add_solver_flags(render_cmd);

  CLI::App* examples_cmd = app.add_subcommand("examples", "write the built-in scenes");
  examples_cmd->add_option("dir", dir_path, "output directory")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(solve_cmd)) {
      Scene scene = detail::load_scene(scene_path);
      Solution sol = solve(scene, cfg);
      std::optional<UniquenessReport> rep;
      if (probe) rep = uniqueness_probe(scene, cfg);
      std::string js = emit_solution(sol, rep ? &*rep : nullptr);
      if (output_path.empty()) {
        std::cout << js;
      } else {
        detail::write_file(output_path, js);
      }
      if (!svg_path.empty()) detail::write_file(svg_path, render_svg(scene, sol));
      std::cerr << "radius " << sol.radius << ", certificate "
                << (sol.certificate.pass() ? "ok" : "FAILED") << "\n";
      return sol.certificate.pass() ? 0 : 2;
    }
    if (app.got_subcommand(verify_cmd)) {
      Scene scene = detail::load_scene(scene_path);
      SolutionSummary s = parse_solution_summary(detail::read_file(solution_path));
      CertificateReport rep = certify(scene, s.center, s.radius, cfg.certify_tol);
      std::cout << "certificate " << (rep.pass() ? "ok" : "FAILED") << ", worst violation "
                << rep.worst_violation << "\n";
      return rep.pass() ? 0 : 2;
    }
    if (app.got_subcommand(oracle_cmd)) {
      Scene scene = detail::load_scene(scene_path);
      double solved;
      if (solution_path.empty()) {
        solved = solve(scene, cfg).radius;
      } else {
        solved = parse_solution_summary(detail::read_file(solution_path)).radius;
      }
      GridResult res = grid_minimize(scene, default_grid(scene, resolution, rounds));
      std::cout << "oracle value: " << res.value << "\n";
      std::cout << "solution value: " << solved << "\n";
      std::cout << "discrepancy: " << std::abs(res.value - solved) << "\n";
      return 0;
    }
    if (app.got_subcommand(render_cmd)) {
      Scene scene = detail::load_scene(scene_path);
      if (solution_path.empty()) {
        detail::write_file(output_path, render_svg(scene, solve(scene, cfg)));
      } else {
        SolutionSummary s = parse_solution_summary(detail::read_file(solution_path));
        detail::write_file(output_path, render_svg(scene, s.center, s.radius));
      }
      return 0;
    }
    if (app.got_subcommand(examples_cmd)) {
      std::filesystem::create_directories(dir_path);
      for (const auto& [stem, scene] : example_scenes()) {
        std::string path = (std::filesystem::path(dir_path) / (stem + ".json")).string();
        detail::write_file(path, emit_scene(scene));
        std::cout << "wrote " << path << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace minkball::cli
