#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "minkball/detail/rng.hpp"
#include "minkball/oracle.hpp"
#include "minkball/scene.hpp"
#include "minkball/timefn.hpp"
#include "minkball/vec.hpp"

namespace minkball {

enum class StepRule { kPolyakWithEstimate, kDiminishing };

struct SolverConfig {
  int max_iters = 5000;
  int starts = 16;
  StepRule step_rule = StepRule::kPolyakWithEstimate;
  double step_constant = 1.0;            // in units of the scene diameter
  double tol_obj = 1e-8;                 // relative objective tolerance
  double tol_x = 1e-9;                   // iterate stagnation tolerance
  std::uint64_t seed = 0;
  double uniqueness_cluster_tol = 1e-4;  // in units of the scene diameter
  double certify_tol = 1e-6;
  bool record_history = false;

  void check() const {
    if (max_iters < 1 || starts < 1) throw std::invalid_argument("solver: starts/iters must be >= 1");
    if (tol_obj <= 0.0 || tol_x <= 0.0 || uniqueness_cluster_tol <= 0.0 || certify_tol <= 0.0)
      throw std::invalid_argument("solver: tolerances must be positive");
  }
};

struct StartResult {
  Vec point;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  double max_infeasibility = 0.0;
  std::vector<double> best_history;  // filled when record_history is set
};

struct TargetCheck {
  std::size_t index = 0;
  double time = 0.0;
  double violation = 0.0;
  bool pass = true;
};

struct CertificateReport {
  std::vector<TargetCheck> targets;
  bool center_feasible = true;
  double center_violation = 0.0;
  double worst_violation = 0.0;
  double tol = 0.0;

  bool pass() const {
    if (!center_feasible) return false;
    for (const TargetCheck& t : targets) {
      if (!t.pass) return false;
    }
    return true;
  }
};

struct Solution {
  Vec center;
  double radius = 0.0;
  std::vector<std::size_t> active_indices;
  std::vector<StartResult> per_start;
  bool converged = false;
  CertificateReport certificate;
};

enum class UniquenessClass { kUnique, kNonUnique, kInconclusive };

struct UniquenessReport {
  std::vector<Vec> minimizer_samples;
  double diameter = 0.0;
  UniquenessClass classification = UniquenessClass::kInconclusive;
};

// Geometric certificate: every target must be enclosed by (or must touch)
// the ball of the claimed radius around the claimed center, and the center
// must be feasible.
inline CertificateReport certify(const Scene& scene, const Vec& center, double radius,
                                 double tol) {
  CertificateReport rep;
  rep.tol = tol;
  for (std::size_t i = 0; i < scene.targets.size(); ++i) {
    TargetCheck chk;
    chk.index = i;
    chk.time = scene.problem == Problem::kSeb
                   ? max_time(scene.gauge, scene.targets[i], center).value
                   : min_time(scene.gauge, scene.targets[i], center).value;
    chk.violation = std::max(0.0, chk.time - radius);
    chk.pass = chk.time <= radius + tol;
    rep.worst_violation = std::max(rep.worst_violation, chk.violation);
    rep.targets.push_back(chk);
  }
  rep.center_violation = scene.constraint.violation(center);
  rep.center_feasible = rep.center_violation <= tol;
  rep.worst_violation = std::max(rep.worst_violation, rep.center_violation);
  return rep;
}

inline CertificateReport certify(const Scene& scene, const Solution& sol, double tol) {
  return certify(scene, sol.center, sol.radius, tol);
}

namespace detail {

// One projected subgradient descent with a target-level Polyak step. The
// level gap delta is halved whenever the incumbent fails to improve by
// delta/2 within a short window, which keeps the step useful on flat valleys
// without wrecking the late sharp-minimum contraction.
inline StartResult descend(const Scene& scene, const SolverConfig& cfg, const Vec& x0,
                           double diam) {
  StartResult res;
  const ConstraintSet& cst = scene.constraint;

  Vec x = cst.project(x0);
  ObjectiveValue ov = objective(scene, x);
  double f = ov.value;
  double f_rec = f;
  Vec x_rec = x;

  auto tol_abs = [&]() { return cfg.tol_obj * (1.0 + f_rec); };
  // The level gap is driven well below tol_obj before stopping: objectives
  // can be quadratically flat along solution valleys, so meeting a value
  // tolerance of eps only locates the minimizer to sqrt(eps).
  auto exit_gap = [&]() { return 0.02 * tol_abs(); };

  bool diminishing = cfg.step_rule == StepRule::kDiminishing;
  int dim_k = 0;
  const double delta0 = std::max(0.1 * f + 1e-3 * diam, 10.0 * tol_abs());
  double delta = delta0;

  constexpr int kLevelWindow = 30;
  constexpr int kTrailWindow = 100;
  double window_rec = f_rec;
  int window_count = 0;
  std::vector<double> trail;
  trail.reserve(kTrailWindow);
  int trail_pos = 0;
  int stagnant = 0;

  if (cfg.record_history) res.best_history.push_back(f_rec);

  int k = 0;
  for (; k < cfg.max_iters; ++k) {
    Vec g = objective_subgradient(scene, x, ov);
    double gn2 = g.squaredNorm();
    if (gn2 <= 1e-28) {
      res.converged = true;  // stationary: objective is zero here
      break;
    }
    double alpha;
    if (diminishing) {
      ++dim_k;
      alpha = cfg.step_constant * diam / (std::sqrt(static_cast<double>(dim_k)) * std::sqrt(gn2));
    } else {
      alpha = (f - (f_rec - delta)) / gn2;
    }
    alpha = std::min(alpha, 10.0 * diam / std::sqrt(gn2));

    Vec xn = cst.project(x - alpha * g);
    res.max_infeasibility = std::max(res.max_infeasibility, cst.violation(xn));
    double move = (xn - x).norm();
    x = std::move(xn);
    ov = objective(scene, x);
    f = ov.value;
    if (f < f_rec) {
      f_rec = f;
      x_rec = x;
    }
    if (cfg.record_history) res.best_history.push_back(f_rec);

    // level maintenance: a window of strong progress earns a larger gap, a
    // weak one halves it
    if (!diminishing && ++window_count >= kLevelWindow) {
      double imp = window_rec - f_rec;
      if (imp >= 5.0 * delta) {
        delta = std::min(2.0 * delta, delta0);
      } else if (imp < 0.5 * delta) {
        delta = std::max(0.5 * delta, 0.005 * tol_abs());
      }
      window_rec = f_rec;
      window_count = 0;
    }

    // iterate stagnation (projection pinning the point, e.g. on a sphere)
    stagnant = move <= 1e-4 * cfg.tol_x * (1.0 + x.norm()) ? stagnant + 1 : 0;
    if (stagnant >= 12) {
      res.converged = true;
      break;
    }

    // trailing improvement of the incumbent
    if (static_cast<int>(trail.size()) < kTrailWindow) {
      trail.push_back(f_rec);
    } else {
      double old = trail[static_cast<std::size_t>(trail_pos)];
      trail[static_cast<std::size_t>(trail_pos)] = f_rec;
      trail_pos = (trail_pos + 1) % kTrailWindow;
      if (old - f_rec < exit_gap() && (diminishing || delta <= exit_gap())) {
        res.converged = true;
        break;
      }
    }

    // safety valve: a polyak run that burned most of the budget without
    // exhausting its level switches to plain diminishing steps
    if (!diminishing && cfg.step_rule == StepRule::kPolyakWithEstimate &&
        k == (3 * cfg.max_iters) / 4 && delta > exit_gap()) {
      diminishing = true;
      dim_k = 0;
    }
  }

  res.point = x_rec;
  res.value = f_rec;
  res.iterations = k;
  return res;
}

inline Vec start_anchor(const Scene& scene) {
  Vec c = Vec::Zero(scene.dimension);
  for (const TargetSet& t : scene.targets) {
    switch (t.kind()) {
      case TargetKind::kPointCloud:
      case TargetKind::kVPolytope: {
        Vec m = Vec::Zero(scene.dimension);
        for (const Vec& p : t.vertices()) m += p;
        c += m / static_cast<double>(t.vertices().size());
        break;
      }
      case TargetKind::kEuclideanBall:
        c += t.center();
        break;
      case TargetKind::kHalfspace:
        c += (t.offset() / t.normal().squaredNorm()) * t.normal();
        break;
    }
  }
  return c / static_cast<double>(scene.targets.size());
}

}  // namespace detail

// Multi-start projected subgradient descent. The first start is the
// projected centroid of the targets' anchor points; the rest are drawn
// uniformly from the padded scene box with the configured seed.
inline Solution solve(const Scene& scene, const SolverConfig& cfg = {}) {
  cfg.check();
  validate_scene(scene);
  const double diam = scene_diameter(scene);
  const Box sbox = scene_start_box(scene);

  detail::Rng rng(cfg.seed ^ 0x6d696e6b62616c6cULL);
  Solution sol;
  sol.per_start.reserve(static_cast<std::size_t>(cfg.starts));
  for (int s = 0; s < cfg.starts; ++s) {
    Vec x0 = s == 0 ? scene.constraint.project(detail::start_anchor(scene))
                    : rng.in_box(sbox.lo, sbox.hi);
    sol.per_start.push_back(detail::descend(scene, cfg, x0, diam));
  }

  std::size_t best = 0;
  for (std::size_t s = 1; s < sol.per_start.size(); ++s) {
    if (sol.per_start[s].value < sol.per_start[best].value) best = s;
  }
  sol.center = scene.constraint.project(sol.per_start[best].point);
  ObjectiveValue ov = objective(scene, sol.center);
  sol.radius = ov.value;
  sol.active_indices = ov.active;
  sol.converged = sol.per_start[best].converged;
  sol.certificate = certify(scene, sol.center, sol.radius, cfg.certify_tol);
  return sol;
}

// Empirical probe of minimizer uniqueness: cluster the near-optimal final
// points of a many-start solve and classify by the cluster diameter. The
// band between tol and 100 tol is reported as inconclusive rather than
// forcing a binary answer.
inline UniquenessReport uniqueness_probe(const Scene& scene, SolverConfig cfg = {}) {
  cfg.starts = std::max(cfg.starts, 32);
  Solution sol = solve(scene, cfg);
  UniquenessReport rep;
  double threshold = sol.radius + 10.0 * cfg.tol_obj * (1.0 + sol.radius);
  for (const StartResult& sr : sol.per_start) {
    if (sr.value <= threshold) rep.minimizer_samples.push_back(sr.point);
  }
  for (std::size_t i = 0; i < rep.minimizer_samples.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.minimizer_samples.size(); ++j) {
      rep.diameter = std::max(
          rep.diameter, (rep.minimizer_samples[i] - rep.minimizer_samples[j]).norm());
    }
  }
  double tol = cfg.uniqueness_cluster_tol * scene_diameter(scene);
  if (rep.diameter <= tol) {
    rep.classification = UniquenessClass::kUnique;
  } else if (rep.diameter >= 100.0 * tol) {
    rep.classification = UniquenessClass::kNonUnique;
  } else {
    rep.classification = UniquenessClass::kInconclusive;
  }
  return rep;
}

// Grid sweep for intersecting-ball scenes whose optimal radius is zero, i.e.
// some feasible center already meets every target. Low dimensions only;
// higher dimensions are skipped (returns false).
inline bool check_degeneracy(const Scene& scene) {
  if (scene.problem != Problem::kSib)
    throw std::invalid_argument("check_degeneracy: requires an intersecting-ball scene");
  if (scene.dimension > 3) return false;
  GridSpec grid = default_grid(scene, scene.dimension == 3 ? 31 : 101, 2);
  GridResult res = grid_minimize(scene, grid);
  return res.value <= 1e-9;
}

}  // namespace minkball
