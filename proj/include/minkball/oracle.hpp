#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "minkball/detail/geometry.hpp"
#include "minkball/scene.hpp"
#include "minkball/timefn.hpp"
#include "minkball/vec.hpp"

namespace minkball {

// Brute-force ground truth for low-dimensional scenes: definitional radius
// evaluation by bisection and grid minimization of the objective. Used to
// validate the closed-form evaluations and the solver.
struct GridSpec {
  Vec lo, hi;
  int resolution = 201;        // points per axis
  int refinement_rounds = 3;   // each round shrinks the box 10x around the incumbent

  void check() const {
    if (resolution < 3) throw std::invalid_argument("oracle: grid resolution must be >= 3");
    if (lo.size() != hi.size() || lo.size() < 1)
      throw std::invalid_argument("oracle: grid bounds mismatch");
    for (Eigen::Index i = 0; i < lo.size(); ++i) {
      if (!(lo[i] < hi[i])) throw std::invalid_argument("oracle: grid requires lo < hi");
    }
  }
};

inline GridSpec default_grid(const Scene& scene, int resolution = 201, int rounds = 3) {
  Box box = scene_start_box(scene);
  GridSpec g;
  g.lo = box.lo;
  g.hi = box.hi;
  g.resolution = resolution;
  g.refinement_rounds = rounds;
  return g;
}

struct GridResult {
  Vec point;
  double value = 0.0;
};

namespace detail {

// directions used to sample a Euclidean sphere when no closed-form support
// is available for the gauge
inline const std::vector<Vec>& sphere_directions(int dim) {
  constexpr double kPi = 3.14159265358979323846;
  static std::vector<Vec> dirs2, dirs3;
  if (dim == 2) {
    if (dirs2.empty()) {
      const int n = 4096;
      for (int i = 0; i < n; ++i) {
        double a = 2.0 * kPi * static_cast<double>(i) / n;
        dirs2.push_back(make_vec({std::cos(a), std::sin(a)}));
      }
    }
    return dirs2;
  }
  if (dirs3.empty()) {
    const int n = 4096;
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
      double y = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / n;
      double r = std::sqrt(std::max(0.0, 1.0 - y * y));
      double a = golden * static_cast<double>(i);
      dirs3.push_back(make_vec({r * std::cos(a), y, r * std::sin(a)}));
    }
  }
  return dirs3;
}

inline bool seb_feasible_at(const Scene& scene, const Vec& x, double t) {
  for (const TargetSet& target : scene.targets) {
    switch (target.kind()) {
      case TargetKind::kPointCloud:
      case TargetKind::kVPolytope: {
        for (const Vec& w : target.vertices()) {
          if (!scene.gauge.membership(w - x, t)) return false;
        }
        break;
      }
      case TargetKind::kEuclideanBall: {
        const Vec& c = target.center();
        const double s = target.radius();
        switch (scene.gauge.kind()) {
          case GaugeKind::kEuclideanBall:
            if ((c - x).norm() + s > t + 1e-12 * (1.0 + t)) return false;
            break;
          case GaugeKind::kHPolytope: {
            const Mat& rows = scene.gauge.rows();
            const Vec& norms = scene.gauge.row_norms();
            for (Eigen::Index j = 0; j < rows.rows(); ++j) {
              if (rows.row(j).dot(c - x) + s * norms[j] > t + 1e-12 * (1.0 + t)) return false;
            }
            break;
          }
          case GaugeKind::kEllipsoid: {
            // densely sampled boundary of the target ball
            for (const Vec& u : sphere_directions(scene.dimension)) {
              if (!scene.gauge.membership(c + s * u - x, t)) return false;
            }
            break;
          }
        }
        break;
      }
      case TargetKind::kHalfspace:
        return false;  // unbounded targets can never be enclosed
    }
  }
  return true;
}

inline bool sib_feasible_at(const Scene& scene, const Vec& x, double t, double tol) {
  for (const TargetSet& target : scene.targets) {
    auto proj_q = [&](const Vec& p) { return target.euclid_project(p); };
    auto proj_b = [&](const Vec& p) { return Vec(x + scene.gauge.project_scaled(p - x, t)); };
    auto res = alternating_distance(proj_q, proj_b, x, tol * 0.01, 50000);
    if (res.dist > tol) return false;
  }
  return true;
}

}  // namespace detail

// Definitional radius at a fixed center: the smallest t such that x + tF
// encloses (or touches) every target, found by bisection on the membership
// (or set-distance) predicate. Dimension <= 3.
inline double feasibility_radius(const Scene& scene, const Vec& x) {
  if (scene.dimension > 3)
    throw std::invalid_argument("oracle: feasibility_radius supports dimension <= 3 only");
  const bool seb = scene.problem == Problem::kSeb;
  const double sib_tol = 1e-10;
  auto feasible = [&](double t) {
    return seb ? detail::seb_feasible_at(scene, x, t)
               : detail::sib_feasible_at(scene, x, t, sib_tol);
  };
  if (feasible(0.0)) return 0.0;
  double hi = 1.0;
  int grow = 0;
  while (!feasible(hi)) {
    hi *= 2.0;
    if (++grow > 200) throw std::runtime_error("oracle: failed to bracket the radius");
  }
  double lo = hi > 1.0 ? hi * 0.5 : 0.0;
  while (hi - lo > 1e-9) {
    double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

// Exhaustive grid minimization with projection onto the constraint and
// shrinking refinement around the incumbent.
inline GridResult grid_minimize(const Scene& scene, const GridSpec& spec) {
  spec.check();
  if (scene.dimension > 3)
    throw std::invalid_argument("oracle: grid_minimize supports dimension <= 3 only");
  const int d = scene.dimension;
  const int n = spec.resolution;

  GridResult best;
  best.value = std::numeric_limits<double>::infinity();

  Vec lo = spec.lo, hi = spec.hi;
  for (int round = 0; round <= spec.refinement_rounds; ++round) {
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    while (true) {
      Vec x(d);
      for (int i = 0; i < d; ++i) {
        x[i] = lo[i] + (hi[i] - lo[i]) * static_cast<double>(idx[static_cast<std::size_t>(i)]) /
                           static_cast<double>(n - 1);
      }
      Vec p = scene.constraint.project(x);
      double v = objective(scene, p).value;
      if (v < best.value) {
        best.value = v;
        best.point = p;
      }
      int axis = 0;
      while (axis < d && ++idx[static_cast<std::size_t>(axis)] == n) {
        idx[static_cast<std::size_t>(axis)] = 0;
        ++axis;
      }
      if (axis == d) break;
    }
    if (round == spec.refinement_rounds) break;
    Vec half = (hi - lo) / 20.0;  // shrink the box 10x around the incumbent
    lo = best.point - half;
    hi = best.point + half;
  }
  if (!std::isfinite(best.value)) throw std::runtime_error("oracle: empty feasible grid");
  return best;
}

}  // namespace minkball
