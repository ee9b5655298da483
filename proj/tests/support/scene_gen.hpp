#pragma once

// Shared scene builders and seeded random instance generators for the test
// and acceptance suites.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "minkball/detail/rng.hpp"
#include "minkball/minkball.hpp"

namespace testgen {

using minkball::ConstraintSet;
using minkball::GaugeBody;
using minkball::Mat;
using minkball::Problem;
using minkball::Scene;
using minkball::TargetSet;
using minkball::Vec;
using minkball::detail::Rng;

inline GaugeBody square_gauge() {
  return GaugeBody::hpolytope(minkball::make_mat({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
}

// |z1| + |z2| <= 1
inline GaugeBody diamond_gauge() {
  return GaugeBody::hpolytope(minkball::make_mat({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
}

inline Scene named_scene(const std::string& stem) {
  for (auto& [name, scene] : minkball::example_scenes()) {
    if (name == stem) return scene;
  }
  throw std::runtime_error("unknown example scene: " + stem);
}

inline Vec random_point(Rng& rng, int dim, double lo, double hi) {
  Vec p(dim);
  for (int i = 0; i < dim; ++i) p[i] = rng.uniform(lo, hi);
  return p;
}

// Random bounded 2D gauge. Hpolytope rows are spread directions with gaps
// below pi, which keeps the body bounded with the origin interior.
inline GaugeBody random_gauge_2d(Rng& rng, bool include_ellipsoid = true) {
  double pick = rng.uniform();
  if (pick < 0.3) return GaugeBody::euclidean_ball(2);
  if (pick < 0.5) return square_gauge();
  if (include_ellipsoid && pick < 0.7) {
    double a = rng.uniform(0, 3.14159265358979323846);
    double c = std::cos(a), s = std::sin(a);
    Mat r(2, 2);
    r << c, -s, s, c;
    Mat d = Mat::Zero(2, 2);
    d(0, 0) = rng.uniform(0.5, 3.0);
    d(1, 1) = rng.uniform(0.5, 3.0);
    return GaugeBody::ellipsoid(r * d * r.transpose());
  }
  int m = 4 + static_cast<int>(rng.uniform() * 3.0);
  Mat rows(m, 2);
  for (int j = 0; j < m; ++j) {
    double ang = (2.0 * 3.14159265358979323846 / m) * (j + 0.35 * rng.uniform());
    double rad = rng.uniform(0.6, 1.8);
    rows(j, 0) = std::cos(ang) / rad;
    rows(j, 1) = std::sin(ang) / rad;
  }
  return GaugeBody::hpolytope(rows);
}

inline ConstraintSet random_convex_constraint(Rng& rng, int dim) {
  double pick = rng.uniform();
  if (pick < 0.4) return ConstraintSet::whole_space(dim);
  if (pick < 0.7) {
    Vec lo(dim), hi(dim);
    for (int i = 0; i < dim; ++i) {
      lo[i] = rng.uniform(-6.0, -1.0);
      hi[i] = rng.uniform(1.0, 6.0);
    }
    return ConstraintSet::axis_box(lo, hi);
  }
  return ConstraintSet::euclidean_ball(random_point(rng, dim, -1.0, 1.0), rng.uniform(3.0, 7.0));
}

// Euclidean-gauge enclosing scene with point-cloud/ball targets and a convex
// constraint; the kind of instance whose minimizer is always unique.
inline Scene random_unique_seb_scene(Rng& rng, int dim) {
  Scene scene;
  scene.dimension = dim;
  scene.problem = Problem::kSeb;
  scene.gauge = GaugeBody::euclidean_ball(dim);
  scene.constraint = random_convex_constraint(rng, dim);
  int n = 3 + static_cast<int>(rng.uniform() * 4.0);
  for (int i = 0; i < n; ++i) {
    if (rng.uniform() < 0.5) {
      int k = 2 + static_cast<int>(rng.uniform() * 4.0);
      std::vector<Vec> pts;
      Vec base = random_point(rng, dim, -3.0, 3.0);
      for (int p = 0; p < k; ++p) pts.push_back(base + random_point(rng, dim, -1.0, 1.0));
      scene.targets.push_back(TargetSet::point_cloud(pts));
    } else {
      scene.targets.push_back(
          TargetSet::euclidean_ball(random_point(rng, dim, -3.0, 3.0), rng.uniform(0.1, 1.0)));
    }
  }
  return scene;
}

// Pairwise-far disjoint ball targets, Euclidean gauge, convex constraint: an
// intersecting-ball instance with a positive optimal radius and a unique
// minimizer.
inline Scene random_disjoint_sib_scene(Rng& rng, int dim) {
  Scene scene;
  scene.dimension = dim;
  scene.problem = Problem::kSib;
  scene.gauge = GaugeBody::euclidean_ball(dim);
  scene.constraint = random_convex_constraint(rng, dim);
  int n = 3 + static_cast<int>(rng.uniform() * 4.0);
  std::vector<Vec> centers;
  std::vector<double> radii;
  int guard = 0;
  while (static_cast<int>(centers.size()) < n) {
    if (++guard > 10000) throw std::runtime_error("disjoint scene generation failed");
    Vec c = random_point(rng, dim, -5.0, 5.0);
    double s = rng.uniform(0.2, 0.8);
    bool ok = true;
    for (std::size_t j = 0; j < centers.size(); ++j) {
      if ((c - centers[j]).norm() < s + radii[j] + 1.0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    centers.push_back(c);
    radii.push_back(s);
  }
  for (int i = 0; i < n; ++i)
    scene.targets.push_back(TargetSet::euclidean_ball(centers[static_cast<std::size_t>(i)],
                                                      radii[static_cast<std::size_t>(i)]));
  return scene;
}

inline TargetSet random_bounded_target_2d(Rng& rng, bool allow_ball) {
  double pick = rng.uniform();
  if (allow_ball && pick < 0.33) {
    return TargetSet::euclidean_ball(random_point(rng, 2, -3.0, 3.0), rng.uniform(0.1, 1.5));
  }
  int k = 1 + static_cast<int>(rng.uniform() * 5.0);
  std::vector<Vec> pts;
  Vec base = random_point(rng, 2, -3.0, 3.0);
  for (int p = 0; p < k; ++p) pts.push_back(base + random_point(rng, 2, -1.5, 1.5));
  if (pick < 0.66) return TargetSet::point_cloud(pts);
  return TargetSet::vpolytope(pts);
}

// Mixed-gauge 2D enclosing scene. Ellipsoid gauges are paired with
// vertex-kind targets only, where both the evaluation and the definitional
// oracle are exact.
inline Scene random_seb_scene_2d(Rng& rng) {
  Scene scene;
  scene.dimension = 2;
  scene.problem = Problem::kSeb;
  scene.gauge = random_gauge_2d(rng);
  bool allow_ball = scene.gauge.kind() != minkball::GaugeKind::kEllipsoid;
  scene.constraint = random_convex_constraint(rng, 2);
  int n = 1 + static_cast<int>(rng.uniform() * 4.0);
  for (int i = 0; i < n; ++i)
    scene.targets.push_back(random_bounded_target_2d(rng, allow_ball));
  return scene;
}

// Mixed-gauge 2D intersecting scene with convex targets (halfspaces
// included).
inline Scene random_sib_scene_2d(Rng& rng) {
  Scene scene;
  scene.dimension = 2;
  scene.problem = Problem::kSib;
  scene.gauge = random_gauge_2d(rng);
  scene.constraint = random_convex_constraint(rng, 2);
  int n = 1 + static_cast<int>(rng.uniform() * 4.0);
  for (int i = 0; i < n; ++i) {
    double pick = rng.uniform();
    if (pick < 0.25) {
      Vec normal = rng.unit_vector(2);
      // keep the halfspace boundary near the scene
      scene.targets.push_back(TargetSet::halfspace(normal, rng.uniform(-4.0, -1.0)));
    } else if (pick < 0.55) {
      scene.targets.push_back(
          TargetSet::euclidean_ball(random_point(rng, 2, -3.0, 3.0), rng.uniform(0.1, 1.5)));
    } else if (pick < 0.8) {
      int k = 3 + static_cast<int>(rng.uniform() * 3.0);
      std::vector<Vec> pts;
      Vec base = random_point(rng, 2, -3.0, 3.0);
      for (int p = 0; p < k; ++p) pts.push_back(base + random_point(rng, 2, -1.5, 1.5));
      scene.targets.push_back(TargetSet::vpolytope(pts));
    } else {
      scene.targets.push_back(TargetSet::point_cloud({random_point(rng, 2, -3.0, 3.0)}));
    }
  }
  return scene;
}

// Scale every coordinate-bearing quantity by lambda > 0; the gauge is
// dimensionless and stays fixed.
inline Scene scale_scene(const Scene& scene, double lambda) {
  Scene out;
  out.dimension = scene.dimension;
  out.problem = scene.problem;
  out.gauge = scene.gauge;
  out.name = scene.name;
  switch (scene.constraint.kind()) {
    case minkball::ConstraintKind::kWholeSpace:
      out.constraint = ConstraintSet::whole_space(scene.dimension);
      break;
    case minkball::ConstraintKind::kEuclideanBall:
      out.constraint = ConstraintSet::euclidean_ball(lambda * scene.constraint.center(),
                                                     lambda * scene.constraint.radius());
      break;
    case minkball::ConstraintKind::kAxisBox:
      out.constraint =
          ConstraintSet::axis_box(lambda * scene.constraint.lo(), lambda * scene.constraint.hi());
      break;
    case minkball::ConstraintKind::kHPolytope:
      out.constraint = ConstraintSet::hpolytope(scene.constraint.rows(),
                                                lambda * scene.constraint.offsets());
      break;
    case minkball::ConstraintKind::kSphere:
      out.constraint = ConstraintSet::sphere(lambda * scene.constraint.center(),
                                             lambda * scene.constraint.radius());
      break;
  }
  for (const TargetSet& t : scene.targets) {
    switch (t.kind()) {
      case minkball::TargetKind::kPointCloud:
      case minkball::TargetKind::kVPolytope: {
        std::vector<Vec> pts;
        for (const Vec& p : t.vertices()) pts.push_back(lambda * p);
        out.targets.push_back(t.kind() == minkball::TargetKind::kPointCloud
                                  ? TargetSet::point_cloud(pts)
                                  : TargetSet::vpolytope(pts));
        break;
      }
      case minkball::TargetKind::kEuclideanBall:
        out.targets.push_back(TargetSet::euclidean_ball(lambda * t.center(), lambda * t.radius()));
        break;
      case minkball::TargetKind::kHalfspace:
        out.targets.push_back(TargetSet::halfspace(t.normal(), lambda * t.offset()));
        break;
    }
  }
  return out;
}

}  // namespace testgen
