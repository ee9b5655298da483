#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "minkball/gauge.hpp"
#include "minkball/sets.hpp"
#include "minkball/vec.hpp"

namespace minkball {

enum class Problem { kSeb, kSib };

// A full problem instance: minimize over centers x in the constraint set the
// largest scaling t such that x + tF encloses (seb) or touches (sib) every
// target.
struct Scene {
  int dimension = 0;
  Problem problem = Problem::kSeb;
  GaugeBody gauge = GaugeBody::euclidean_ball(1);
  ConstraintSet constraint = ConstraintSet::whole_space(1);
  std::vector<TargetSet> targets;
  std::string name;
};

inline void validate_scene(const Scene& scene) {
  if (scene.dimension < 1) throw std::invalid_argument("scene: dimension must be >= 1");
  if (scene.gauge.dim() != scene.dimension)
    throw std::invalid_argument("scene: gauge dimension mismatch");
  if (scene.constraint.dim() != scene.dimension)
    throw std::invalid_argument("scene: constraint dimension mismatch");
  if (scene.targets.empty()) throw std::invalid_argument("scene: needs at least one target");
  for (std::size_t i = 0; i < scene.targets.size(); ++i) {
    const TargetSet& t = scene.targets[i];
    if (t.dim() != scene.dimension)
      throw std::invalid_argument("scene: target " + std::to_string(i) + " dimension mismatch");
    if (scene.problem == Problem::kSeb && !t.bounded())
      throw std::invalid_argument("scene: target " + std::to_string(i) +
                                  " is unbounded; enclosing-ball problems require bounded targets");
  }
}

// Non-fatal diagnostics. An intersecting-ball instance with no bounded set
// among the targets and the constraint may still be solvable, but a minimizer
// is not guaranteed to exist.
inline std::vector<std::string> scene_warnings(const Scene& scene) {
  std::vector<std::string> out;
  if (scene.problem == Problem::kSib) {
    bool any_bounded = scene.constraint.bounded();
    for (const TargetSet& t : scene.targets) any_bounded = any_bounded || t.bounded();
    if (!any_bounded)
      out.push_back(
          "no bounded set among the targets and the constraint; "
          "a minimizer may fail to exist");
  }
  return out;
}

struct Box {
  Vec lo, hi;
};

// Axis-aligned box spanned by the scene's natural anchor points: target
// vertices and ball extents, halfspace boundary anchors and the constraint's
// extent. Used for solver starts and oracle grids.
inline Box scene_anchor_box(const Scene& scene) {
  const int d = scene.dimension;
  Box box;
  box.lo = Vec::Constant(d, std::numeric_limits<double>::infinity());
  box.hi = Vec::Constant(d, -std::numeric_limits<double>::infinity());
  auto absorb = [&](const Vec& p) {
    box.lo = box.lo.cwiseMin(p);
    box.hi = box.hi.cwiseMax(p);
  };
  auto absorb_ball = [&](const Vec& c, double s) {
    absorb(c - Vec::Constant(d, s));
    absorb(c + Vec::Constant(d, s));
  };
  for (const TargetSet& t : scene.targets) {
    switch (t.kind()) {
      case TargetKind::kPointCloud:
      case TargetKind::kVPolytope:
        for (const Vec& p : t.vertices()) absorb(p);
        break;
      case TargetKind::kEuclideanBall:
        absorb_ball(t.center(), t.radius());
        break;
      case TargetKind::kHalfspace: {
        const Vec& a = t.normal();
        absorb((t.offset() / a.squaredNorm()) * a);
        break;
      }
    }
  }
  switch (scene.constraint.kind()) {
    case ConstraintKind::kWholeSpace:
      break;
    case ConstraintKind::kEuclideanBall:
    case ConstraintKind::kSphere:
      absorb_ball(scene.constraint.center(), scene.constraint.radius());
      break;
    case ConstraintKind::kAxisBox:
      absorb(scene.constraint.lo());
      absorb(scene.constraint.hi());
      break;
    case ConstraintKind::kHPolytope:
      absorb(scene.constraint.project(Vec::Zero(d)));
      break;
  }
  for (int i = 0; i < d; ++i) {
    if (!(box.lo[i] <= box.hi[i])) {
      box.lo[i] = 0.0;
      box.hi[i] = 0.0;
    }
  }
  return box;
}

inline double scene_diameter(const Scene& scene) {
  Box box = scene_anchor_box(scene);
  return std::max((box.hi - box.lo).norm(), 1e-9);
}

// Anchor box padded by half the scene diameter on every axis; where solver
// start points are drawn. The padding matters for scenes whose solution set
// extends beyond the target hull.
inline Box scene_start_box(const Scene& scene) {
  Box box = scene_anchor_box(scene);
  double pad = 0.5 * std::max((box.hi - box.lo).norm(), 1.0);
  box.lo.array() -= pad;
  box.hi.array() += pad;
  return box;
}

}  // namespace minkball
