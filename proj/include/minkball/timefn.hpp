#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "minkball/detail/geometry.hpp"
#include "minkball/detail/rng.hpp"
#include "minkball/gauge.hpp"
#include "minkball/scene.hpp"
#include "minkball/sets.hpp"
#include "minkball/vec.hpp"

namespace minkball {

// Value of a maximal/minimal time evaluation together with a point of the
// target realizing it.
struct TimeValue {
  double value = 0.0;
  Vec witness;
  bool attained = true;
};

struct ObjectiveValue {
  double value = 0.0;
  std::vector<std::size_t> active;  // targets attaining the max, ascending
  std::vector<TimeValue> per_target;
};

namespace detail {

inline constexpr double kBisectTol = 1e-9;
inline constexpr double kPairTol = 1e-10;

// Maximize sqrt((v + s u)' A (v + s u)) over the unit sphere by the
// linearized fixed-point iteration u <- normalize(A (v + s u)), which is
// monotone for this convex objective. Multi-start across spread directions.
inline Vec sphere_ascent_direction(const GaugeBody& gauge, const Vec& v, double s) {
  const int d = gauge.dim();
  const Mat& A = gauge.ellipsoid_matrix();
  std::vector<Vec> starts;
  for (int i = 0; i < d; ++i) {
    for (double sign : {1.0, -1.0}) {
      Vec e = Vec::Zero(d);
      e[i] = sign;
      starts.push_back(e);
    }
  }
  if (v.norm() > 0.0) {
    starts.push_back(v.normalized());
    starts.push_back(-v.normalized());
    Vec av = A * v;
    if (av.norm() > 0.0) starts.push_back(av.normalized());
  }
  Rng rng(0x5eb0522u);
  while (starts.size() < 8) starts.push_back(rng.unit_vector(d));

  double best_val = -1.0;
  Vec best_u = starts.front();
  for (const Vec& u0 : starts) {
    Vec u = u0;
    double psi = (v + s * u).dot(A * (v + s * u));
    for (int it = 0; it < 200; ++it) {
      Vec g = A * (v + s * u);
      double gn = g.norm();
      if (gn <= 1e-300) {
        u = gauge.ellipsoid_eigenvectors().col(d - 1);
        gn = 1.0;
        g = u;
      }
      Vec un = g / gn;
      double psin = (v + s * un).dot(A * (v + s * un));
      u = un;
      if (std::abs(psin - psi) <= 1e-13 * (1.0 + psin)) {
        psi = psin;
        break;
      }
      psi = psin;
    }
    if (psi > best_val) {
      best_val = psi;
      best_u = u;
    }
  }
  return best_u;
}

// Generic bisection for the minimal time given a predicate "the body x + tF
// intersects the target within tolerance" plus a witness extractor at the
// final feasible scale.
struct BisectOutcome {
  double hi = 0.0;
  bool at_zero = false;
};

template <typename Predicate>
BisectOutcome bisect_min_scale(const Predicate& feasible) {
  BisectOutcome out;
  if (feasible(0.0)) {
    out.at_zero = true;
    return out;
  }
  double hi = 1.0;
  int grow = 0;
  while (!feasible(hi)) {
    hi *= 2.0;
    if (++grow > 200) throw std::runtime_error("minimal time: failed to bracket the scale");
  }
  double lo = hi > 1.0 ? hi * 0.5 : 0.0;
  const double width = kBisectTol * (1.0 + hi);
  while (hi - lo > width) {
    double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  out.hi = hi;
  return out;
}

}  // namespace detail

// Maximal time: inf{t >= 0 : Q is contained in x + tF}, evaluated through the
// sup of rho_F(w - x) over Q. Requires a bounded target.
inline TimeValue max_time(const GaugeBody& gauge, const TargetSet& target, const Vec& x) {
  if (!target.bounded())
    throw std::invalid_argument("max_time: target is unbounded");
  TimeValue tv;
  switch (target.kind()) {
    case TargetKind::kPointCloud:
    case TargetKind::kVPolytope: {
      // rho_F is convex, so the sup over the hull is attained at a vertex
      const auto& verts = target.vertices();
      double best = -1.0;
      std::size_t best_i = 0;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        double v = gauge.value(verts[i] - x);
        if (v > best) {
          best = v;
          best_i = i;
        }
      }
      tv.value = best;
      tv.witness = verts[best_i];
      return tv;
    }
    case TargetKind::kEuclideanBall: {
      const Vec& c = target.center();
      const double s = target.radius();
      Vec v = c - x;
      if (s == 0.0) {
        tv.value = gauge.value(v);
        tv.witness = c;
        return tv;
      }
      switch (gauge.kind()) {
        case GaugeKind::kEuclideanBall: {
          double n = v.norm();
          Vec dir;
          if (n > 0.0) {
            dir = v / n;
          } else {
            dir = Vec::Zero(x.size());
            dir[0] = 1.0;  // any boundary point works when x is the center
          }
          tv.witness = c + s * dir;
          tv.value = n + s;
          return tv;
        }
        case GaugeKind::kHPolytope: {
          // sup over the ball of a max of affine functions, exact per row
          const Mat& rows = gauge.rows();
          const Vec& norms = gauge.row_norms();
          double best = -std::numeric_limits<double>::infinity();
          Eigen::Index best_j = 0;
          for (Eigen::Index j = 0; j < rows.rows(); ++j) {
            double val = rows.row(j).dot(v) + s * norms[j];
            if (val > best) {
              best = val;
              best_j = j;
            }
          }
          tv.witness = c + (s / norms[best_j]) * rows.row(best_j).transpose();
          tv.value = std::max(0.0, best);
          return tv;
        }
        case GaugeKind::kEllipsoid: {
          Vec u = detail::sphere_ascent_direction(gauge, v, s);
          tv.witness = c + s * u;
          tv.value = gauge.value(tv.witness - x);
          return tv;
        }
      }
      return tv;
    }
    case TargetKind::kHalfspace:
      throw std::invalid_argument("max_time: target is unbounded");
  }
  return tv;
}

// Minimal time: inf{t >= 0 : (x + tF) intersects Q} = inf of rho_F(q - x)
// over Q. Attained in this finite-dimensional setting.
inline TimeValue min_time(const GaugeBody& gauge, const TargetSet& target, const Vec& x) {
  TimeValue tv;

  if (target.kind() == TargetKind::kPointCloud) {
    const auto& pts = target.vertices();
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      double v = gauge.value(pts[i] - x);
      if (v < best) {
        best = v;
        best_i = i;
      }
    }
    tv.value = best;
    tv.witness = pts[best_i];
    return tv;
  }

  if (gauge.kind() == GaugeKind::kEuclideanBall) {
    switch (target.kind()) {
      case TargetKind::kEuclideanBall: {
        Vec dvec = x - target.center();
        double n = dvec.norm();
        if (n <= target.radius()) {
          tv.value = 0.0;
          tv.witness = x;
        } else {
          tv.value = n - target.radius();
          tv.witness = target.center() + (target.radius() / n) * dvec;
        }
        return tv;
      }
      case TargetKind::kHalfspace: {
        const Vec& a = target.normal();
        double viol = a.dot(x) - target.offset();
        tv.value = std::max(0.0, viol / a.norm());
        tv.witness = viol > 0.0 ? Vec(x - (viol / a.squaredNorm()) * a) : x;
        return tv;
      }
      case TargetKind::kVPolytope: {
        Vec p = target.euclid_project(x);
        tv.value = (x - p).norm();
        tv.witness = p;
        return tv;
      }
      default:
        break;
    }
  }

  // Non-Euclidean gauge routes.
  if (target.kind() == TargetKind::kEuclideanBall) {
    // bisection on t of "Euclidean distance from the ball center to x + tF
    // is at most the ball radius"
    const Vec& c = target.center();
    const double s = target.radius();
    Vec v = c - x;
    auto feasible = [&](double t) { return (v - gauge.project_scaled(v, t)).norm() <= s; };
    auto out = detail::bisect_min_scale(feasible);
    if (out.at_zero) {
      tv.value = 0.0;
      tv.witness = x;
      return tv;
    }
    Vec q = x + gauge.project_scaled(v, out.hi);
    Vec dir = q - c;
    double n = dir.norm();
    tv.witness = n > 0.0 ? Vec(c + (s / n) * dir) : Vec(x);
    tv.value = gauge.value(tv.witness - x);
    return tv;
  }

  if (target.kind() == TargetKind::kHalfspace) {
    const Vec& a = target.normal();
    double viol = a.dot(x) - target.offset();
    if (viol <= 0.0) {
      tv.value = 0.0;
      tv.witness = x;
      return tv;
    }
    if (auto sup = gauge.support(-a)) {
      // the body first touches the halfspace along the support direction
      tv.value = viol / sup->value;
      tv.witness = x + tv.value * sup->point;
      return tv;
    }
  }

  // General convex target: bisection with the alternating-projection distance
  // predicate between Q and x + tF.
  auto proj_q = [&](const Vec& p) { return target.euclid_project(p); };
  double pair_tol = detail::kPairTol * (1.0 + x.norm());
  auto body_distance = [&](double t) {
    auto proj_b = [&](const Vec& p) { return Vec(x + gauge.project_scaled(p - x, t)); };
    auto res = detail::alternating_distance(proj_q, proj_b, x, pair_tol * 0.01, 50000);
    return res;
  };
  auto feasible = [&](double t) { return body_distance(t).dist <= pair_tol; };
  auto out = detail::bisect_min_scale(feasible);
  if (out.at_zero) {
    tv.value = 0.0;
    tv.witness = target.euclid_project(x);
    return tv;
  }
  auto fin = body_distance(out.hi);
  tv.witness = fin.p;
  tv.value = gauge.value(tv.witness - x);
  return tv;
}

// All vertices realizing the maximal time within tol. Only finite-vertex
// targets enumerate their farthest set.
inline std::vector<Vec> farthest_projection(const GaugeBody& gauge, const TargetSet& target,
                                            const Vec& x, double tol) {
  const auto& verts = target.vertices();  // throws for non-vertex kinds
  double best = -1.0;
  std::vector<double> vals(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    vals[i] = gauge.value(verts[i] - x);
    best = std::max(best, vals[i]);
  }
  std::vector<Vec> out;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (vals[i] >= best - tol) out.push_back(verts[i]);
  }
  return out;
}

namespace detail {

inline ObjectiveValue objective_impl(const Scene& scene, const Vec& x, bool enclosing) {
  ObjectiveValue obj;
  obj.per_target.reserve(scene.targets.size());
  for (const TargetSet& t : scene.targets) {
    obj.per_target.push_back(enclosing ? max_time(scene.gauge, t, x)
                                       : min_time(scene.gauge, t, x));
    obj.value = std::max(obj.value, obj.per_target.back().value);
  }
  double tol = 1e-9 * (1.0 + obj.value);
  for (std::size_t i = 0; i < obj.per_target.size(); ++i) {
    if (obj.per_target[i].value >= obj.value - tol) obj.active.push_back(i);
  }
  return obj;
}

}  // namespace detail

// max over targets of the maximal time: the enclosing-ball objective C(x).
inline ObjectiveValue seb_objective(const Scene& scene, const Vec& x) {
  return detail::objective_impl(scene, x, true);
}

// max over targets of the minimal time: the intersecting-ball objective T(x).
inline ObjectiveValue sib_objective(const Scene& scene, const Vec& x) {
  return detail::objective_impl(scene, x, false);
}

inline ObjectiveValue objective(const Scene& scene, const Vec& x) {
  return detail::objective_impl(scene, x, scene.problem == Problem::kSeb);
}

// Subgradient of the minimax objective via the witness of the lowest active
// target. Zero at a global minimum with value 0.
inline Vec objective_subgradient(const Scene& scene, const Vec& x, const ObjectiveValue& obj) {
  if (obj.value <= 0.0 || obj.active.empty()) return Vec::Zero(scene.dimension);
  const TimeValue& tv = obj.per_target[obj.active.front()];
  return -scene.gauge.subgradient(tv.witness - x);
}

inline Vec seb_subgradient(const Scene& scene, const Vec& x) {
  return objective_subgradient(scene, x, seb_objective(scene, x));
}

inline Vec sib_subgradient(const Scene& scene, const Vec& x) {
  return objective_subgradient(scene, x, sib_objective(scene, x));
}

}  // namespace minkball
