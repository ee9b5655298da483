#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minkball/detail/geometry.hpp"
#include "minkball/vec.hpp"

namespace minkball {

enum class TargetKind { kPointCloud, kEuclideanBall, kVPolytope, kHalfspace };

// One target set: point cloud, Euclidean ball, V-polytope (convex hull of its
// vertices) or halfspace {x : <a,x> <= b}. Immutable; operations are pure.
class TargetSet {
 public:
  static TargetSet point_cloud(std::vector<Vec> points) {
    if (points.empty()) throw std::invalid_argument("target: point cloud must be nonempty");
    TargetSet t;
    t.kind_ = TargetKind::kPointCloud;
    t.points_ = std::move(points);
    t.dim_ = static_cast<int>(t.points_.front().size());
    t.check_points();
    return t;
  }

  static TargetSet euclidean_ball(Vec center, double radius) {
    if (radius < 0.0) throw std::invalid_argument("target: ball radius must be nonnegative");
    if (center.size() < 1) throw std::invalid_argument("target: ball center must be nonempty");
    TargetSet t;
    t.kind_ = TargetKind::kEuclideanBall;
    t.center_ = std::move(center);
    t.radius_ = radius;
    t.dim_ = static_cast<int>(t.center_.size());
    return t;
  }

  static TargetSet vpolytope(std::vector<Vec> vertices) {
    if (vertices.empty()) throw std::invalid_argument("target: vpolytope must be nonempty");
    TargetSet t;
    t.kind_ = TargetKind::kVPolytope;
    t.points_ = std::move(vertices);
    t.dim_ = static_cast<int>(t.points_.front().size());
    t.check_points();
    if (t.dim_ == 2) t.hull2d_ = detail::convex_hull_2d(t.points_);
    return t;
  }

  static TargetSet halfspace(Vec normal, double offset) {
    if (normal.size() < 1 || normal.norm() <= 0.0)
      throw std::invalid_argument("target: halfspace normal must be nonzero");
    TargetSet t;
    t.kind_ = TargetKind::kHalfspace;
    t.center_ = std::move(normal);
    t.radius_ = offset;
    t.dim_ = static_cast<int>(t.center_.size());
    return t;
  }

  TargetKind kind() const { return kind_; }
  int dim() const { return dim_; }
  bool bounded() const { return kind_ != TargetKind::kHalfspace; }
  bool strictly_convex() const { return kind_ == TargetKind::kEuclideanBall && radius_ > 0.0; }

  // sup{<a, w> : w in Q}; nullopt encodes +infinity (halfspace directions
  // along which the supremum is unattained).
  std::optional<double> support_value(const Vec& a) const {
    check_dim(a);
    double an = a.norm();
    if (an <= 0.0) throw std::invalid_argument("target: support direction must be nonzero");
    switch (kind_) {
      case TargetKind::kPointCloud:
      case TargetKind::kVPolytope: {
        double best = -std::numeric_limits<double>::infinity();
        for (const Vec& p : points_) best = std::max(best, a.dot(p));
        return best;
      }
      case TargetKind::kEuclideanBall:
        return a.dot(center_) + radius_ * an;
      case TargetKind::kHalfspace: {
        double nn = center_.norm();
        double c = a.dot(center_);
        if (nn * an - c <= 1e-12 * nn * an) return radius_ * an / nn;
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  // Nearest point of Q to x in the Euclidean metric. For a point cloud with
  // several points this is a nearest point (lowest index on ties), not a
  // convex projection.
  Vec euclid_project(const Vec& x) const {
    check_dim(x);
    switch (kind_) {
      case TargetKind::kPointCloud: {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_i = 0;
        for (std::size_t i = 0; i < points_.size(); ++i) {
          double d = (points_[i] - x).squaredNorm();
          if (d < best) {
            best = d;
            best_i = i;
          }
        }
        return points_[best_i];
      }
      case TargetKind::kEuclideanBall: {
        Vec d = x - center_;
        double n = d.norm();
        if (n <= radius_) return x;
        return center_ + (radius_ / n) * d;
      }
      case TargetKind::kHalfspace: {
        double viol = center_.dot(x) - radius_;
        if (viol <= 0.0) return x;
        return x - (viol / center_.squaredNorm()) * center_;
      }
      case TargetKind::kVPolytope: {
        if (points_.size() == 1) return points_.front();
        if (dim_ == 2) return detail::project_convex_polygon_2d(hull2d_, x);
        Mat V(dim_, static_cast<Eigen::Index>(points_.size()));
        for (std::size_t i = 0; i < points_.size(); ++i)
          V.col(static_cast<Eigen::Index>(i)) = points_[i];
        return detail::project_hull_nd(V, x, 1e-10, 50000);
      }
    }
    return x;
  }

  double distance_to(const Vec& x) const { return (x - euclid_project(x)).norm(); }

  const std::vector<Vec>& vertices() const {
    if (kind_ != TargetKind::kPointCloud && kind_ != TargetKind::kVPolytope)
      throw std::invalid_argument("target: unsupported kind for vertex enumeration");
    return points_;
  }

  // CCW hull of a 2D vpolytope (may have fewer than three vertices for
  // degenerate inputs)
  const std::vector<Vec>& hull2d() const {
    if (kind_ != TargetKind::kVPolytope || dim_ != 2)
      throw std::invalid_argument("target: hull is only kept for 2D vpolytopes");
    return hull2d_;
  }

  const Vec& center() const { return center_; }   // ball center / halfspace normal
  double radius() const { return radius_; }       // ball radius / halfspace offset
  const Vec& normal() const { return center_; }
  double offset() const { return radius_; }

 private:
  TargetSet() = default;

  void check_points() const {
    for (const Vec& p : points_) {
      if (static_cast<int>(p.size()) != dim_)
        throw std::invalid_argument("target: inconsistent point dimensions");
    }
  }

  void check_dim(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_)
      throw std::invalid_argument("target: vector has dimension " + std::to_string(x.size()) +
                                  ", expected " + std::to_string(dim_));
  }

  TargetKind kind_ = TargetKind::kPointCloud;
  int dim_ = 0;
  std::vector<Vec> points_;    // cloud / vpolytope
  std::vector<Vec> hull2d_;    // cached hull for 2D vpolytopes
  Vec center_;                 // ball center or halfspace normal
  double radius_ = 0.0;        // ball radius or halfspace offset
};

enum class ConstraintKind { kWholeSpace, kEuclideanBall, kAxisBox, kHPolytope, kSphere };

// The constraint set for centers. Sphere is the one nonconvex kind, kept for
// scenes whose solution set is a full circle; the solver treats it by
// multi-start only.
class ConstraintSet {
 public:
  static ConstraintSet whole_space(int dim) {
    if (dim < 1) throw std::invalid_argument("constraint: dimension must be >= 1");
    ConstraintSet c;
    c.kind_ = ConstraintKind::kWholeSpace;
    c.dim_ = dim;
    return c;
  }

  static ConstraintSet euclidean_ball(Vec center, double radius) {
    if (radius < 0.0) throw std::invalid_argument("constraint: ball radius must be nonnegative");
    ConstraintSet c;
    c.kind_ = ConstraintKind::kEuclideanBall;
    c.center_ = std::move(center);
    c.radius_ = radius;
    c.dim_ = static_cast<int>(c.center_.size());
    return c;
  }

  static ConstraintSet axis_box(Vec lo, Vec hi) {
    if (lo.size() != hi.size() || lo.size() < 1)
      throw std::invalid_argument("constraint: box bounds must have equal dimension");
    for (Eigen::Index i = 0; i < lo.size(); ++i) {
      if (lo[i] > hi[i]) throw std::invalid_argument("constraint: box requires lo <= hi");
    }
    ConstraintSet c;
    c.kind_ = ConstraintKind::kAxisBox;
    c.lo_ = std::move(lo);
    c.hi_ = std::move(hi);
    c.dim_ = static_cast<int>(c.lo_.size());
    return c;
  }

  static ConstraintSet hpolytope(Mat rows, Vec offsets) {
    if (rows.rows() != offsets.size() || rows.rows() < 1)
      throw std::invalid_argument("constraint: hpolytope rows/offsets mismatch");
    ConstraintSet c;
    c.kind_ = ConstraintKind::kHPolytope;
    c.rows_ = std::move(rows);
    c.offsets_ = std::move(offsets);
    c.dim_ = static_cast<int>(c.rows_.cols());
    for (Eigen::Index j = 0; j < c.rows_.rows(); ++j) {
      if (c.rows_.row(j).norm() <= 0.0)
        throw std::invalid_argument("constraint: hpolytope row is zero");
    }
    // nonemptiness probe: Dykstra from the origin must reach a feasible point
    auto res = detail::project_halfspaces_dykstra(c.rows_, c.offsets_, Vec::Zero(c.dim_), 1e-12,
                                                  100000);
    if (!res.converged)
      throw std::invalid_argument("constraint: hpolytope projection did not converge");
    for (Eigen::Index j = 0; j < c.rows_.rows(); ++j) {
      double v = c.rows_.row(j).dot(res.point) - c.offsets_[j];
      if (v > 1e-8 * (1.0 + std::abs(c.offsets_[j])))
        throw std::invalid_argument("constraint: hpolytope appears to be empty");
    }
    return c;
  }

  static ConstraintSet sphere(Vec center, double radius) {
    if (radius <= 0.0) throw std::invalid_argument("constraint: sphere radius must be positive");
    ConstraintSet c;
    c.kind_ = ConstraintKind::kSphere;
    c.center_ = std::move(center);
    c.radius_ = radius;
    c.dim_ = static_cast<int>(c.center_.size());
    return c;
  }

  ConstraintKind kind() const { return kind_; }
  int dim() const { return dim_; }
  bool convex() const { return kind_ != ConstraintKind::kSphere; }
  bool bounded() const {
    return kind_ == ConstraintKind::kEuclideanBall || kind_ == ConstraintKind::kAxisBox ||
           kind_ == ConstraintKind::kSphere;
  }

  Vec project(const Vec& x) const {
    check_dim(x);
    switch (kind_) {
      case ConstraintKind::kWholeSpace:
        return x;
      case ConstraintKind::kEuclideanBall: {
        Vec d = x - center_;
        double n = d.norm();
        if (n <= radius_) return x;
        return center_ + (radius_ / n) * d;
      }
      case ConstraintKind::kAxisBox: {
        Vec out(dim_);
        for (int i = 0; i < dim_; ++i) out[i] = std::clamp(x[i], lo_[i], hi_[i]);
        return out;
      }
      case ConstraintKind::kHPolytope: {
        auto res = detail::project_halfspaces_dykstra(rows_, offsets_, x, 1e-12, 100000);
        if (!res.converged)
          throw std::runtime_error("constraint: hpolytope projection did not converge");
        return res.point;
      }
      case ConstraintKind::kSphere: {
        Vec d = x - center_;
        double n = d.norm();
        if (n <= 0.0) {
          Vec out = center_;
          out[0] += radius_;  // deterministic tie-break at the center
          return out;
        }
        return center_ + (radius_ / n) * d;
      }
    }
    return x;
  }

  // Euclidean-flavoured infeasibility measure; zero on the set.
  double violation(const Vec& x) const {
    check_dim(x);
    switch (kind_) {
      case ConstraintKind::kWholeSpace:
        return 0.0;
      case ConstraintKind::kEuclideanBall:
        return std::max(0.0, (x - center_).norm() - radius_);
      case ConstraintKind::kAxisBox: {
        double v = 0.0;
        for (int i = 0; i < dim_; ++i)
          v = std::max({v, lo_[i] - x[i], x[i] - hi_[i]});
        return std::max(0.0, v);
      }
      case ConstraintKind::kHPolytope: {
        double v = 0.0;
        for (Eigen::Index j = 0; j < rows_.rows(); ++j)
          v = std::max(v, (rows_.row(j).dot(x) - offsets_[j]) / rows_.row(j).norm());
        return std::max(0.0, v);
      }
      case ConstraintKind::kSphere:
        return std::abs((x - center_).norm() - radius_);
    }
    return 0.0;
  }

  const Vec& center() const { return center_; }
  double radius() const { return radius_; }
  const Vec& lo() const { return lo_; }
  const Vec& hi() const { return hi_; }
  const Mat& rows() const { return rows_; }
  const Vec& offsets() const { return offsets_; }

 private:
  ConstraintSet() = default;

  void check_dim(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_)
      throw std::invalid_argument("constraint: vector has dimension " + std::to_string(x.size()) +
                                  ", expected " + std::to_string(dim_));
  }

  ConstraintKind kind_ = ConstraintKind::kWholeSpace;
  int dim_ = 0;
  Vec center_;
  double radius_ = 0.0;
  Vec lo_, hi_;
  Mat rows_;
  Vec offsets_;
};

}  // namespace minkball
