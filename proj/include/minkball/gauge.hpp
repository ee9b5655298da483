#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minkball/detail/geometry.hpp"
#include "minkball/vec.hpp"

namespace minkball {

enum class GaugeKind { kEuclideanBall, kEllipsoid, kHPolytope };

struct SupportEval {
  double value = 0.0;
  Vec point;  // a point of F attaining the support value
};

// The unit body F of the solver: closed, bounded, convex, with the origin in
// its interior. Evaluates the Minkowski function rho_F, its subgradients and
// scaled membership. Immutable after construction; all operations are pure.
class GaugeBody {
 public:
  static GaugeBody euclidean_ball(int dim) {
    if (dim < 1) throw std::invalid_argument("gauge: dimension must be >= 1");
    GaugeBody g;
    g.kind_ = GaugeKind::kEuclideanBall;
    g.dim_ = dim;
    g.finalize();
    return g;
  }

  // F = {z : z' A z <= 1} with A symmetric positive definite.
  static GaugeBody ellipsoid(const Mat& A) {
    if (A.rows() != A.cols() || A.rows() < 1)
      throw std::invalid_argument("gauge: ellipsoid matrix must be square");
    double scale = A.cwiseAbs().maxCoeff();
    if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + scale))
      throw std::invalid_argument("gauge: ellipsoid matrix must be symmetric");
    GaugeBody g;
    g.kind_ = GaugeKind::kEllipsoid;
    g.dim_ = static_cast<int>(A.rows());
    g.A_ = 0.5 * (A + A.transpose());
    Eigen::SelfAdjointEigenSolver<Mat> eig(g.A_);
    g.evals_ = eig.eigenvalues();
    g.evecs_ = eig.eigenvectors();
    if (g.evals_.minCoeff() <= 1e-12 * std::max(1.0, g.evals_.maxCoeff()))
      throw std::invalid_argument("gauge: ellipsoid matrix must be positive definite");
    g.finalize();
    return g;
  }

  // F = {z : <rows_j, z> <= 1 for all j}. Bounded iff the rows positively
  // span the space; validated at construction.
  static GaugeBody hpolytope(const Mat& rows) {
    if (rows.rows() < 1 || rows.cols() < 1)
      throw std::invalid_argument("gauge: hpolytope needs at least one row");
    GaugeBody g;
    g.kind_ = GaugeKind::kHPolytope;
    g.dim_ = static_cast<int>(rows.cols());
    g.rows_ = rows;
    const Eigen::Index m = rows.rows();
    if (m < g.dim_ + 1)
      throw std::invalid_argument("gauge: hpolytope needs at least dim+1 rows to be bounded");
    g.row_norms_ = Vec(m);
    for (Eigen::Index j = 0; j < m; ++j) {
      g.row_norms_[j] = rows.row(j).norm();
      if (g.row_norms_[j] <= 0.0) throw std::invalid_argument("gauge: hpolytope row is zero");
    }
    g.check_bounded();
    if (g.dim_ == 2) {
      g.polygon_ = detail::hpolytope_vertices_2d(rows, Vec::Ones(m));
      if (g.polygon_.size() < 3)
        throw std::invalid_argument("gauge: hpolytope is degenerate or unbounded");
    }
    g.finalize();
    return g;
  }

  GaugeKind kind() const { return kind_; }
  int dim() const { return dim_; }

  // rho_F(z) = inf{t >= 0 : z in tF}
  double value(const Vec& z) const {
    check_dim(z);
    switch (kind_) {
      case GaugeKind::kEuclideanBall:
        return z.norm();
      case GaugeKind::kEllipsoid:
        return std::sqrt(std::max(0.0, z.dot(A_ * z)));
      case GaugeKind::kHPolytope: {
        double best = 0.0;
        for (Eigen::Index j = 0; j < rows_.rows(); ++j) best = std::max(best, rows_.row(j).dot(z));
        return best;
      }
    }
    return 0.0;
  }

  // A convex subgradient of rho_F at z. At z = 0 (and wherever the polyhedral
  // max is non-positive) the zero vector is returned, which is valid because
  // rho_F >= 0 = rho_F(0). Polyhedral ties break to the lowest row index.
  Vec subgradient(const Vec& z) const {
    check_dim(z);
    switch (kind_) {
      case GaugeKind::kEuclideanBall: {
        double n = z.norm();
        if (n <= 0.0) return Vec::Zero(dim_);
        return z / n;
      }
      case GaugeKind::kEllipsoid: {
        double v = value(z);
        if (v <= 0.0) return Vec::Zero(dim_);
        return (A_ * z) / v;
      }
      case GaugeKind::kHPolytope: {
        double best = 0.0;
        Eigen::Index best_j = -1;
        for (Eigen::Index j = 0; j < rows_.rows(); ++j) {
          double v = rows_.row(j).dot(z);
          if (v > best) {
            best = v;
            best_j = j;
          }
        }
        if (best_j < 0) return Vec::Zero(dim_);
        return rows_.row(best_j).transpose();
      }
    }
    return Vec::Zero(dim_);
  }

  // z in tF up to a relative tolerance.
  bool membership(const Vec& z, double t, double tol = 1e-12) const {
    if (t < 0.0) throw std::invalid_argument("gauge: membership scale must be nonnegative");
    return value(z) <= t + tol * (1.0 + t);
  }

  // Lipschitz constant of rho_F: sqrt(d) * max over signed coordinate
  // directions of rho_F.
  double lipschitz() const { return lipschitz_; }

  // Support function sigma_F(u) = sup{<u,z> : z in F} with an attaining
  // point. Not available in closed form for hpolytope bodies above 2D.
  std::optional<SupportEval> support(const Vec& u) const {
    check_dim(u);
    switch (kind_) {
      case GaugeKind::kEuclideanBall: {
        double n = u.norm();
        if (n <= 0.0) return SupportEval{0.0, Vec::Zero(dim_)};
        return SupportEval{n, u / n};
      }
      case GaugeKind::kEllipsoid: {
        Vec w = solve_A(u);
        double v = std::sqrt(std::max(0.0, u.dot(w)));
        if (v <= 0.0) return SupportEval{0.0, Vec::Zero(dim_)};
        return SupportEval{v, w / v};
      }
      case GaugeKind::kHPolytope: {
        if (polygon_.empty()) return std::nullopt;
        double best = -std::numeric_limits<double>::infinity();
        Vec best_v;
        for (const Vec& v : polygon_) {
          double s = u.dot(v);
          if (s > best) {
            best = s;
            best_v = v;
          }
        }
        return SupportEval{best, best_v};
      }
    }
    return std::nullopt;
  }

  // Euclidean projection of p onto tF, t >= 0.
  Vec project_scaled(const Vec& p, double t) const {
    check_dim(p);
    if (t < 0.0) throw std::invalid_argument("gauge: projection scale must be nonnegative");
    if (t == 0.0) return Vec::Zero(dim_);
    switch (kind_) {
      case GaugeKind::kEuclideanBall: {
        double n = p.norm();
        return n <= t ? p : Vec(p * (t / n));
      }
      case GaugeKind::kEllipsoid:
        return project_ellipsoid(p, t);
      case GaugeKind::kHPolytope: {
        if (dim_ == 2) {
          std::vector<Vec> scaled = polygon_;
          for (Vec& v : scaled) v *= t;
          return detail::project_convex_polygon_2d(scaled, p);
        }
        auto res = detail::project_halfspaces_dykstra(rows_, Vec::Constant(rows_.rows(), t), p,
                                                      1e-13, 100000);
        if (!res.converged)
          throw std::runtime_error("gauge: projection onto scaled body did not converge");
        return res.point;
      }
    }
    return p;
  }

  const Mat& rows() const { return rows_; }
  const Vec& row_norms() const { return row_norms_; }
  const Mat& ellipsoid_matrix() const { return A_; }
  const Vec& ellipsoid_eigenvalues() const { return evals_; }
  const Mat& ellipsoid_eigenvectors() const { return evecs_; }
  // CCW vertex loop of a 2D hpolytope body; empty otherwise.
  const std::vector<Vec>& polygon() const { return polygon_; }

  Vec solve_A(const Vec& u) const {
    // A^{-1} u through the cached eigendecomposition
    Vec w = evecs_.transpose() * u;
    for (Eigen::Index i = 0; i < w.size(); ++i) w[i] /= evals_[i];
    return evecs_ * w;
  }

 private:
  GaugeBody() = default;

  void check_dim(const Vec& z) const {
    if (static_cast<int>(z.size()) != dim_)
      throw std::invalid_argument("gauge: vector has dimension " + std::to_string(z.size()) +
                                  ", expected " + std::to_string(dim_));
  }

  // Boundedness of {z : rows z <= 1} is equivalent to the recession cone
  // {z : rows z <= 0} being trivial, which fails iff the projection of some
  // signed coordinate direction onto that cone is nonzero.
  void check_bounded() const {
    const Eigen::Index m = rows_.rows();
    Vec zero_off = Vec::Zero(m);
    for (int i = 0; i < dim_; ++i) {
      for (double sign : {1.0, -1.0}) {
        Vec e = Vec::Zero(dim_);
        e[i] = sign;
        // cheap necessary condition first: rho_F(e) must be positive
        double v = 0.0;
        for (Eigen::Index j = 0; j < m; ++j) v = std::max(v, rows_.row(j).dot(e));
        if (v <= 0.0)
          throw std::invalid_argument("gauge: hpolytope is unbounded (recession direction found)");
        auto res = detail::project_halfspaces_dykstra(rows_, zero_off, e, 1e-12, 20000);
        if (res.point.norm() > 1e-7)
          throw std::invalid_argument("gauge: hpolytope is unbounded (recession direction found)");
      }
    }
  }

  Vec project_ellipsoid(const Vec& p, double t) const {
    double q = p.dot(A_ * p);
    if (q <= t * t) return p;
    // eigencoordinates: minimize |w - pt|^2 subject to sum lambda_i w_i^2 <= t^2
    Vec pt = evecs_.transpose() * p;
    auto residual = [&](double mu) {
      double s = 0.0;
      for (Eigen::Index i = 0; i < pt.size(); ++i) {
        double w = pt[i] / (1.0 + mu * evals_[i]);
        s += evals_[i] * w * w;
      }
      return s - t * t;
    };
    double lo = 0.0, hi = 1.0;
    while (residual(hi) > 0.0) {
      hi *= 2.0;
      if (hi > 1e30) throw std::runtime_error("gauge: ellipsoid projection failed to bracket");
    }
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      (residual(mid) > 0.0 ? lo : hi) = mid;
    }
    double mu = 0.5 * (lo + hi);
    Vec w(pt.size());
    for (Eigen::Index i = 0; i < pt.size(); ++i) w[i] = pt[i] / (1.0 + mu * evals_[i]);
    return evecs_ * w;
  }

  void finalize() {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i) {
      for (double sign : {1.0, -1.0}) {
        Vec e = Vec::Zero(dim_);
        e[i] = sign;
        m = std::max(m, value(e));
      }
    }
    lipschitz_ = std::sqrt(static_cast<double>(dim_)) * m;
  }

  GaugeKind kind_ = GaugeKind::kEuclideanBall;
  int dim_ = 0;
  Mat A_;      // ellipsoid
  Vec evals_;  // ellipsoid eigendecomposition
  Mat evecs_;
  Mat rows_;  // hpolytope
  Vec row_norms_;
  std::vector<Vec> polygon_;  // 2D hpolytope vertex loop
  double lipschitz_ = 1.0;
};

}  // namespace minkball
