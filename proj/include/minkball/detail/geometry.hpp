#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "minkball/vec.hpp"

namespace minkball::detail {

inline double cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

inline Vec project_segment(const Vec& a, const Vec& b, const Vec& x) {
  Vec d = b - a;
  double dd = d.squaredNorm();
  if (dd <= 0.0) return a;
  double t = std::clamp((x - a).dot(d) / dd, 0.0, 1.0);
  return a + t * d;
}

// Andrew monotone chain; returns the hull counter-clockwise with collinear
// points dropped. Degenerate inputs (one point, collinear set) yield a hull
// with fewer than three vertices.
inline std::vector<Vec> convex_hull_2d(const std::vector<Vec>& pts) {
  std::vector<Vec> p = pts;
  std::sort(p.begin(), p.end(), [](const Vec& a, const Vec& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  p.erase(std::unique(p.begin(), p.end(),
                      [](const Vec& a, const Vec& b) { return a[0] == b[0] && a[1] == b[1]; }),
          p.end());
  const std::size_t n = p.size();
  if (n <= 2) return p;
  std::vector<Vec> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(hull[k - 1] - hull[k - 2], p[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(hull[k - 1] - hull[k - 2], p[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  return hull;
}

inline bool point_in_convex_polygon_2d(const std::vector<Vec>& poly, const Vec& x, double tol) {
  const std::size_t n = poly.size();
  if (n == 0) return false;
  if (n == 1) return (x - poly[0]).norm() <= tol;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& a = poly[i];
    const Vec& b = poly[(i + 1) % n];
    if (n == 2 && i == 1) break;
    if (cross2(b - a, x - a) < -tol) return false;
  }
  if (n == 2) {
    return (x - project_segment(poly[0], poly[1], x)).norm() <= tol;
  }
  return true;
}

inline Vec project_convex_polygon_2d(const std::vector<Vec>& poly, const Vec& x) {
  const std::size_t n = poly.size();
  if (n == 0) throw std::invalid_argument("empty polygon");
  if (n == 1) return poly[0];
  if (n == 2) return project_segment(poly[0], poly[1], x);
  double scale = 0.0;
  for (const Vec& v : poly) scale = std::max(scale, v.lpNorm<Eigen::Infinity>());
  if (point_in_convex_polygon_2d(poly, x, 1e-14 * (1.0 + scale))) return x;
  Vec best = poly[0];
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    Vec cand = project_segment(poly[i], poly[(i + 1) % n], x);
    double d = (cand - x).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = cand;
    }
  }
  return best;
}

// Sutherland-Hodgman clip of a polygon against the halfplane <a, z> <= b.
inline std::vector<Vec> clip_polygon_halfplane(const std::vector<Vec>& poly, const Vec& a, double b) {
  std::vector<Vec> out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& p = poly[i];
    const Vec& q = poly[(i + 1) % n];
    double fp = a.dot(p) - b;
    double fq = a.dot(q) - b;
    if (fp <= 0.0) out.push_back(p);
    if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0)) {
      double t = fp / (fp - fq);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

// Vertices of {z : rows*z <= offsets} in 2D by pairwise line intersection.
// Only meaningful for bounded, full-dimensional regions.
inline std::vector<Vec> hpolytope_vertices_2d(const Mat& rows, const Vec& offsets) {
  const Eigen::Index m = rows.rows();
  std::vector<Vec> verts;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      double det = rows(i, 0) * rows(j, 1) - rows(i, 1) * rows(j, 0);
      double scale = rows.row(i).norm() * rows.row(j).norm();
      if (std::abs(det) <= 1e-14 * (1.0 + scale)) continue;
      Vec z(2);
      z[0] = (offsets[i] * rows(j, 1) - offsets[j] * rows(i, 1)) / det;
      z[1] = (rows(i, 0) * offsets[j] - rows(j, 0) * offsets[i]) / det;
      bool feasible = true;
      for (Eigen::Index k = 0; k < m; ++k) {
        if (rows.row(k).dot(z) > offsets[k] + 1e-9 * (1.0 + std::abs(offsets[k]))) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      bool dup = false;
      for (const Vec& v : verts) {
        if ((v - z).norm() <= 1e-10 * (1.0 + z.norm())) {
          dup = true;
          break;
        }
      }
      if (!dup) verts.push_back(z);
    }
  }
  if (verts.size() >= 3) {
    Vec c = Vec::Zero(2);
    for (const Vec& v : verts) c += v;
    c /= static_cast<double>(verts.size());
    std::sort(verts.begin(), verts.end(), [&](const Vec& u, const Vec& v) {
      return std::atan2(u[1] - c[1], u[0] - c[0]) < std::atan2(v[1] - c[1], v[0] - c[0]);
    });
  }
  return verts;
}

struct DykstraResult {
  Vec point;
  bool converged = false;
  int cycles = 0;
};

// Dykstra alternating projections onto the intersection of the halfspaces
// {z : <rows_j, z> <= offsets_j}. Converges to the exact Euclidean projection
// of x0 for any consistent system.
inline DykstraResult project_halfspaces_dykstra(const Mat& rows, const Vec& offsets, const Vec& x0,
                                                double tol, int max_cycles) {
  const Eigen::Index m = rows.rows();
  DykstraResult res;
  res.point = x0;
  if (m == 0) {
    res.converged = true;
    return res;
  }
  Mat corrections = Mat::Zero(m, x0.size());
  Vec row_sq(m);
  for (Eigen::Index j = 0; j < m; ++j) row_sq[j] = rows.row(j).squaredNorm();
  Vec x = x0;
  Vec prev = x;
  for (int cycle = 0; cycle < max_cycles; ++cycle) {
    prev = x;
    for (Eigen::Index j = 0; j < m; ++j) {
      Vec y = x + corrections.row(j).transpose();
      double viol = rows.row(j).dot(y) - offsets[j];
      Vec projected = viol > 0.0 ? Vec(y - (viol / row_sq[j]) * rows.row(j).transpose()) : y;
      corrections.row(j) = (y - projected).transpose();
      x = projected;
    }
    res.cycles = cycle + 1;
    if ((x - prev).norm() <= tol) {
      res.converged = true;
      break;
    }
  }
  res.point = x;
  return res;
}

// Euclidean projection onto the probability simplex.
inline Vec project_simplex(const Vec& y) {
  const Eigen::Index n = y.size();
  std::vector<double> u(y.data(), y.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cssv = 0.0;
  double theta = 0.0;
  int rho = 0;
  double running = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    running += u[static_cast<std::size_t>(i)];
    double t = (running - 1.0) / static_cast<double>(i + 1);
    if (u[static_cast<std::size_t>(i)] - t > 0.0) {
      rho = static_cast<int>(i + 1);
      cssv = running;
    }
  }
  theta = (cssv - 1.0) / static_cast<double>(rho);
  Vec x(n);
  for (Eigen::Index i = 0; i < n; ++i) x[i] = std::max(y[i] - theta, 0.0);
  return x;
}

// Projection onto conv(columns of V) by projected gradient on the simplex of
// convex coefficients.
inline Vec project_hull_nd(const Mat& V, const Vec& x, double tol, int max_iters) {
  const Eigen::Index k = V.cols();
  if (k == 1) return V.col(0);
  Mat G = V.transpose() * V;
  double lip = 2.0 * G.selfadjointView<Eigen::Lower>().eigenvalues().maxCoeff();
  if (lip <= 0.0) return V.col(0);
  Vec lambda = Vec::Constant(k, 1.0 / static_cast<double>(k));
  Vec point = V * lambda;
  for (int it = 0; it < max_iters; ++it) {
    Vec grad = 2.0 * (G * lambda - V.transpose() * x);
    Vec next = project_simplex(lambda - grad / lip);
    Vec next_point = V * next;
    double move = (next_point - point).norm();
    lambda = next;
    point = next_point;
    if (move <= tol) break;
  }
  return point;
}

struct PairDistanceResult {
  Vec p;  // point in the first set
  Vec q;  // point in the second set
  double dist = 0.0;
  bool converged = false;
};

// Alternating Euclidean projections between two closed convex sets given by
// their projectors; converges to a pair realizing the distance.
inline PairDistanceResult alternating_distance(const std::function<Vec(const Vec&)>& proj_a,
                                               const std::function<Vec(const Vec&)>& proj_b,
                                               const Vec& seed, double tol, int max_iters) {
  PairDistanceResult res;
  Vec p = proj_a(seed);
  Vec q = proj_b(p);
  for (int it = 0; it < max_iters; ++it) {
    Vec p_next = proj_a(q);
    Vec q_next = proj_b(p_next);
    double move = (p_next - p).norm() + (q_next - q).norm();
    p = p_next;
    q = q_next;
    if (move <= tol) {
      res.converged = true;
      break;
    }
  }
  res.p = p;
  res.q = q;
  res.dist = (p - q).norm();
  return res;
}

}  // namespace minkball::detail
