#pragma once

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minkball/detail/geometry.hpp"
#include "minkball/scene.hpp"
#include "minkball/solver.hpp"
#include "minkball/vec.hpp"

namespace minkball {

namespace detail {

using nlohmann::json;

inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Deterministic JSON writer: fixed key order, floats at 17 significant
// digits so that values round-trip exactly.
class JsonWriter {
 public:
  void begin_object() {
    comma();
    out_ += '{';
    fresh_ = true;
  }
  void end_object() {
    out_ += '}';
    fresh_ = false;
  }
  void begin_array() {
    comma();
    out_ += '[';
    fresh_ = true;
  }
  void end_array() {
    out_ += ']';
    fresh_ = false;
  }
  void key(std::string_view k) {
    comma();
    out_ += '"';
    out_ += k;
    out_ += "\":";
    fresh_ = true;
  }
  void value(double v) {
    comma();
    out_ += fmt_double(v);
    fresh_ = false;
  }
  void value(int v) { value_raw(std::to_string(v)); }
  void value(std::size_t v) { value_raw(std::to_string(v)); }
  void value(bool v) { value_raw(v ? "true" : "false"); }
  void value(std::string_view s) {
    comma();
    out_ += '"';
    for (char c : s) {
      if (c == '"' || c == '\\') out_ += '\\';
      out_ += c;
    }
    out_ += '"';
    fresh_ = false;
  }
  void vector(const Vec& v) {
    begin_array();
    for (Eigen::Index i = 0; i < v.size(); ++i) value(v[i]);
    end_array();
  }
  void matrix(const Mat& m) {
    begin_array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      begin_array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) value(m(r, c));
      end_array();
    }
    end_array();
  }
  std::string take() { return std::move(out_); }

 private:
  void comma() {
    if (!fresh_ && !out_.empty() && out_.back() != '{' && out_.back() != '[' &&
        out_.back() != ':')
      out_ += ',';
    fresh_ = false;
  }
  void value_raw(const std::string& s) {
    comma();
    out_ += s;
    fresh_ = false;
  }
  std::string out_;
  bool fresh_ = true;
};

inline void reject_unknown(const json& j, std::initializer_list<std::string_view> allowed,
                           const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (std::string_view a : allowed) {
      if (it.key() == a) {
        ok = true;
        break;
      }
    }
    if (!ok) throw std::invalid_argument(where + ": unknown field '" + it.key() + "'");
  }
}

inline const json& require(const json& j, const char* field, const std::string& where) {
  auto it = j.find(field);
  if (it == j.end())
    throw std::invalid_argument(where + ": missing field '" + std::string(field) + "'");
  return *it;
}

inline double get_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw std::invalid_argument(where + ": expected a number");
  return j.get<double>();
}

inline Vec get_vector(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument(where + ": expected a vector");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = get_number(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

inline Mat get_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument(where + ": expected a matrix");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < j.size(); ++i)
    rows.push_back(get_vector(j[i], where + "[" + std::to_string(i) + "]"));
  Mat m(static_cast<Eigen::Index>(rows.size()), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw std::invalid_argument(where + ": ragged matrix rows");
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return m;
}

inline GaugeBody parse_gauge(const json& j, int dim) {
  const std::string where = "gauge";
  if (!j.is_object()) throw std::invalid_argument(where + ": expected an object");
  std::string kind = require(j, "kind", where).get<std::string>();
  if (kind == "euclidean") {
    reject_unknown(j, {"kind"}, where);
    return GaugeBody::euclidean_ball(dim);
  }
  if (kind == "ellipsoid") {
    reject_unknown(j, {"kind", "matrix"}, where);
    return GaugeBody::ellipsoid(get_matrix(require(j, "matrix", where), where + ".matrix"));
  }
  if (kind == "hpolytope") {
    reject_unknown(j, {"kind", "rows"}, where);
    return GaugeBody::hpolytope(get_matrix(require(j, "rows", where), where + ".rows"));
  }
  throw std::invalid_argument(where + ": unknown kind '" + kind + "'");
}

inline ConstraintSet parse_constraint(const json& j, int dim) {
  const std::string where = "constraint";
  if (!j.is_object()) throw std::invalid_argument(where + ": expected an object");
  std::string kind = require(j, "kind", where).get<std::string>();
  if (kind == "whole_space") {
    reject_unknown(j, {"kind"}, where);
    return ConstraintSet::whole_space(dim);
  }
  if (kind == "ball") {
    reject_unknown(j, {"kind", "center", "radius"}, where);
    return ConstraintSet::euclidean_ball(get_vector(require(j, "center", where), where + ".center"),
                                         get_number(require(j, "radius", where), where + ".radius"));
  }
  if (kind == "box") {
    reject_unknown(j, {"kind", "lo", "hi"}, where);
    return ConstraintSet::axis_box(get_vector(require(j, "lo", where), where + ".lo"),
                                   get_vector(require(j, "hi", where), where + ".hi"));
  }
  if (kind == "hpolytope") {
    reject_unknown(j, {"kind", "rows", "offsets"}, where);
    return ConstraintSet::hpolytope(get_matrix(require(j, "rows", where), where + ".rows"),
                                    get_vector(require(j, "offsets", where), where + ".offsets"));
  }
  if (kind == "sphere") {
    reject_unknown(j, {"kind", "center", "radius"}, where);
    return ConstraintSet::sphere(get_vector(require(j, "center", where), where + ".center"),
                                 get_number(require(j, "radius", where), where + ".radius"));
  }
  throw std::invalid_argument(where + ": unknown kind '" + kind + "'");
}

inline TargetSet parse_target(const json& j, std::size_t index) {
  const std::string where = "target " + std::to_string(index);
  if (!j.is_object()) throw std::invalid_argument(where + ": expected an object");
  std::string kind = require(j, "kind", where).get<std::string>();
  if (kind == "points") {
    reject_unknown(j, {"kind", "points"}, where);
    const json& pts = require(j, "points", where);
    if (!pts.is_array() || pts.empty())
      throw std::invalid_argument(where + ": 'points' must be a nonempty array");
    std::vector<Vec> points;
    for (std::size_t i = 0; i < pts.size(); ++i)
      points.push_back(get_vector(pts[i], where + ".points[" + std::to_string(i) + "]"));
    return TargetSet::point_cloud(std::move(points));
  }
  if (kind == "ball") {
    reject_unknown(j, {"kind", "center", "radius"}, where);
    return TargetSet::euclidean_ball(get_vector(require(j, "center", where), where + ".center"),
                                     get_number(require(j, "radius", where), where + ".radius"));
  }
  if (kind == "vpolytope") {
    reject_unknown(j, {"kind", "vertices"}, where);
    const json& vs = require(j, "vertices", where);
    if (!vs.is_array() || vs.empty())
      throw std::invalid_argument(where + ": 'vertices' must be a nonempty array");
    std::vector<Vec> verts;
    for (std::size_t i = 0; i < vs.size(); ++i)
      verts.push_back(get_vector(vs[i], where + ".vertices[" + std::to_string(i) + "]"));
    return TargetSet::vpolytope(std::move(verts));
  }
  if (kind == "halfspace") {
    reject_unknown(j, {"kind", "normal", "offset"}, where);
    return TargetSet::halfspace(get_vector(require(j, "normal", where), where + ".normal"),
                                get_number(require(j, "offset", where), where + ".offset"));
  }
  throw std::invalid_argument(where + ": unknown kind '" + kind + "'");
}

}  // namespace detail

// Parse and fully validate a scene from JSON text. Unknown fields are
// rejected; validation errors name the violated assumption.
inline Scene parse_scene(std::string_view text) {
  namespace dj = detail;
  dj::json j;
  try {
    j = dj::json::parse(text);
  } catch (const dj::json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) {
      if (text[i] == '\n') ++line;
    }
    throw std::invalid_argument("scene parse error at line " + std::to_string(line) + ": " +
                                e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("scene: expected a JSON object");
  dj::reject_unknown(j, {"dimension", "problem", "gauge", "constraint", "targets", "name"},
                     "scene");
  Scene scene;
  const dj::json& jd = dj::require(j, "dimension", "scene");
  if (!jd.is_number_integer() || jd.get<int>() < 1)
    throw std::invalid_argument("scene: 'dimension' must be a positive integer");
  scene.dimension = jd.get<int>();
  std::string prob = dj::require(j, "problem", "scene").get<std::string>();
  if (prob == "seb") {
    scene.problem = Problem::kSeb;
  } else if (prob == "sib") {
    scene.problem = Problem::kSib;
  } else {
    throw std::invalid_argument("scene: 'problem' must be \"seb\" or \"sib\"");
  }
  if (j.contains("name")) scene.name = j["name"].get<std::string>();
  scene.gauge = dj::parse_gauge(dj::require(j, "gauge", "scene"), scene.dimension);
  scene.constraint = dj::parse_constraint(dj::require(j, "constraint", "scene"), scene.dimension);
  const dj::json& jt = dj::require(j, "targets", "scene");
  if (!jt.is_array() || jt.empty())
    throw std::invalid_argument("scene: 'targets' must be a nonempty array");
  for (std::size_t i = 0; i < jt.size(); ++i)
    scene.targets.push_back(dj::parse_target(jt[i], i));
  validate_scene(scene);
  return scene;
}

inline std::string emit_scene(const Scene& scene) {
  detail::JsonWriter w;
  w.begin_object();
  if (!scene.name.empty()) {
    w.key("name");
    w.value(std::string_view(scene.name));
  }
  w.key("dimension");
  w.value(scene.dimension);
  w.key("problem");
  w.value(scene.problem == Problem::kSeb ? std::string_view("seb") : std::string_view("sib"));
  w.key("gauge");
  w.begin_object();
  switch (scene.gauge.kind()) {
    case GaugeKind::kEuclideanBall:
      w.key("kind");
      w.value(std::string_view("euclidean"));
      break;
    case GaugeKind::kEllipsoid:
      w.key("kind");
      w.value(std::string_view("ellipsoid"));
      w.key("matrix");
      w.matrix(scene.gauge.ellipsoid_matrix());
      break;
    case GaugeKind::kHPolytope:
      w.key("kind");
      w.value(std::string_view("hpolytope"));
      w.key("rows");
      w.matrix(scene.gauge.rows());
      break;
  }
  w.end_object();
  w.key("constraint");
  w.begin_object();
  switch (scene.constraint.kind()) {
    case ConstraintKind::kWholeSpace:
      w.key("kind");
      w.value(std::string_view("whole_space"));
      break;
    case ConstraintKind::kEuclideanBall:
      w.key("kind");
      w.value(std::string_view("ball"));
      w.key("center");
      w.vector(scene.constraint.center());
      w.key("radius");
      w.value(scene.constraint.radius());
      break;
    case ConstraintKind::kAxisBox:
      w.key("kind");
      w.value(std::string_view("box"));
      w.key("lo");
      w.vector(scene.constraint.lo());
      w.key("hi");
      w.vector(scene.constraint.hi());
      break;
    case ConstraintKind::kHPolytope:
      w.key("kind");
      w.value(std::string_view("hpolytope"));
      w.key("rows");
      w.matrix(scene.constraint.rows());
      w.key("offsets");
      w.vector(scene.constraint.offsets());
      break;
    case ConstraintKind::kSphere:
      w.key("kind");
      w.value(std::string_view("sphere"));
      w.key("center");
      w.vector(scene.constraint.center());
      w.key("radius");
      w.value(scene.constraint.radius());
      break;
  }
  w.end_object();
  w.key("targets");
  w.begin_array();
  for (const TargetSet& t : scene.targets) {
    w.begin_object();
    switch (t.kind()) {
      case TargetKind::kPointCloud:
      case TargetKind::kVPolytope: {
        bool cloud = t.kind() == TargetKind::kPointCloud;
        w.key("kind");
        w.value(cloud ? std::string_view("points") : std::string_view("vpolytope"));
        w.key(cloud ? "points" : "vertices");
        w.begin_array();
        for (const Vec& p : t.vertices()) w.vector(p);
        w.end_array();
        break;
      }
      case TargetKind::kEuclideanBall:
        w.key("kind");
        w.value(std::string_view("ball"));
        w.key("center");
        w.vector(t.center());
        w.key("radius");
        w.value(t.radius());
        break;
      case TargetKind::kHalfspace:
        w.key("kind");
        w.value(std::string_view("halfspace"));
        w.key("normal");
        w.vector(t.normal());
        w.key("offset");
        w.value(t.offset());
        break;
    }
    w.end_object();
  }
  w.end_array();
  w.end_object();
  std::string out = w.take();
  out += '\n';
  return out;
}

// Canonical solution JSON: center, radius, active indices, certificate and
// the optional uniqueness block.
inline std::string emit_solution(const Solution& sol, const UniquenessReport* uniq = nullptr) {
  detail::JsonWriter w;
  w.begin_object();
  w.key("center");
  w.vector(sol.center);
  w.key("radius");
  w.value(sol.radius);
  w.key("active_targets");
  w.begin_array();
  for (std::size_t i : sol.active_indices) w.value(i);
  w.end_array();
  w.key("converged");
  w.value(sol.converged);
  w.key("certificate");
  w.begin_object();
  w.key("pass");
  w.value(sol.certificate.pass());
  w.key("tol");
  w.value(sol.certificate.tol);
  w.key("worst_violation");
  w.value(sol.certificate.worst_violation);
  w.key("center_feasible");
  w.value(sol.certificate.center_feasible);
  w.key("center_violation");
  w.value(sol.certificate.center_violation);
  w.key("targets");
  w.begin_array();
  for (const TargetCheck& t : sol.certificate.targets) {
    w.begin_object();
    w.key("index");
    w.value(t.index);
    w.key("time");
    w.value(t.time);
    w.key("violation");
    w.value(t.violation);
    w.key("pass");
    w.value(t.pass);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  if (uniq != nullptr) {
    w.key("uniqueness");
    w.begin_object();
    w.key("classification");
    switch (uniq->classification) {
      case UniquenessClass::kUnique:
        w.value(std::string_view("unique"));
        break;
      case UniquenessClass::kNonUnique:
        w.value(std::string_view("non_unique"));
        break;
      case UniquenessClass::kInconclusive:
        w.value(std::string_view("inconclusive"));
        break;
    }
    w.key("diameter");
    w.value(uniq->diameter);
    w.key("samples");
    w.value(uniq->minimizer_samples.size());
    w.end_object();
  }
  w.end_object();
  std::string out = w.take();
  out += '\n';
  return out;
}

struct SolutionSummary {
  Vec center;
  double radius = 0.0;
};

inline SolutionSummary parse_solution_summary(std::string_view text) {
  namespace dj = detail;
  dj::json j;
  try {
    j = dj::json::parse(text);
  } catch (const dj::json::parse_error& e) {
    throw std::invalid_argument(std::string("solution parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("solution: expected a JSON object");
  SolutionSummary s;
  s.center = dj::get_vector(dj::require(j, "center", "solution"), "solution.center");
  s.radius = dj::get_number(dj::require(j, "radius", "solution"), "solution.radius");
  return s;
}

namespace detail {

inline std::string fmt_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

struct SvgMapper {
  double sx, sy, scale;
  double height;
  std::string x(double wx) const { return fmt_coord((wx - sx) * scale); }
  std::string y(double wy) const { return fmt_coord(height - (wy - sy) * scale); }
  std::string len(double w) const { return fmt_coord(w * scale); }
};

inline void svg_polygon(std::string& out, const SvgMapper& m, const std::vector<Vec>& pts,
                        const std::string& style) {
  if (pts.empty()) return;
  out += "<polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += m.x(pts[i][0]) + "," + m.y(pts[i][1]);
  }
  out += "\" " + style + "/>\n";
}

inline void svg_circle(std::string& out, const SvgMapper& m, const Vec& c, double r,
                       const std::string& style) {
  out += "<circle cx=\"" + m.x(c[0]) + "\" cy=\"" + m.y(c[1]) + "\" r=\"" + m.len(r) + "\" " +
         style + "/>\n";
}

}  // namespace detail

// Deterministic SVG drawing of a 2D scene together with the optimal ball
// center + radius*F.
inline std::string render_svg(const Scene& scene, const Vec& center, double radius) {
  if (scene.dimension != 2)
    throw std::invalid_argument("render: only 2D scenes can be drawn");
  using detail::SvgMapper;

  // world box: padded anchors plus the ball extent
  Box box = scene_anchor_box(scene);
  Vec ext(2);
  switch (scene.gauge.kind()) {
    case GaugeKind::kEuclideanBall:
      ext = Vec::Constant(2, radius);
      break;
    case GaugeKind::kHPolytope: {
      ext.setZero();
      for (const Vec& v : scene.gauge.polygon()) {
        ext[0] = std::max(ext[0], std::abs(v[0]) * radius);
        ext[1] = std::max(ext[1], std::abs(v[1]) * radius);
      }
      break;
    }
    case GaugeKind::kEllipsoid: {
      for (int i = 0; i < 2; ++i) {
        Vec e = Vec::Zero(2);
        e[i] = 1.0;
        ext[i] = radius * std::sqrt(std::max(0.0, e.dot(scene.gauge.solve_A(e))));
      }
      break;
    }
  }
  box.lo = box.lo.cwiseMin(center - ext);
  box.hi = box.hi.cwiseMax(center + ext);
  double pad = 0.1 * std::max((box.hi - box.lo).norm(), 1.0);
  box.lo.array() -= pad;
  box.hi.array() += pad;

  const double width = 720.0;
  double wx = box.hi[0] - box.lo[0];
  double wy = box.hi[1] - box.lo[1];
  SvgMapper m{box.lo[0], box.lo[1], width / wx, 0.0};
  m.height = wy * m.scale;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt_coord(width) +
         "\" height=\"" + detail::fmt_coord(m.height) + "\" viewBox=\"0 0 " +
         detail::fmt_coord(width) + " " + detail::fmt_coord(m.height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // world box corners as a clip polygon for unbounded regions
  std::vector<Vec> world = {make_vec({box.lo[0], box.lo[1]}), make_vec({box.hi[0], box.lo[1]}),
                            make_vec({box.hi[0], box.hi[1]}), make_vec({box.lo[0], box.hi[1]})};

  const std::string constraint_style =
      "fill=\"none\" stroke=\"#777777\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\" "
      "class=\"constraint\"";
  switch (scene.constraint.kind()) {
    case ConstraintKind::kWholeSpace:
      break;  // nothing to outline
    case ConstraintKind::kEuclideanBall:
    case ConstraintKind::kSphere:
      detail::svg_circle(out, m, scene.constraint.center(), scene.constraint.radius(),
                         constraint_style);
      break;
    case ConstraintKind::kAxisBox: {
      std::vector<Vec> poly = {
          make_vec({scene.constraint.lo()[0], scene.constraint.lo()[1]}),
          make_vec({scene.constraint.hi()[0], scene.constraint.lo()[1]}),
          make_vec({scene.constraint.hi()[0], scene.constraint.hi()[1]}),
          make_vec({scene.constraint.lo()[0], scene.constraint.hi()[1]})};
      detail::svg_polygon(out, m, poly, constraint_style);
      break;
    }
    case ConstraintKind::kHPolytope: {
      std::vector<Vec> poly = world;
      for (Eigen::Index j = 0; j < scene.constraint.rows().rows(); ++j) {
        poly = detail::clip_polygon_halfplane(poly, scene.constraint.rows().row(j).transpose(),
                                              scene.constraint.offsets()[j]);
      }
      detail::svg_polygon(out, m, poly, constraint_style);
      break;
    }
  }

  const std::string target_style =
      "fill=\"#4477aa\" fill-opacity=\"0.25\" stroke=\"#4477aa\" stroke-width=\"1.5\" "
      "class=\"target\"";
  for (const TargetSet& t : scene.targets) {
    switch (t.kind()) {
      case TargetKind::kPointCloud:
        for (const Vec& p : t.vertices()) {
          out += "<circle cx=\"" + m.x(p[0]) + "\" cy=\"" + m.y(p[1]) +
                 "\" r=\"4\" fill=\"#4477aa\" class=\"target\"/>\n";
        }
        break;
      case TargetKind::kEuclideanBall:
        detail::svg_circle(out, m, t.center(), t.radius(), target_style);
        break;
      case TargetKind::kVPolytope:
        detail::svg_polygon(out, m, detail::convex_hull_2d(t.vertices()), target_style);
        break;
      case TargetKind::kHalfspace: {
        std::vector<Vec> poly = detail::clip_polygon_halfplane(world, t.normal(), t.offset());
        detail::svg_polygon(out, m, poly, target_style);
        break;
      }
    }
  }

  const std::string ball_style =
      "fill=\"#cc3311\" fill-opacity=\"0.12\" stroke=\"#cc3311\" stroke-width=\"2\" "
      "class=\"ball\"";
  switch (scene.gauge.kind()) {
    case GaugeKind::kEuclideanBall:
      detail::svg_circle(out, m, center, radius, ball_style);
      break;
    case GaugeKind::kHPolytope: {
      std::vector<Vec> poly;
      for (const Vec& v : scene.gauge.polygon()) poly.push_back(center + radius * v);
      detail::svg_polygon(out, m, poly, ball_style);
      break;
    }
    case GaugeKind::kEllipsoid: {
      const Vec& ev = scene.gauge.ellipsoid_eigenvalues();
      const Mat& evec = scene.gauge.ellipsoid_eigenvectors();
      double rx = radius / std::sqrt(ev[0]);
      double ry = radius / std::sqrt(ev[1]);
      double ang = -std::atan2(evec(1, 0), evec(0, 0)) * 180.0 / 3.14159265358979323846;
      out += "<ellipse cx=\"" + m.x(center[0]) + "\" cy=\"" + m.y(center[1]) + "\" rx=\"" +
             m.len(rx) + "\" ry=\"" + m.len(ry) + "\" transform=\"rotate(" +
             detail::fmt_coord(ang) + " " + m.x(center[0]) + " " + m.y(center[1]) + ")\" " +
             ball_style + "/>\n";
      break;
    }
  }

  out += "<circle cx=\"" + m.x(center[0]) + "\" cy=\"" + m.y(center[1]) +
         "\" r=\"3.5\" fill=\"#cc3311\" class=\"center\"/>\n";
  out += "</svg>\n";
  return out;
}

inline std::string render_svg(const Scene& scene, const Solution& sol) {
  return render_svg(scene, sol.center, sol.radius);
}

// The built-in pathological scenes demonstrating non-unique solution sets,
// plus their well-posed counterparts; written out by the CLI.
inline std::vector<std::pair<std::string, Scene>> example_scenes() {
  std::vector<std::pair<std::string, Scene>> out;

  Scene circle_constraint;
  circle_constraint.dimension = 2;
  circle_constraint.problem = Problem::kSeb;
  circle_constraint.gauge = GaugeBody::euclidean_ball(2);
  circle_constraint.constraint = ConstraintSet::sphere(make_vec({0, 0}), 1.0);
  circle_constraint.targets.push_back(TargetSet::point_cloud({make_vec({0, 0})}));
  circle_constraint.name = "circle-constraint-singleton";
  out.emplace_back("circle_constraint", circle_constraint);

  Scene square_two_points;
  square_two_points.dimension = 2;
  square_two_points.problem = Problem::kSeb;
  square_two_points.gauge =
      GaugeBody::hpolytope(make_mat({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  square_two_points.constraint = ConstraintSet::whole_space(2);
  square_two_points.targets.push_back(TargetSet::point_cloud({make_vec({0, 1})}));
  square_two_points.targets.push_back(TargetSet::point_cloud({make_vec({0, -1})}));
  square_two_points.name = "square-gauge-two-points";
  out.emplace_back("square_two_points", square_two_points);

  Scene two_halfplanes;
  two_halfplanes.dimension = 2;
  two_halfplanes.problem = Problem::kSib;
  two_halfplanes.gauge = GaugeBody::euclidean_ball(2);
  two_halfplanes.constraint = ConstraintSet::whole_space(2);
  two_halfplanes.targets.push_back(TargetSet::halfspace(make_vec({0, -1}), -1.0));  // x2 >= 1
  two_halfplanes.targets.push_back(TargetSet::halfspace(make_vec({0, 1}), -1.0));   // x2 <= -1
  two_halfplanes.name = "two-parallel-halfplanes";
  out.emplace_back("two_halfplanes", two_halfplanes);

  Scene square_two_disks;
  square_two_disks.dimension = 2;
  square_two_disks.problem = Problem::kSib;
  square_two_disks.gauge =
      GaugeBody::hpolytope(make_mat({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  square_two_disks.constraint = ConstraintSet::whole_space(2);
  square_two_disks.targets.push_back(TargetSet::euclidean_ball(make_vec({0, 2}), 1.0));
  square_two_disks.targets.push_back(TargetSet::euclidean_ball(make_vec({0, -2}), 1.0));
  square_two_disks.name = "square-gauge-two-disks";
  out.emplace_back("square_two_disks", square_two_disks);

  return out;
}

}  // namespace minkball
