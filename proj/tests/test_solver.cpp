#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "minkball/solver.hpp"
#include "support/scene_gen.hpp"

using namespace minkball;
using detail::Rng;

TEST_CASE("two singleton targets meet at the midpoint") {
  Scene scene;
  scene.dimension = 2;
  scene.problem = Problem::kSeb;
  scene.gauge = GaugeBody::euclidean_ball(2);
  scene.constraint = ConstraintSet::whole_space(2);
  scene.targets.push_back(TargetSet::point_cloud({make_vec({-1, 0})}));
  scene.targets.push_back(TargetSet::point_cloud({make_vec({1, 0})}));
  Solution sol = solve(scene);
  CHECK(sol.radius == Catch::Approx(1.0).margin(1e-7));
  CHECK(sol.center.norm() <= 1e-5);
  CHECK(sol.certificate.pass());
  CHECK(sol.converged);
  CHECK(sol.active_indices.size() == 2);
}

TEST_CASE("two parallel halfplanes: any point of the mid axis solves") {
  Scene scene = testgen::named_scene("two_halfplanes");
  Solution sol = solve(scene);
  CHECK(sol.radius == Catch::Approx(1.0).margin(1e-6));
  CHECK(std::abs(sol.center[1]) <= 1e-4);
  CHECK(sol.certificate.pass());
}

TEST_CASE("singleton target with a circle constraint") {
  Scene scene = testgen::named_scene("circle_constraint");
  Solution sol = solve(scene);
  CHECK(sol.radius == Catch::Approx(1.0).margin(1e-6));
  CHECK(sol.center.norm() == Catch::Approx(1.0).margin(1e-6));
  CHECK(sol.certificate.pass());
}

TEST_CASE("certificates pass at the optimum and fail below it") {
  Scene scene = testgen::named_scene("square_two_points");
  CertificateReport ok = certify(scene, make_vec({0, 0}), 1.0, 1e-6);
  CHECK(ok.pass());
  CHECK(ok.worst_violation <= 1e-12);

  CertificateReport bad = certify(scene, make_vec({0, 0}), 0.9, 1e-6);
  CHECK_FALSE(bad.pass());
  CHECK(bad.worst_violation == Catch::Approx(0.1));

  Scene vacuous;
  vacuous.dimension = 2;
  vacuous.problem = Problem::kSeb;
  vacuous.gauge = GaugeBody::euclidean_ball(2);
  vacuous.constraint = ConstraintSet::whole_space(2);
  CertificateReport empty = certify(vacuous, make_vec({0, 0}), 0.0, 1e-6);
  CHECK(empty.pass());
  CHECK(empty.worst_violation == 0.0);
}

TEST_CASE("uniqueness probe separates flat and sharp optima") {
  UniquenessReport flat = uniqueness_probe(testgen::named_scene("square_two_points"));
  CHECK(flat.classification == UniquenessClass::kNonUnique);
  CHECK(flat.diameter >= 1.0);

  UniquenessReport disks = uniqueness_probe(testgen::named_scene("square_two_disks"));
  CHECK(disks.classification == UniquenessClass::kNonUnique);

  Rng rng(31);
  Scene cloud;
  cloud.dimension = 2;
  cloud.problem = Problem::kSeb;
  cloud.gauge = GaugeBody::euclidean_ball(2);
  cloud.constraint = ConstraintSet::whole_space(2);
  std::vector<Vec> pts;
  for (int i = 0; i < 10; ++i) pts.push_back(testgen::random_point(rng, 2, -3.0, 3.0));
  cloud.targets.push_back(TargetSet::point_cloud(pts));
  UniquenessReport sharp = uniqueness_probe(cloud);
  CHECK(sharp.classification == UniquenessClass::kUnique);
  CHECK(sharp.diameter <= 1e-4 * scene_diameter(cloud));
}

TEST_CASE("degeneracy detection") {
  Scene overlap;
  overlap.dimension = 2;
  overlap.problem = Problem::kSib;
  overlap.gauge = GaugeBody::euclidean_ball(2);
  overlap.constraint = ConstraintSet::whole_space(2);
  overlap.targets.push_back(TargetSet::euclidean_ball(make_vec({0, 0}), 1.5));
  overlap.targets.push_back(TargetSet::euclidean_ball(make_vec({1, 0}), 1.5));
  CHECK(check_degeneracy(overlap));

  CHECK_FALSE(check_degeneracy(testgen::named_scene("two_halfplanes")));
  CHECK_FALSE(check_degeneracy(testgen::named_scene("square_two_disks")));
  CHECK_THROWS_AS(check_degeneracy(testgen::named_scene("square_two_points")),
                  std::invalid_argument);
}

TEST_CASE("per-start best values are monotone and iterates stay feasible") {
  Rng rng(32);
  SolverConfig cfg;
  cfg.record_history = true;
  cfg.starts = 6;
  for (int i = 0; i < 6; ++i) {
    Scene scene = i % 2 == 0 ? testgen::random_seb_scene_2d(rng)
                             : testgen::random_disjoint_sib_scene(rng, 2);
    Solution sol = solve(scene, cfg);
    for (const StartResult& sr : sol.per_start) {
      CHECK(sr.max_infeasibility <= 1e-8);
      for (std::size_t k = 1; k < sr.best_history.size(); ++k) {
        CHECK(sr.best_history[k] <= sr.best_history[k - 1] + 1e-15);
      }
    }
    CHECK(scene.constraint.violation(sol.center) <= 1e-8);
    CHECK(certify(scene, sol, 1e-6).pass());
    for (const StartResult& sr : sol.per_start) {
      CHECK(sol.radius <= sr.value + cfg.tol_obj * (1.0 + sol.radius));
    }
  }
}

TEST_CASE("sphere-constrained iterates stay on the sphere") {
  SolverConfig cfg;
  cfg.starts = 8;
  Scene scene = testgen::named_scene("circle_constraint");
  Solution sol = solve(scene, cfg);
  for (const StartResult& sr : sol.per_start) CHECK(sr.max_infeasibility <= 1e-8);
  UniquenessReport rep = uniqueness_probe(scene);
  CHECK(rep.classification == UniquenessClass::kNonUnique);
  CHECK(rep.diameter >= 1.0);
}

TEST_CASE("coordinate scaling scales the solution") {
  Rng rng(33);
  for (int i = 0; i < 4; ++i) {
    Scene scene = i % 2 == 0 ? testgen::random_seb_scene_2d(rng)
                             : testgen::random_disjoint_sib_scene(rng, 2);
    if (scene.gauge.kind() == GaugeKind::kEllipsoid) continue;
    double lambda = rng.uniform(0.5, 15.0);
    Scene scaled = testgen::scale_scene(scene, lambda);
    Solution base = solve(scene);
    Solution big = solve(scaled);
    double diam = scene_diameter(scene);
    CHECK(std::abs(big.radius - lambda * base.radius) <=
          1e-6 * (1.0 + lambda * base.radius));
    CHECK((big.center - lambda * base.center).norm() <= 1e-6 * lambda * diam);
  }
}

TEST_CASE("solver configuration validation") {
  SolverConfig cfg;
  cfg.starts = 0;
  CHECK_THROWS_AS(solve(testgen::named_scene("two_halfplanes"), cfg), std::invalid_argument);
  SolverConfig bad_tol;
  bad_tol.tol_obj = 0.0;
  CHECK_THROWS_AS(solve(testgen::named_scene("two_halfplanes"), bad_tol),
                  std::invalid_argument);
}

TEST_CASE("diminishing step rule also reaches the optimum") {
  Scene scene;
  scene.dimension = 2;
  scene.problem = Problem::kSeb;
  scene.gauge = GaugeBody::euclidean_ball(2);
  scene.constraint = ConstraintSet::whole_space(2);
  scene.targets.push_back(TargetSet::point_cloud({make_vec({-1, 0})}));
  scene.targets.push_back(TargetSet::point_cloud({make_vec({1, 0})}));
  SolverConfig cfg;
  cfg.step_rule = StepRule::kDiminishing;
  cfg.max_iters = 20000;
  Solution sol = solve(scene, cfg);
  CHECK(sol.radius == Catch::Approx(1.0).margin(1e-3));
  CHECK(sol.certificate.pass());
}
