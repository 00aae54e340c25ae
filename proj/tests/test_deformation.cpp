#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lcone/deformation.hpp"

using namespace lcone;

namespace {

Vec vec4(double a, double b, double c, double d) {
  Vec v(4);
  v << a, b, c, d;
  return v;
}

}  // namespace

TEST_CASE("block deformation family defaults") {
  const auto fam = build_block_deform_family();
  REQUIRE(fam.family.base.num_generators() == 2);
  REQUIRE((fam.mu_a - vec4(4, 1, 0, -5)).norm() < 1e-12);

  // t = 0 reproduces the base generators exactly
  const auto g0 = fam.family.group_at(0.0);
  for (int i = 0; i < 2; ++i)
    REQUIRE((g0.generators[i] - fam.family.base.generators[i]).norm() == 0.0);

  // perturbed generator recorded loxodromic for t > 0; at t = 0 it keeps the
  // repeated unit eigenvalue of the block embedding
  REQUIRE(fam.loxodromy.size() == fam.family.schedule.size());
  for (const auto& [t, lox] : fam.loxodromy) REQUIRE(lox == (t > 0));

  // the fixed generator stays in the SL(3) block, the perturbed one leaves it
  const auto gt = fam.family.group_at(0.05);
  REQUIRE(gt.generators[0].col(3).head(3).norm() == 0.0);
  REQUIRE(gt.generators[1].col(3).head(3).norm() > 1e-6);
  REQUIRE(std::abs(gt.generators[1].determinant() - 1.0) < 1e-9);
}

TEST_CASE("block deformation parameter validation") {
  BlockDeformParams p;
  p.v2 = -1;
  p.v3 = -3;
  REQUIRE_THROWS_AS(build_block_deform_family(p), invalid_input_error);
  BlockDeformParams q;
  q.w1 = -1;
  REQUIRE_THROWS_AS(build_block_deform_family(q), invalid_input_error);
}

TEST_CASE("symmetric cube representation") {
  const double t = 0.8;
  Mat d(2, 2);
  d << std::exp(t), 0, 0, std::exp(-t);
  REQUIRE((cartan_projection(sym_cube(d)) - vec4(3 * t, t, -t, -3 * t)).norm() < 1e-10);

  // homomorphism on random SL(2) pairs, orthogonality preserved
  std::mt19937 rng(23);
  std::normal_distribution<double> gauss(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    Mat g(2, 2), h(2, 2);
    do {
      for (int i = 0; i < 4; ++i) g(i / 2, i % 2) = gauss(rng);
    } while (std::abs(g.determinant()) < 1e-2);
    g /= std::sqrt(std::abs(g.determinant())) * (g.determinant() < 0 ? -1 : 1);
    if (g.determinant() < 0) g.col(0) *= -1;
    do {
      for (int i = 0; i < 4; ++i) h(i / 2, i % 2) = gauss(rng);
    } while (std::abs(h.determinant()) < 1e-2);
    if (h.determinant() < 0) h.col(0) *= -1;
    h /= std::sqrt(h.determinant());
    REQUIRE((sym_cube(g * h) - sym_cube(g) * sym_cube(h)).norm() <
            1e-10 * sym_cube(g * h).norm());
    REQUIRE(sym_cube(g).determinant() == Catch::Approx(1.0).margin(1e-9));
  }
  const double a = 0.6;
  Mat r(2, 2);
  r << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  const Mat R = sym_cube(r);
  REQUIRE((R * R.transpose() - Mat::Identity(4, 4)).norm() < 1e-12);
}

TEST_CASE("sym3 schottky limit cone concentrates on the principal ray") {
  const auto group = build_sym3_schottky();
  const auto est = estimate_limit_cone(group, 10, 5.0);
  const Vec ray = vec4(3, 1, -1, -3).normalized();
  for (const Vec& d : est.cone.directions) REQUIRE(angular_distance(d, ray) < 0.1);

  const auto ball = enumerate_ball(group, 8);
  const auto cert = anosov_certificate(ball.records, ThetaSubset::full(4));
  REQUIRE(cert.min_slope > 0);
  for (const auto& rs : cert.roots) REQUIRE(rs.slope > 0);
}

TEST_CASE("continuity experiment rows at t = 0 are exactly zero") {
  RepresentationFamily fam{build_sym3_schottky(), 1, random_traceless_direction(4, 99),
                           {0.1, 0.0}, 99};
  ContinuityOptions opts;
  opts.r_min = 3.0;
  const auto rep = run_continuity_experiment(fam, {5, 6}, {}, opts);
  REQUIRE(rep.complete);
  REQUIRE(rep.rows.size() == 4);
  for (const auto& row : rep.rows) {
    if (row.t == 0.0) {
      REQUIRE(row.hausdorff == 0.0);
      REQUIRE(row.escape == 0.0);
      REQUIRE(row.loss == 0.0);
    } else {
      REQUIRE(row.hausdorff >= 0.0);
    }
  }

  // determinism: identical config gives identical reports
  const auto rep2 = run_continuity_experiment(fam, {5, 6}, {}, opts);
  REQUIRE(rep2.rows.size() == rep.rows.size());
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    REQUIRE(rep.rows[i].hausdorff == rep2.rows[i].hausdorff);
    REQUIRE(rep.rows[i].count_used == rep2.rows[i].count_used);
  }
}

TEST_CASE("sym3 deformation shrinks with t") {
  RepresentationFamily fam{build_sym3_schottky(), 1, random_traceless_direction(4, 7),
                           {0.1, 0.01}, 7};
  ContinuityOptions opts;
  opts.r_min = 3.0;
  const auto rep = run_continuity_experiment(fam, {7}, {}, opts);
  REQUIRE(rep.rows.size() == 2);
  REQUIRE(rep.rows[1].hausdorff <= rep.rows[0].hausdorff + 0.02);
  REQUIRE(rep.rows[1].hausdorff < 0.1);
}

TEST_CASE("growth continuity table") {
  RepresentationFamily fam{build_sym3_schottky(), 1, random_traceless_direction(4, 31),
                           {0.05, 0.0}, 31};
  const ThetaSubset theta = ThetaSubset::full(4);
  const std::vector<Vec> grid = {vec4(3, 1, -1, -3).normalized()};
  const auto cells = run_growth_continuity(fam, theta, grid, 8);
  REQUIRE(cells.size() == 2);

  // t = 0 column equals the direct estimator output
  const auto ball = enumerate_ball(fam.base, 8);
  const auto direct = estimate_growth_indicator(ball.records, theta, grid[0]);
  REQUIRE(cells[0].t == 0.0);
  REQUIRE(cells[0].estimate.psi_hat == direct.psi_hat);

  for (const auto& cell : cells) {
    if (!cell.estimate.reliable) continue;
    REQUIRE(cell.estimate.psi_hat <= two_rho(cell.direction) + 0.1);
  }
}

TEST_CASE("representation family rejects orientation flips") {
  // a perturbation so large the determinant renormalization would be complex
  RepresentationFamily fam{build_sym3_schottky(), 0, random_traceless_direction(4, 3),
                           {0.0}, 3};
  // group_at is still fine for moderate t
  REQUIRE_NOTHROW(fam.group_at(0.2));
}

TEST_CASE("is_loxodromic") {
  Mat d = Mat::Zero(4, 4);
  d.diagonal() << std::exp(3.0), std::exp(1.0), std::exp(-1.0), std::exp(-3.0);
  REQUIRE(is_loxodromic(d));
  Mat u = Mat::Identity(4, 4);
  u(0, 1) = 1.0;
  REQUIRE_FALSE(is_loxodromic(u));
}
