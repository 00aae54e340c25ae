#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lcone/cartan.hpp"
#include "lcone/scaled_matrix.hpp"

using namespace lcone;

namespace {

Vec v4(double a, double b, double c, double d) {
  Vec v(4);
  v << a, b, c, d;
  return v;
}

/// Random SL(n,R) matrix: N(0,1) entries, orientation fixed, det scaled to 1.
Mat random_sl(int n, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    Mat g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
    double det = g.determinant();
    if (std::abs(det) < 1e-3) continue;
    if (det < 0) {
      g.row(0) *= -1;
      det = -det;
    }
    return g / std::pow(det, 1.0 / n);
  }
}

/// Diagonalizable matrix with distinct eigenvalue moduli and near-orthogonal
/// eigenbasis, so that mu(g^m)/m approaches lambda(g) quickly.
Mat random_loxodromic(int n, std::mt19937& rng, double skew = 0.02) {
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    Vec logs(n);
    for (int i = 0; i < n; ++i) logs[i] = unif(rng);
    logs = recenter_zero_sum(logs);
    std::sort(logs.data(), logs.data() + n, std::greater<double>());
    bool distinct = true;
    for (int i = 0; i + 1 < n; ++i)
      if (logs[i] - logs[i + 1] < 0.2) distinct = false;
    if (!distinct) continue;
    Mat p = Mat::Identity(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p(i, j) += skew * gauss(rng);
    Mat g = p * logs.array().exp().matrix().asDiagonal() * p.inverse();
    return g / std::pow(g.determinant(), 1.0 / n);
  }
}

}  // namespace

TEST_CASE("cartan projection of diagonal and orthogonal matrices") {
  Mat d = Mat::Zero(4, 4);
  d.diagonal() << std::exp(3.0), std::exp(1.0), std::exp(-4.0), 1.0;
  REQUIRE((cartan_projection(d) - v4(3, 1, 0, -4)).norm() < 1e-12);

  Mat rot(2, 2);
  rot << 0, 1, -1, 0;
  REQUIRE(cartan_projection(rot).norm() < 1e-12);
}

TEST_CASE("cartan projection of [[2,1],[1,1]] against the quadratic oracle") {
  // symmetric with characteristic polynomial t^2 - 3t + 1; the log of the
  // larger root is the top coordinate
  const double root = (3.0 + std::sqrt(5.0)) / 2.0;
  const double expected = std::log(root);
  REQUIRE(expected == Catch::Approx(0.9624236501).epsilon(1e-9));
  Mat g(2, 2);
  g << 2, 1, 1, 1;
  Vec mu = cartan_projection(g);
  REQUIRE(mu[0] == Catch::Approx(expected).margin(1e-12));
  REQUIRE(mu[1] == Catch::Approx(-expected).margin(1e-12));
  // symmetric matrix: jordan projection coincides
  REQUIRE((jordan_projection(g) - mu).norm() < 1e-12);
}

TEST_CASE("cartan projection input validation") {
  Mat z = Mat::Zero(3, 3);
  REQUIRE_THROWS_AS(cartan_projection(z), invalid_input_error);
  Mat nf = Mat::Identity(2, 2);
  nf(0, 1) = std::numeric_limits<double>::quiet_NaN();
  REQUIRE_THROWS_AS(cartan_projection(nf), invalid_input_error);
  REQUIRE_THROWS_AS(cartan_projection(2.0 * Mat::Identity(2, 2)), invalid_input_error);
}

TEST_CASE("jordan projection basics") {
  Mat u(2, 2);
  u << 1, 1, 0, 1;
  REQUIRE(jordan_projection(u).norm() < 1e-12);

  Mat d = Mat::Zero(4, 4);
  d.diagonal() << std::exp(3.0), std::exp(1.0), std::exp(-4.0), 1.0;
  REQUIRE((jordan_projection(d) - v4(3, 1, 0, -4)).norm() < 1e-12);

  // rotation block: complex pair contributes equal coordinates
  Mat r = Mat::Zero(4, 4);
  r(0, 0) = std::exp(2.0);
  r(3, 3) = std::exp(-2.0);
  r(1, 1) = std::cos(1.0);
  r(1, 2) = -std::sin(1.0);
  r(2, 1) = std::sin(1.0);
  r(2, 2) = std::cos(1.0);
  REQUIRE((jordan_projection(r) - v4(2, 0, 0, -2)).norm() < 1e-10);
}

TEST_CASE("opposition involution") {
  REQUIRE((opposition_involution(v4(3, 1, 0, -4)) - v4(4, 0, -1, -3)).norm() < 1e-15);
  Vec v2(2);
  v2 << 1.7, -1.7;
  REQUIRE((opposition_involution(v2) - v2).norm() < 1e-15);

  std::mt19937 rng(1);
  std::normal_distribution<double> gauss(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    Vec v(5);
    for (int i = 0; i < 5; ++i) v[i] = gauss(rng);
    v = recenter_zero_sum(v);
    REQUIRE((opposition_involution(opposition_involution(v)) - v).norm() < 1e-15);
  }
}

TEST_CASE("p_theta block averaging") {
  ThetaSubset theta(4, {1, 3});
  REQUIRE((p_theta(theta, v4(3, 1, 0, -4)) - v4(3, 0.5, 0.5, -4)).norm() < 1e-15);
  REQUIRE((p_theta(ThetaSubset::full(4), v4(3, 1, 0, -4)) - v4(3, 1, 0, -4)).norm() < 1e-15);

  std::mt19937 rng(2);
  std::normal_distribution<double> gauss(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    Vec v(4);
    for (int i = 0; i < 4; ++i) v[i] = gauss(rng);
    v = recenter_zero_sum(v);
    const Vec p = p_theta(theta, v);
    REQUIRE((p_theta(theta, p) - p).norm() < 1e-13);  // idempotent
    REQUIRE(p.norm() <= v.norm() + 1e-13);            // orthogonal projection
    // invariance under reflections in Pi - theta (here alpha_2)
    const Vec w = weyl_action(WeylElement::simple_reflection(4, 2), v);
    REQUIRE((p_theta(theta, w) - p).norm() < 1e-13);
    // result lies in a_theta: alpha_2 vanishes
    REQUIRE(std::abs(simple_root(2, p)) < 1e-13);
  }
}

TEST_CASE("roots, 2rho and fundamental weights") {
  const Vec v = v4(3, 1, 0, -4);
  REQUIRE(simple_root(2, v) == Catch::Approx(1.0));
  REQUIRE(two_rho(v) == Catch::Approx(22.0));
  REQUIRE(fundamental_weight(2, v) == Catch::Approx(4.0));
  REQUIRE_THROWS_AS(simple_root(4, v), invalid_input_error);
  REQUIRE_THROWS_AS(fundamental_weight(0, v), invalid_input_error);
}

TEST_CASE("fold to chamber") {
  auto [folded, w] = fold_to_chamber(v4(1, -3, 2, 0));
  REQUIRE((folded - v4(2, 1, 0, -3)).norm() < 1e-15);
  REQUIRE((weyl_action(w, v4(1, -3, 2, 0)) - folded).norm() < 1e-15);

  auto [same, id] = fold_to_chamber(v4(3, 1, 0, -4));
  REQUIRE((same - v4(3, 1, 0, -4)).norm() < 1e-15);
  REQUIRE(id == WeylElement::identity(4));

  std::mt19937 rng(3);
  std::normal_distribution<double> gauss(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    Vec v(4);
    for (int i = 0; i < 4; ++i) v[i] = gauss(rng);
    v = recenter_zero_sum(v);
    for (const auto& w2 : weyl_subgroup(4, {1, 2, 3})) {
      const Vec moved = weyl_action(w2, v);
      REQUIRE(moved.norm() == Catch::Approx(v.norm()));  // permutations are orthogonal
      REQUIRE((fold_to_chamber(moved).first - fold_to_chamber(v).first).norm() < 1e-13);
    }
  }
}

TEST_CASE("mu(g^-1) = i(mu(g)) over random SL(4) matrices") {
  std::mt19937 rng(20260823);
  for (int trial = 0; trial < 1000; ++trial) {
    const Mat g = random_sl(4, rng);
    const Vec lhs = cartan_projection(g.inverse(), 1e-6);
    const Vec rhs = opposition_involution(cartan_projection(g, 1e-6));
    REQUIRE((lhs - rhs).norm() < 1e-9);
  }
}

TEST_CASE("lambda(g^n) = n lambda(g)") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Mat g = random_sl(3, rng);
    // near-defective matrices make the eigenvalue moduli ill-conditioned, and
    // the smallest eigenvalue of g^10 carries an absolute error on the order of
    // eps * ||g^10||; keep the eigenbasis condition and the log spread moderate
    {
      Eigen::EigenSolver<Mat> es(g);
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(es.eigenvectors());
      if (svd.singularValues()[0] / svd.singularValues()[2] > 50) {
        --trial;
        continue;
      }
    }
    const Vec lam = jordan_projection(g);
    if (lam[0] - lam[2] > 1.5) {
      --trial;
      continue;
    }
    Mat p = Mat::Identity(3, 3);
    for (int n = 1; n <= 10; ++n) {
      p = p * g;
      REQUIRE((jordan_projection(p / std::pow(p.determinant(), 1.0 / 3)) - n * lam).norm() < 1e-8);
    }
  }
}

TEST_CASE("mu(g^(2^k))/2^k approaches lambda(g)") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat g = random_loxodromic(4, rng);
    const Vec lam = jordan_projection(g);
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 8; ++k) {
      const double err = (cartan_of_pow2(g, k) / std::exp2(k) - lam).norm();
      REQUIRE(err <= prev + 1e-6);  // non-increasing up to slack
      prev = err;
    }
    REQUIRE(prev <= 1e-4);
  }
}
