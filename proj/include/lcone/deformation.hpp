#ifndef LCONE_DEFORMATION_HPP
#define LCONE_DEFORMATION_HPP

// Parametrized families sigma_t of representations of a marked free group,
// and experiments measuring how estimated limit cones, growth indicators and
// sharpness respond to the deformation. Includes the SL(3)<SL(4) Schottky
// family whose limit cone jumps under generic perturbation, and a symmetric-
// cube Schottky family as a continuity witness.

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "lcone/cartan.hpp"
#include "lcone/common.hpp"
#include "lcone/cone.hpp"
#include "lcone/enumerate.hpp"
#include "lcone/estimators.hpp"
#include "lcone/marked_group.hpp"
#include "lcone/subgroups.hpp"

namespace lcone {

/// One generator is perturbed by left multiplication with exp(t X); t = 0
/// reproduces the base group exactly.
struct RepresentationFamily {
  MarkedGroup base;
  int perturbed_generator = 1;
  Mat X;  // fixed traceless direction, Frobenius norm 1
  std::vector<double> schedule;
  unsigned x_seed = 0;

  MarkedGroup group_at(double t) const {
    if (t == 0.0) return base;
    std::vector<Mat> gens = base.generators;
    Mat p = (t * X).exp() * gens[perturbed_generator];
    // renormalize the determinant drift from the matrix exponential
    const double det = p.determinant();
    if (det <= 0)
      throw invalid_input_error("RepresentationFamily: perturbation flipped orientation");
    p /= std::pow(det, 1.0 / base.n());
    gens[perturbed_generator] = p;
    return MarkedGroup(base.n(), gens, base.assume_free);
  }
};

/// Distinct eigenvalue moduli up to the gap tolerance.
inline bool is_loxodromic(const Mat& g, double gap_tol = 1e-6) {
  Vec lam = jordan_projection(g);
  for (int i = 0; i + 1 < lam.size(); ++i)
    if (lam[i] - lam[i + 1] < gap_tol) return false;
  return true;
}

inline Mat random_traceless_direction(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = gauss(rng);
  x -= (x.trace() / n) * Mat::Identity(n, n);
  x /= x.norm();
  return x;
}

// ---- the SL(3) < SL(4) family ---------------------------------------------

struct BlockDeformParams {
  double v1 = 4, v2 = 1, v3 = -5;  // a = diag(e^v1, e^v2, e^v3, 1), v1>v2>0>v3
  double w1 = 3;                   // b conjugate of diag(e^w1, 1, e^-w1, 1)
  std::vector<double> conjugator_angles = {0.7, 0.4, 0.3};  // SL(3)-block rotation
  std::vector<double> epsilons = {0.1, 0.05, 0.02, 0.01, 0.0};  // the t schedule
  unsigned x_seed = 20240815;
};

struct BlockDeformFamily {
  RepresentationFamily family;
  Vec mu_a;                             // Cartan projection of the fixed generator
  std::vector<std::pair<double, bool>> loxodromy;  // per scheduled t
};

inline Mat sl3_block_rotation(const std::vector<double>& angles) {
  Mat g = Mat::Identity(4, 4);
  const int planes[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int k = 0; k < 3 && k < static_cast<int>(angles.size()); ++k) {
    Mat r = Mat::Identity(4, 4);
    const double c = std::cos(angles[k]), s = std::sin(angles[k]);
    r(planes[k][0], planes[k][0]) = c;
    r(planes[k][1], planes[k][1]) = c;
    r(planes[k][0], planes[k][1]) = -s;
    r(planes[k][1], planes[k][0]) = s;
    g = g * r;
  }
  return g;
}

/// Two-generator Schottky subgroup of the SL(3) block of SL(4), with one
/// generator perturbed out of the block by exp(t X) for a fixed generic X.
inline BlockDeformFamily build_block_deform_family(const BlockDeformParams& p = {}) {
  if (!(p.v1 > p.v2 && p.v2 > 0 && 0 > p.v3) || std::abs(p.v1 + p.v2 + p.v3) > 1e-12)
    throw invalid_input_error("build_block_deform_family: need v1 > v2 > 0 > v3 with zero sum");
  if (!(p.w1 > 0)) throw invalid_input_error("build_block_deform_family: need w1 > 0");
  for (double e : p.epsilons)
    if (e < 0) throw invalid_input_error("build_block_deform_family: negative epsilon");

  Mat a = Mat::Zero(4, 4);
  a.diagonal() << std::exp(p.v1), std::exp(p.v2), std::exp(p.v3), 1.0;
  Mat d = Mat::Zero(4, 4);
  d.diagonal() << std::exp(p.w1), 1.0, std::exp(-p.w1), 1.0;
  const Mat g = sl3_block_rotation(p.conjugator_angles);
  const Mat b = g * d * g.inverse();

  BlockDeformFamily fam{{MarkedGroup(4, {a, b}), 1, random_traceless_direction(4, p.x_seed),
                      p.epsilons, p.x_seed},
                     cartan_projection(a),
                     {}};
  for (double t : p.epsilons) {
    const MarkedGroup gt = fam.family.group_at(t);
    fam.loxodromy.emplace_back(t, is_loxodromic(gt.generators[1]));
  }
  return fam;
}

// ---- symmetric-cube Schottky ----------------------------------------------

/// Irreducible 4-dimensional representation of SL(2,R): action on binary
/// cubics in the orthogonality-preserving basis (x^3, sqrt3 x^2 y, sqrt3 x y^2, y^3),
/// so diag(e^t, e^-t) maps to diag(e^3t, e^t, e^-t, e^-3t).
inline Mat sym_cube(const Mat& g2) {
  const double a = g2(0, 0), b = g2(0, 1), c = g2(1, 0), d = g2(1, 1);
  const double s3 = std::sqrt(3.0);
  Mat m(4, 4);
  m << a * a * a, s3 * a * a * b, s3 * a * b * b, b * b * b,
      s3 * a * a * c, a * a * d + 2 * a * b * c, 2 * a * b * d + b * b * c, s3 * b * b * d,
      s3 * a * c * c, 2 * a * c * d + b * c * c, a * d * d + 2 * b * c * d, s3 * b * d * d,
      c * c * c, s3 * c * c * d, s3 * c * d * d, d * d * d;
  return m;
}

/// Schottky subgroup of SL(4,R): symmetric cubes of two SL(2,R) hyperbolic
/// elements with crossed axes. translation lengths are the SL(2) Cartan
/// parameters (axis translation = 2t), separation is the axis angle.
inline MarkedGroup build_sym3_schottky(double t1 = 1.5, double t2 = 1.8,
                                       double separation = M_PI / 4) {
  Mat a2(2, 2), r(2, 2);
  a2 << std::exp(t1), 0, 0, std::exp(-t1);
  r << std::cos(separation / 2), -std::sin(separation / 2), std::sin(separation / 2),
      std::cos(separation / 2);
  Mat b2 = r * (Mat(2, 2) << std::exp(t2), 0, 0, std::exp(-t2)).finished() * r.inverse();
  return MarkedGroup(4, {sym_cube(a2), sym_cube(b2)});
}

// ---- continuity experiments -----------------------------------------------

struct ContinuityOptions {
  double r_min = 5.0;
  double ref_margin = 0.08;      // eta: half-angle of the folded-plane neighborhood
  double v0_cutoff = 0.25;       // minimum angle from V0 for an escape witness u
  double hull_tol = 1e-6;        // angular tolerance of hull membership
  std::optional<Vec> anchor;     // mu(a)-direction for the midpoint witness
  BallOptions ball;
};

struct ContinuityRow {
  double t = 0;
  int N = 0;
  long long count_used = 0;
  double hausdorff = 0;
  double escape = 0;  // directed from sigma_t estimate into the t=0 estimate
  double loss = 0;    // directed from the t=0 estimate into sigma_t
  bool inside_reference = false;
  bool hull_escape = false;
  std::optional<Vec> witness_u, witness_w;
};

struct ContinuityReport {
  std::vector<ContinuityRow> rows;
  bool complete = true;
};

/// Distance of a unit direction to the folded-plane neighborhood pieces.
inline double folded_plane_distance(const FoldedSubgroupCone& ref, const Vec& d) {
  double a = M_PI;
  for (const auto& s : ref.sector_pieces) a = std::min(a, s.angular_distance_to(d));
  return a;
}

/// Per (t, N): estimated cone, Hausdorff distances to the t = 0 estimate, and
/// the folded-plane escape diagnostics when a reference is supplied.
inline ContinuityReport run_continuity_experiment(
    const RepresentationFamily& family, const std::vector<int>& n_ladder,
    const std::optional<FoldedSubgroupCone>& reference, const ContinuityOptions& opts = {}) {
  ContinuityReport report;
  // t = 0 baselines per ladder radius
  std::vector<LimitConeEstimate> base;
  for (int N : n_ladder)
    base.push_back(estimate_limit_cone(family.base, N, opts.r_min, ConeKind::cartan, {}, opts.ball));

  std::vector<double> ts = family.schedule;
  for (double t : ts) {
    for (size_t k = 0; k < n_ladder.size(); ++k) {
      ContinuityRow row;
      row.t = t;
      row.N = n_ladder[k];
      LimitConeEstimate est;
      try {
        est = (t == 0.0) ? base[k]
                         : estimate_limit_cone(family.group_at(t), n_ladder[k], opts.r_min,
                                               ConeKind::cartan, {}, opts.ball);
      } catch (const budget_exceeded_error&) {
        report.complete = false;
        return report;
      }
      row.count_used = est.count_used;
      row.escape = directed_hausdorff(est.cone, base[k].cone);
      row.loss = directed_hausdorff(base[k].cone, est.cone);
      row.hausdorff = std::max(row.escape, row.loss);

      if (reference) {
        row.inside_reference = true;
        for (const Vec& d : est.cone.directions)
          if (folded_plane_distance(*reference, d) > opts.ref_margin) row.inside_reference = false;

        // escape witness: deepest sampled direction in the V2 piece away from V0
        if (opts.anchor && reference->fold_ray && reference->sector_pieces.size() == 2) {
          const Vec v0 = *reference->fold_ray;
          double best_depth = opts.v0_cutoff;
          std::optional<Vec> u;
          for (const Vec& d : est.cone.directions) {
            if (reference->sector_pieces[1].angular_distance_to(d) > opts.ref_margin) continue;
            const double depth = angular_distance(d, v0);
            if (depth > best_depth) {
              best_depth = depth;
              u = d;
            }
          }
          if (u) {
            Vec w = (*u + opts.anchor->normalized()).normalized();
            row.witness_u = u;
            row.witness_w = w;
            row.hull_escape = folded_plane_distance(*reference, w) > opts.ref_margin &&
                              in_conical_hull(est.cone.directions, w, opts.hull_tol);
          }
        }
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

struct GrowthContinuityCell {
  double t = 0;
  Vec direction;
  GrowthIndicatorEstimate estimate;
};

/// Growth indicator per (t, v) with fit windows shared from the t = 0 column
/// so the deltas are comparable.
inline std::vector<GrowthContinuityCell> run_growth_continuity(
    const RepresentationFamily& family, const ThetaSubset& theta, const std::vector<Vec>& v_grid,
    int N, const std::vector<double>& eps_list = {0.3, 0.2, 0.1, 0.05},
    const BallOptions& ball_opts = {}) {
  std::vector<GrowthContinuityCell> cells;
  const BallResult base_ball = enumerate_ball(family.base, N, ball_opts);
  std::vector<std::pair<double, double>> windows;
  for (const Vec& v : v_grid) {
    GrowthContinuityCell cell{0.0, v / v.norm(),
                              estimate_growth_indicator(base_ball.records, theta, v, eps_list)};
    const auto& fits = cell.estimate.fits;
    double t0 = 0, t1 = 0;
    for (const auto& f : fits)
      if (f.reliable) {
        t0 = f.t0;
        t1 = f.t1;
      }
    windows.emplace_back(t0, t1);
    cells.push_back(std::move(cell));
  }
  for (double t : family.schedule) {
    if (t == 0.0) continue;
    const BallResult ball = enumerate_ball(family.group_at(t), N, ball_opts);
    for (size_t i = 0; i < v_grid.size(); ++i) {
      std::optional<std::pair<double, double>> win;
      if (windows[i].second > windows[i].first) win = windows[i];
      cells.push_back({t, v_grid[i] / v_grid[i].norm(),
                       estimate_growth_indicator(ball.records, theta, v_grid[i], eps_list, 8, win)});
    }
  }
  return cells;
}

}  // namespace lcone

#endif
