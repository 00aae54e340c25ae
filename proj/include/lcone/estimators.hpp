#ifndef LCONE_ESTIMATORS_HPP
#define LCONE_ESTIMATORS_HPP

// Finite-radius estimators for asymptotic invariants: limit cones, growth
// indicators, critical exponents and Anosov certificates. Every estimate
// carries its finite-scale parameters; nothing here claims convergence.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lcone/cartan.hpp"
#include "lcone/common.hpp"
#include "lcone/cone.hpp"
#include "lcone/enumerate.hpp"
#include "lcone/marked_group.hpp"

namespace lcone {

enum class ConeKind { cartan, jordan, theta };

struct LimitConeEstimate {
  SampledCone cone;
  int ball_radius = 0;
  double norm_cutoff = 0;
  long long count_used = 0;
};

/// Directions mu(gamma)/|mu(gamma)| (or lambda, or p_theta o mu) over the
/// word ball, keeping elements with projection norm >= r_min.
inline LimitConeEstimate estimate_limit_cone(const std::vector<GroupElementRecord>& ball,
                                             int ball_radius, double r_min,
                                             ConeKind kind = ConeKind::cartan,
                                             const std::optional<ThetaSubset>& theta = {},
                                             double dedup_angle = 1e-4) {
  if (r_min <= 0) throw invalid_input_error("estimate_limit_cone: r_min must be positive");
  std::vector<Vec> rays;
  long long used = 0;
  for (const auto& rec : ball) {
    Vec v;
    switch (kind) {
      case ConeKind::cartan:
        v = rec.mu;
        break;
      case ConeKind::jordan:
        if (!rec.lambda)
          throw invalid_input_error("estimate_limit_cone: jordan kind needs lambda records");
        v = *rec.lambda;
        break;
      case ConeKind::theta:
        if (!theta) throw invalid_input_error("estimate_limit_cone: theta kind needs theta");
        v = p_theta(*theta, rec.mu);
        break;
    }
    if (v.norm() < r_min) continue;
    rays.push_back(v);
    ++used;
  }
  if (rays.empty())
    throw invalid_input_error(
        "estimate_limit_cone: no element passed the norm cutoff; try a smaller r_min");
  LimitConeEstimate est;
  est.cone = SampledCone::from_rays(rays, dedup_angle);
  est.ball_radius = ball_radius;
  est.norm_cutoff = r_min;
  est.count_used = used;
  return est;
}

inline LimitConeEstimate estimate_limit_cone(const MarkedGroup& group, int N, double r_min,
                                             ConeKind kind = ConeKind::cartan,
                                             const std::optional<ThetaSubset>& theta = {},
                                             const BallOptions& opts_in = {}) {
  BallOptions opts = opts_in;
  if (kind == ConeKind::jordan) opts.with_lambda = true;
  const BallResult ball = enumerate_ball(group, N, opts);
  return estimate_limit_cone(ball.records, N, r_min, kind, theta);
}

// ---- rate fitting ---------------------------------------------------------

struct RateFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // rms residual of the fit
  double t0 = 0, t1 = 0;
  long long points = 0;
  bool reliable = false;
};

/// Least-squares slope of log(count) against T over the trailing half of the
/// observed range: values must be the sorted statistics (one per element).
inline RateFit fit_exponential_rate(std::vector<double> values, int min_points = 8,
                                    std::optional<std::pair<double, double>> window = {}) {
  RateFit fit;
  std::sort(values.begin(), values.end());
  if (values.empty()) return fit;
  const double vmax = values.back();
  double t0 = window ? window->first : vmax / 2;
  double t1 = window ? window->second : vmax;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long long m = 0;
  std::vector<std::pair<double, double>> pts;
  for (size_t j = 0; j < values.size(); ++j) {
    const double t = values[j];
    if (t < t0 || t > t1) continue;
    const double y = std::log(static_cast<double>(j + 1));  // count <= t
    pts.emplace_back(t, y);
    sx += t;
    sy += y;
    sxx += t * t;
    sxy += t * y;
    ++m;
  }
  fit.t0 = t0;
  fit.t1 = t1;
  fit.points = m;
  if (m < min_points) return fit;
  const double denom = m * sxx - sx * sx;
  if (std::abs(denom) < 1e-12) return fit;
  fit.slope = (m * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / m;
  double rss = 0;
  for (auto& [t, y] : pts) {
    const double e = y - (fit.intercept + fit.slope * t);
    rss += e * e;
  }
  fit.residual = std::sqrt(rss / m);
  fit.reliable = true;
  return fit;
}

// ---- growth indicator -----------------------------------------------------

struct GrowthIndicatorEstimate {
  Vec direction;                 // unit vector in a_theta+
  std::vector<double> epsilons;  // decreasing cone half-angles
  std::vector<RateFit> fits;     // one per epsilon
  double psi_hat = 0;            // slope at the smallest reliable epsilon
  double used_epsilon = 0;
  bool reliable = false;
};

/// psi_hat(v): exponential rate of counts in shrinking angular cones about v,
/// measured against |mu_theta|.
inline GrowthIndicatorEstimate estimate_growth_indicator(
    const std::vector<GroupElementRecord>& ball, const ThetaSubset& theta, const Vec& v,
    std::vector<double> eps_list = {0.3, 0.2, 0.1, 0.05}, int min_points = 8,
    std::optional<std::pair<double, double>> window = {}) {
  GrowthIndicatorEstimate est;
  est.direction = v / v.norm();
  std::sort(eps_list.begin(), eps_list.end(), std::greater<double>());
  est.epsilons = eps_list;
  for (double eps : eps_list) {
    std::vector<double> norms;
    for (const auto& rec : ball) {
      if (rec.length == 0) continue;
      Vec m = p_theta(theta, rec.mu);
      const double nm = m.norm();
      if (nm < 1e-9) continue;
      if (angular_distance(m, est.direction) <= eps) norms.push_back(nm);
    }
    est.fits.push_back(fit_exponential_rate(std::move(norms), min_points, window));
  }
  for (size_t i = est.fits.size(); i-- > 0;) {
    if (est.fits[i].reliable) {
      est.psi_hat = est.fits[i].slope;
      est.used_epsilon = est.epsilons[i];
      est.reliable = true;
      break;
    }
  }
  return est;
}

// ---- critical exponent ----------------------------------------------------

struct CriticalExponentEstimate {
  Vec form;
  RateFit fit;
  double delta_hat = 0;
  double poincare_below = 0;  // partial sum at s = delta_hat - 0.1
  double poincare_above = 0;  // partial sum at s = delta_hat + 0.1
  bool reliable = false;
};

/// delta_hat for phi: rate of #{gamma : phi(mu(gamma)) <= T}. Requires phi
/// positive on all sampled projections beyond a small exceptional set.
inline CriticalExponentEstimate estimate_critical_exponent(
    const std::vector<GroupElementRecord>& ball, const Vec& phi, int min_points = 8,
    std::optional<std::pair<double, double>> window = {}) {
  CriticalExponentEstimate est;
  est.form = phi;
  std::vector<double> values;
  long long nonpositive = 0;
  for (const auto& rec : ball) {
    if (rec.length == 0) continue;
    const double x = phi.dot(rec.mu);
    if (x <= 0) {
      ++nonpositive;
      continue;
    }
    values.push_back(x);
  }
  if (values.empty() || nonpositive > static_cast<long long>(ball.size()) / 100 + 8)
    throw invalid_input_error(
        "estimate_critical_exponent: form is non-positive on too many sampled projections");
  est.fit = fit_exponential_rate(values, min_points, window);
  est.delta_hat = std::max(0.0, est.fit.slope);
  est.reliable = est.fit.reliable;
  for (double x : values) {
    est.poincare_below += std::exp(-(est.delta_hat - 0.1) * x);
    est.poincare_above += std::exp(-(est.delta_hat + 0.1) * x);
  }
  return est;
}

// ---- Anosov certificate ---------------------------------------------------

struct AnosovRootSlope {
  int root = 0;
  double slope = 0;      // best c with alpha(mu(gamma)) >= c|gamma| - C
  double intercept = 0;  // the C actually used (= C_max)
};

struct AnosovCertificate {
  ThetaSubset theta;
  std::vector<AnosovRootSlope> roots;
  double min_slope = 0;
};

/// Lower-envelope certificate for the linear growth of root values: for each
/// alpha in theta, c = min over the ball of (alpha(mu(gamma)) + C_max)/|gamma|.
/// This is the exact uniform bound over the sampled ball, not a regression.
inline AnosovCertificate anosov_certificate(const std::vector<GroupElementRecord>& ball,
                                            const ThetaSubset& theta, double c_max = 1.0) {
  AnosovCertificate cert{theta, {}, 0};
  for (int i : theta.indices) {
    AnosovRootSlope rs;
    rs.root = i;
    rs.intercept = c_max;
    double c = std::numeric_limits<double>::infinity();
    for (const auto& rec : ball) {
      if (rec.length == 0) continue;
      c = std::min(c, (simple_root(i, rec.mu) + c_max) / rec.length);
    }
    rs.slope = std::isfinite(c) ? c : 0.0;
    cert.roots.push_back(rs);
  }
  cert.min_slope = std::numeric_limits<double>::infinity();
  for (const auto& rs : cert.roots) cert.min_slope = std::min(cert.min_slope, rs.slope);
  if (!std::isfinite(cert.min_slope)) cert.min_slope = 0;
  return cert;
}

}  // namespace lcone

#endif
