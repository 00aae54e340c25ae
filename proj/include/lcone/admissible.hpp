#ifndef LCONE_ADMISSIBLE_HPP
#define LCONE_ADMISSIBLE_HPP

// Constructive admissible cones: given a sampled cone D and a root subset
// theta with i(theta) = theta, build a closed half-space cone
//   C = D_eps  n  a+  n  H  n  i(H)
// where D_eps is the cone over the eps-neighborhood of D on the unit sphere
// (polyhedrally approximated from samples) and H intersects the half-spaces
// of separating forms h_alpha, one per root, each found by a maximum-margin
// LP: h_alpha <= -eps on the wall ker(alpha) n a+ and h_alpha >= eps on the
// Weyl orbit of D and its eps-neighborhood.

#include <random>
#include <string>
#include <vector>

#include "lcone/cartan.hpp"
#include "lcone/common.hpp"
#include "lcone/cone.hpp"
#include "lcone/lp.hpp"

namespace lcone {

struct AdmissibleOptions {
  int neighborhood_samples = 8;  // sphere samples per direction at angle eps
  int wall_samples = 24;         // random rays sampled inside each wall
  unsigned seed = 12345;
  double verify_tol = 1e-8;
};

namespace detail {

/// Extreme rays of the chamber a+: partial-sum indicators recentered.
inline std::vector<Vec> chamber_extreme_rays(int n) {
  std::vector<Vec> rays;
  for (int k = 1; k <= n - 1; ++k) {
    Vec u = Vec::Zero(n);
    u.head(k).setOnes();
    rays.push_back(recenter_zero_sum(u).normalized());
  }
  return rays;
}

/// Sample rays of ker(alpha_i) n a+, spanned by the chamber extreme rays
/// other than the i-th.
inline std::vector<Vec> wall_sample_rays(int n, int root_index, int count, std::mt19937& rng) {
  std::vector<Vec> gens;
  for (int k = 1; k <= n - 1; ++k) {
    if (k == root_index) continue;
    Vec u = Vec::Zero(n);
    u.head(k).setOnes();
    gens.push_back(recenter_zero_sum(u).normalized());
  }
  std::vector<Vec> rays = gens;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int s = 0; s < count; ++s) {
    Vec v = Vec::Zero(n);
    for (const Vec& g : gens) v += unif(rng) * g;
    if (v.norm() > 1e-9) rays.push_back(v.normalized());
  }
  return rays;
}

/// Points on the unit sphere of a at angular distance eps from d.
inline std::vector<Vec> sphere_neighborhood(const Vec& d, double eps, int count,
                                            std::mt19937& rng) {
  const int n = static_cast<int>(d.size());
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Vec ones = Vec::Ones(n) / std::sqrt(double(n));
  std::vector<Vec> pts;
  for (int s = 0; s < count; ++s) {
    Vec t(n);
    for (int i = 0; i < n; ++i) t[i] = gauss(rng);
    t -= t.dot(ones) * ones;  // stay in the zero-sum hyperplane
    t -= t.dot(d) * d;        // tangent at d
    if (t.norm() < 1e-9) {
      --s;
      continue;
    }
    t.normalize();
    pts.push_back(std::cos(eps) * d + std::sin(eps) * t);
  }
  return pts;
}

inline Vec form_compose_weyl(const Vec& h, const WeylElement& w) {
  // (h o w)(v) = h(w.v) = sum_i h_i v_{perm[i]}
  Vec r = Vec::Zero(h.size());
  for (int i = 0; i < h.size(); ++i) r[w.perm[i]] += h[i];
  return r;
}

inline Vec form_compose_involution(const Vec& h) {
  // (h o i)(v) = sum_j h_j * (-v_{n-1-j})
  const int n = static_cast<int>(h.size());
  Vec r(n);
  for (int j = 0; j < n; ++j) r[n - 1 - j] = -h[j];
  return r;
}

}  // namespace detail

struct AdmissibleVerification {
  bool interior_ok = false;     // every D direction strictly inside all forms
  bool involution_ok = false;   // membership invariant under i on random vectors
  bool orbit_convex_ok = false; // W-orbit pairwise-midpoint convexity
  bool walls_ok = false;        // exact LP wall margin positive for alpha in theta
  bool all() const { return interior_ok && involution_ok && orbit_convex_ok && walls_ok; }
};

/// Post-hoc admissibility check of a constructed cone against the defining
/// sampled cone D and root set theta (assumed i-symmetric).
inline AdmissibleVerification verify_admissible(const HalfSpaceCone& cone,
                                                const SampledCone& D,
                                                const ThetaSubset& theta, double eps,
                                                const AdmissibleOptions& opts = {}) {
  AdmissibleVerification v;
  const int n = theta.n;
  const auto& forms = cone.pieces.at(0);

  v.interior_ok = true;
  for (const Vec& d : D.directions)
    for (const Vec& h : forms)
      if (h.dot(d) / h.norm() <= eps / 2 * 0.9) v.interior_ok = false;

  std::mt19937 rng(opts.seed ^ 0x9e3779b9u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  v.involution_ok = true;
  for (int s = 0; s < 1000; ++s) {
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = gauss(rng);
    x = recenter_zero_sum(x);
    if (membership(cone, x, opts.verify_tol) !=
        membership(cone, opposition_involution(x), opts.verify_tol))
      v.involution_ok = false;
  }

  // orbit convexity: midpoints of orbit samples must stay in the orbit of C
  const auto group = weyl_theta(theta);
  auto orbit_member = [&](const Vec& x) {
    for (const auto& w : group)
      if (membership(cone, weyl_action(w, x), 1e-7)) return true;
    return false;
  };
  std::vector<Vec> orbit_samples;
  for (const auto& w : group)
    for (const Vec& d : D.directions) orbit_samples.push_back(weyl_action(w, d));
  v.orbit_convex_ok = true;
  for (size_t i = 0; i < orbit_samples.size(); ++i)
    for (size_t j = i + 1; j < orbit_samples.size(); ++j) {
      Vec mid = 0.5 * (orbit_samples[i] + orbit_samples[j]);
      if (mid.norm() < 1e-9) continue;
      if (!orbit_member(mid)) v.orbit_convex_ok = false;
    }

  // exact wall margins: minimize alpha over a slice of the cone
  v.walls_ok = true;
  Vec anchor = Vec::Zero(n);
  for (const Vec& d : D.directions) anchor += d;
  anchor.normalize();
  for (int i : theta.indices) {
    Vec alpha = Vec::Zero(n);
    alpha[i - 1] = 1;
    alpha[i] = -1;
    LpResult r = minimize_over_cone_slice(forms, anchor, alpha);
    if (r.feasible && r.bounded && r.objective <= opts.verify_tol) v.walls_ok = false;
  }
  return v;
}

/// Construction of a theta-admissible cone whose interior
/// contains D - {0}. Throws infeasible_error naming the offending root when
/// the separation LP cannot reach margin eps.
inline HalfSpaceCone construct_admissible_cone(const SampledCone& D_in,
                                               const ThetaSubset& theta_in, double eps,
                                               const AdmissibleOptions& opts = {}) {
  if (D_in.empty()) throw invalid_input_error("construct_admissible_cone: empty cone");
  if (eps <= 0) throw invalid_input_error("construct_admissible_cone: eps must be positive");
  const int n = theta_in.n;
  const ThetaSubset theta = theta_in.symmetrized();
  std::mt19937 rng(opts.seed);

  // i-symmetrize the sampled cone
  std::vector<Vec> d_rays = D_in.directions;
  for (const Vec& d : D_in.directions) d_rays.push_back(opposition_involution(d));

  // close the samples under folded W_theta-orbit midpoints: the cone is convex
  // and its W_theta orbit must be convex, so it contains the folded hull of
  // the orbit of D; filling D up front keeps that hull inside D_eps
  const auto closure_group = weyl_theta(theta);
  for (int round = 0; round < 6; ++round) {
    std::vector<Vec> orbit;
    for (const auto& w : closure_group)
      for (const Vec& x : d_rays) orbit.push_back(weyl_action(w, x).normalized());
    bool grew = false;
    const size_t m = orbit.size();
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j) {
        Vec mid = orbit[i] + orbit[j];
        if (mid.norm() < 1e-9) continue;
        Vec f = fold_to_chamber(mid.normalized()).first;
        bool covered = false;
        for (const Vec& x : d_rays)
          if (angular_distance(f, x) <= eps / 4) {
            covered = true;
            break;
          }
        if (!covered) {
          d_rays.push_back(f);
          grew = true;
        }
      }
    if (!grew) break;
  }
  const SampledCone D = SampledCone::from_rays(d_rays);

  // eps-neighborhood samples of D on the unit sphere (the cone D_eps)
  std::vector<Vec> d_eps = D.directions;
  for (const Vec& d : D.directions)
    for (const Vec& p : detail::sphere_neighborhood(d, eps, opts.neighborhood_samples, rng))
      d_eps.push_back(p);

  const auto group = weyl_theta(theta);
  std::vector<Vec> positives;  // W_theta D and the neighborhood targets
  for (const auto& w : group)
    for (const Vec& d : D.directions) positives.push_back(weyl_action(w, d));
  for (const Vec& p : d_eps) positives.push_back(p);

  std::vector<Vec> forms;
  // the chamber itself
  for (int i = 1; i <= n - 1; ++i) {
    Vec alpha = Vec::Zero(n);
    alpha[i - 1] = 1;
    alpha[i] = -1;
    forms.push_back(alpha);
  }
  // polyhedral hull of D_eps
  for (const Vec& f : cone_facets(d_eps)) forms.push_back(f);
  // separating forms per root, propagated over W_theta and i
  for (int i : theta.indices) {
    const auto wall = detail::wall_sample_rays(n, i, opts.wall_samples, rng);
    SeparationResult sep = separating_form(positives, wall);
    if (!sep.ok || sep.margin < eps)
      throw infeasible_error("construct_admissible_cone: cannot separate D from wall of alpha_" +
                                 std::to_string(i) + " with margin " + std::to_string(eps),
                             "alpha_" + std::to_string(i));
    for (const auto& w : group) {
      Vec hw = detail::form_compose_weyl(sep.form, w);
      forms.push_back(hw);
      forms.push_back(detail::form_compose_involution(hw));
    }
  }
  return HalfSpaceCone::intersection(std::move(forms));
}

}  // namespace lcone

#endif
