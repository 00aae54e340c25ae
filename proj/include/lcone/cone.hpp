#ifndef LCONE_CONE_HPP
#define LCONE_CONE_HPP

// Computational geometry of closed cones in the Weyl chamber. Two dual
// representations: finite direction samples for estimated cones, half-space
// intersections (optionally unions of such pieces) for constructed cones.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "lcone/cartan.hpp"
#include "lcone/common.hpp"
#include "lcone/lp.hpp"

namespace lcone {

/// A finite set of unit zero-sum directions approximating a closed cone.
struct SampledCone {
  std::vector<Vec> directions;
  bool chamber_flag = false;

  static SampledCone from_rays(const std::vector<Vec>& rays, double dedup_angle = 1e-9) {
    SampledCone c;
    c.chamber_flag = true;
    for (const Vec& r : rays) {
      const double nr = r.norm();
      if (!(nr > 0)) continue;
      Vec u = r / nr;
      bool dup = false;
      for (const Vec& d : c.directions)
        if (angular_distance(d, u) <= dedup_angle) {
          dup = true;
          break;
        }
      if (!dup) {
        if (!in_chamber(u, 1e-12)) c.chamber_flag = false;
        c.directions.push_back(std::move(u));
      }
    }
    return c;
  }

  bool empty() const { return directions.empty(); }
};

/// Cone given as an intersection of half-spaces {h_j >= 0}; several pieces
/// form a union (e.g. the folded plane V1 u V2).
struct HalfSpaceCone {
  std::vector<std::vector<Vec>> pieces;  // each piece: intersection of forms

  static HalfSpaceCone intersection(std::vector<Vec> forms) {
    HalfSpaceCone c;
    c.pieces.push_back(std::move(forms));
    return c;
  }
};

inline bool membership(const HalfSpaceCone& cone, const Vec& v, double tol = 1e-9) {
  const double scale = std::max(1.0, v.norm());
  for (const auto& piece : cone.pieces) {
    bool ok = true;
    for (const Vec& h : piece)
      if (h.dot(v) < -tol * scale) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

inline double directed_hausdorff(const SampledCone& from, const SampledCone& to) {
  if (from.empty() || to.empty())
    throw invalid_input_error("directed_hausdorff: empty cone");
  double worst = 0;
  for (const Vec& u : from.directions) {
    double best = M_PI;
    for (const Vec& v : to.directions) best = std::min(best, angular_distance(u, v));
    worst = std::max(worst, best);
  }
  return worst;
}

/// Hausdorff distance between the projectivized direction sets, in radians.
inline double projectivized_hausdorff(const SampledCone& a, const SampledCone& b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

inline SampledCone apply_involution(const SampledCone& c) {
  std::vector<Vec> rays;
  rays.reserve(c.directions.size());
  for (const Vec& d : c.directions) rays.push_back(opposition_involution(d));
  return SampledCone::from_rays(rays);
}

/// Pairwise-midpoint convexity test. A midpoint of two samples is trivially a
/// non-negative combination of them, so hull membership alone cannot detect
/// non-convexity; instead each midpoint direction must come back close to the
/// sample set itself, with the threshold calibrated to the sampling resolution
/// (max nearest-neighbor angle) so sparse convex cones are not rejected.
inline bool is_convex_cone(const SampledCone& c, double angular_tol = 1e-6) {
  if (c.empty()) throw invalid_input_error("is_convex_cone: empty cone");
  const auto& d = c.directions;
  if (d.size() < 3) return true;  // two rays cannot witness non-convexity
  double resolution = 0;
  for (size_t i = 0; i < d.size(); ++i) {
    double nn = M_PI;
    for (size_t j = 0; j < d.size(); ++j)
      if (j != i) nn = std::min(nn, angular_distance(d[i], d[j]));
    resolution = std::max(resolution, nn);
  }
  const double threshold = std::max(angular_tol, resolution);
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) {
      Vec mid = d[i] + d[j];
      if (mid.norm() < 1e-12) continue;  // antipodal pair, no midpoint direction
      double best = M_PI;
      for (const Vec& s : d) best = std::min(best, angular_distance(mid, s));
      if (best > threshold) return false;
    }
  return true;
}

/// Orbit of the sample set under W_{theta u i(theta)}.
inline SampledCone weyl_orbit_cone(const ThetaSubset& theta, const SampledCone& c) {
  const auto group = weyl_theta(theta.symmetrized());
  std::vector<Vec> rays;
  rays.reserve(group.size() * c.directions.size());
  for (const auto& w : group)
    for (const Vec& d : c.directions) rays.push_back(weyl_action(w, d));
  return SampledCone::from_rays(rays);
}

/// theta-convexity: convexity of the W_{theta u i(theta)} orbit of the cone.
inline bool theta_convexity(const ThetaSubset& theta, const SampledCone& c,
                            double angular_tol = 1e-6) {
  return is_convex_cone(weyl_orbit_cone(theta, c), angular_tol);
}

/// Minimum of alpha_i over the sample directions; positive means the cone is
/// disjoint from the wall ker alpha_i.
inline double wall_margin(const SampledCone& c, int root_index) {
  if (c.empty()) throw invalid_input_error("wall_margin: empty cone");
  double m = std::numeric_limits<double>::infinity();
  for (const Vec& d : c.directions) m = std::min(m, simple_root(root_index, d));
  return m;
}

inline double i_invariance_defect(const SampledCone& c) {
  return projectivized_hausdorff(c, apply_involution(c));
}

/// Extreme-direction subset: drop every sample expressible as a non-negative
/// combination of the others.
inline SampledCone conical_hull(const SampledCone& c, double angular_tol = 1e-9) {
  if (c.empty()) throw invalid_input_error("conical_hull: empty cone");
  std::vector<Vec> keep = c.directions;
  for (size_t i = keep.size(); i-- > 0;) {
    if (keep.size() == 1) break;
    std::vector<Vec> others;
    others.reserve(keep.size() - 1);
    for (size_t j = 0; j < keep.size(); ++j)
      if (j != i) others.push_back(keep[j]);
    if (in_conical_hull(others, keep[i], angular_tol)) keep.erase(keep.begin() + i);
  }
  return SampledCone::from_rays(keep);
}

/// Facet forms of a full-dimensional pointed cone inside the zero-sum
/// hyperplane, by enumerating (d-1)-subsets of rays (d = n-1). Only intended
/// for ambient n <= 5.
inline std::vector<Vec> cone_facets(const std::vector<Vec>& rays, double tol = 1e-9) {
  if (rays.empty()) throw invalid_input_error("cone_facets: no rays");
  const int n = static_cast<int>(rays[0].size());
  const int d = n - 1;
  // orthonormal basis of the zero-sum hyperplane
  Mat basis(n, d);
  {
    Mat ones = Mat::Ones(n, 1) / std::sqrt(double(n));
    Eigen::HouseholderQR<Mat> qr(ones);
    Mat q = qr.householderQ();
    basis = q.rightCols(d);
  }
  const int m = static_cast<int>(rays.size());
  Mat y(d, m);
  for (int j = 0; j < m; ++j) y.col(j) = basis.transpose() * rays[j];
  if (Eigen::FullPivLU<Mat>(y).rank() < d)
    throw invalid_input_error("cone_facets: cone is not full-dimensional");
  if (d == 1) {
    // rank-one chamber: the cone is a single ray, its one facet is the ray itself
    Vec h = rays[0] / rays[0].norm();
    return {h};
  }

  std::vector<Vec> facets;
  std::vector<int> sel(d - 1);
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (k == d - 1) {
      Mat sub(d - 1, d);
      for (int i = 0; i < d - 1; ++i) sub.row(i) = y.col(sel[i]).transpose();
      Eigen::JacobiSVD<Mat> svd(sub, Eigen::ComputeFullV);
      if (d > 1 && svd.singularValues()[d - 2] < tol) return;  // rays not independent
      Vec normal = svd.matrixV().col(d - 1);
      // orient so all rays are on the non-negative side; reject if mixed
      double mn = 0, mx = 0;
      for (int j = 0; j < m; ++j) {
        const double s = normal.dot(y.col(j));
        mn = std::min(mn, s);
        mx = std::max(mx, s);
      }
      Vec h;
      if (mn >= -tol)
        h = basis * normal;
      else if (mx <= tol)
        h = basis * (-normal);
      else
        return;
      h /= h.norm();
      for (const Vec& f : facets)
        if ((f - h).norm() < 1e-7) return;
      facets.push_back(h);
      return;
    }
    for (int j = start; j < m; ++j) {
      sel[k] = j;
      rec(j + 1, k + 1);
    }
  };
  rec(0, 0);
  if (facets.empty()) throw invalid_input_error("cone_facets: no supporting facets found");
  return facets;
}

}  // namespace lcone

#endif
