#ifndef LCONE_SUBGROUPS_HPP
#define LCONE_SUBGROUPS_HPP

// Limit cones of reductive subgroups via Weyl folding, the explicit
// SL(3)-block folded plane inside SL(4), and the sharpness predicate
// (trivial intersection of limit cones, at an angular margin).

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "lcone/cartan.hpp"
#include "lcone/common.hpp"
#include "lcone/cone.hpp"

namespace lcone {

/// A planar sector spanned by two extreme rays; supports exact closest-point
/// queries, used for the folded-plane pieces V1, V2.
struct SectorPiece {
  Vec ray0, ray1;  // unit vectors

  /// Angular distance from a unit vector to the sector.
  double angular_distance_to(const Vec& v) const {
    // project onto span{ray0, ray1}, clamp to the sector, compare with edges
    const Vec e0 = ray0;
    Vec e1 = ray1 - ray1.dot(e0) * e0;
    e1.normalize();
    const double x = v.dot(e0), y = v.dot(e1);
    double best = std::min(angular_distance(v, ray0), angular_distance(v, ray1));
    const double phi1 = std::atan2(ray1.dot(e1), ray1.dot(e0));
    if (x * x + y * y > 1e-30) {
      const double phi = std::atan2(y, x);
      if (phi > 0 && phi < phi1) {
        const Vec p = (x * e0 + y * e1).normalized();
        best = std::min(best, angular_distance(v, p));
      }
    }
    return best;
  }
};

struct FoldedSubgroupCone {
  SampledCone subalgebra_rays;  // rays of a_H+ embedded in a
  SampledCone folded;           // image under fold_to_chamber
  std::optional<HalfSpaceCone> exact_pieces;      // e.g. {V1, V2}
  std::vector<SectorPiece> sector_pieces;         // same pieces as ray sectors
  std::optional<Vec> fold_ray;                    // V0 = V1 n V2 for the SL(3) block
};

/// Fold each given subalgebra ray into the chamber. Inputs must be zero-sum.
inline FoldedSubgroupCone reductive_subgroup_cone(const std::vector<Vec>& rays,
                                                  double tol = 1e-9) {
  FoldedSubgroupCone out;
  std::vector<Vec> folded;
  for (const Vec& r : rays) {
    if (std::abs(r.sum()) > tol * std::max(1.0, r.norm()))
      throw invalid_input_error("reductive_subgroup_cone: ray is not zero-sum");
    folded.push_back(fold_to_chamber(r).first);
  }
  out.subalgebra_rays = SampledCone::from_rays(rays);
  out.folded = SampledCone::from_rays(folded);
  return out;
}

/// The folded plane mu(H) = V1 u V2 of the SL(3) block inside SL(4):
///   V1 = {(v1,v2,0,v3) in a+ : v1 >= v2 >= 0},
///   V2 = {(v1,0,v2,v3) in a+ : v1 >= 0 >= v2},
/// meeting along the ray V0 = {(v1,0,0,-v1)}.
inline FoldedSubgroupCone folded_plane_SL3_in_SL4(int samples_per_piece = 33) {
  const int n = 4;
  auto e = [&](int i) {
    Vec v = Vec::Zero(n);
    v[i] = 1;
    return v;
  };
  // V1: coordinate 3 pinned to zero, chamber constraints v1>=v2>=0
  std::vector<Vec> v1_forms = {e(2), -e(2), e(0) - e(1), e(1)};
  // V2: coordinate 2 pinned to zero, constraints v1>=0>=v3>=v4
  std::vector<Vec> v2_forms = {e(1), -e(1), e(0), -e(2), e(2) - e(3)};
  HalfSpaceCone pieces;
  pieces.pieces = {v1_forms, v2_forms};

  const Vec v0 = recenter_zero_sum((Vec(4) << 1, 0, 0, -1).finished()).normalized();
  SectorPiece s1{(Vec(4) << 1, 1, 0, -2).finished().normalized(), v0};
  SectorPiece s2{v0, (Vec(4) << 2, 0, -1, -1).finished().normalized()};

  // sample a_H+ = {(v1,v2,v3,0): v1>=v2>=v3, sum 0} densely and fold
  std::vector<Vec> sub_rays;
  for (int i = 0; i < samples_per_piece; ++i) {
    // sweep the chamber of the SL(3) block between its two extreme rays
    const double t = static_cast<double>(i) / (samples_per_piece - 1);
    Vec r1 = (Vec(4) << 2, -1, -1, 0).finished();
    Vec r2 = (Vec(4) << 1, 1, -2, 0).finished();
    Vec r = (1 - t) * r1.normalized() + t * r2.normalized();
    sub_rays.push_back(r);
  }
  FoldedSubgroupCone out = reductive_subgroup_cone(sub_rays);
  out.exact_pieces = pieces;
  out.sector_pieces = {s1, s2};
  out.fold_ray = v0;
  return out;
}

/// Cartan projection of an SL(3)-block Cartan vector via the explicit case
/// split of the folded plane.
inline Vec fold_sl3_cartan(const Vec& mu_h) {
  // mu_h = (v1, v2, v3, 0) with v1 >= v2 >= v3, v1+v2+v3 = 0
  Vec v(4);
  if (mu_h[1] >= 0)
    v << mu_h[0], mu_h[1], 0, mu_h[2];
  else
    v << mu_h[0], 0, mu_h[1], mu_h[2];
  return v;
}

struct SharpnessReport {
  double min_angle = 0;
  double threshold = 0;
  bool sharp = false;
};

/// Sharpness of gamma_cone against the subgroup cone: minimal angular
/// distance from Gamma directions to the H cone, verdict sharp iff it
/// strictly exceeds the threshold.
inline SharpnessReport sharpness_test(const SampledCone& gamma_cone,
                                      const FoldedSubgroupCone& h_cone, double threshold = 0.02) {
  if (gamma_cone.empty() || h_cone.folded.empty())
    throw invalid_input_error("sharpness_test: empty cone");
  SharpnessReport rep;
  rep.threshold = threshold;
  double min_angle = M_PI;
  for (const Vec& d : gamma_cone.directions) {
    double a;
    if (!h_cone.sector_pieces.empty()) {
      a = M_PI;
      for (const auto& s : h_cone.sector_pieces) a = std::min(a, s.angular_distance_to(d));
    } else {
      a = M_PI;
      for (const Vec& h : h_cone.folded.directions) a = std::min(a, angular_distance(d, h));
    }
    min_angle = std::min(min_angle, a);
  }
  rep.min_angle = min_angle;
  rep.sharp = min_angle > threshold;
  return rep;
}

}  // namespace lcone

#endif
