#ifndef LCONE_COMMON_HPP
#define LCONE_COMMON_HPP

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace lcone {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct invalid_input_error : std::runtime_error {
  explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

struct budget_exceeded_error : std::runtime_error {
  explicit budget_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

struct infeasible_error : std::runtime_error {
  infeasible_error(const std::string& what, std::string root)
      : std::runtime_error(what), offending_root(std::move(root)) {}
  std::string offending_root;
};

/// Global numeric tolerances; every predicate takes these explicitly.
struct Tolerances {
  double identity = 1e-9;  // algebraic identities
  double limit = 1e-6;     // limit / asymptotic checks
  double angular = 1e-6;   // angular predicates on the unit sphere
};

inline bool is_finite(const Mat& m) { return m.allFinite(); }

/// Subtract the mean so the coordinate sum is exactly zero.
inline Vec recenter_zero_sum(Vec v) {
  v.array() -= v.mean();
  return v;
}

/// Angle between two unit vectors, safe against rounding outside [-1,1].
inline double angular_distance(const Vec& u, const Vec& v) {
  double c = u.dot(v) / (u.norm() * v.norm());
  c = std::max(-1.0, std::min(1.0, c));
  return std::acos(c);
}

}  // namespace lcone

#endif
