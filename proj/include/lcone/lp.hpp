#ifndef LCONE_LP_HPP
#define LCONE_LP_HPP

// Small dense LP solver (two-phase primal simplex, Bland's rule) plus the
// geometric wrappers used by the cone code: conical-hull membership by
// L1-residual minimization and maximum-margin separating forms.

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <vector>

#include "lcone/common.hpp"

namespace lcone {

struct LpResult {
  bool feasible = false;
  bool bounded = true;
  double objective = 0.0;
  Vec x;
};

namespace detail {

/// min c.x  s.t.  A x = b, x >= 0.  Rows with b < 0 are sign-flipped.
inline LpResult simplex(Mat A, Vec b, Vec c, double tol = 1e-10) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  for (int i = 0; i < m; ++i)
    if (b[i] < 0) {
      A.row(i) *= -1;
      b[i] *= -1;
    }

  // tableau with artificial basis
  Mat T(m, n + m);
  T.leftCols(n) = A;
  T.rightCols(m) = Mat::Identity(m, m);
  Vec rhs = b;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  auto run_phase = [&](const Vec& cost, int ncols) -> bool {
    // returns false if unbounded
    const int max_iter = 50 * (m + ncols) + 1000;
    for (int iter = 0; iter < max_iter; ++iter) {
      // reduced costs: cost_j - y.A_j with y = cost_B B^{-1}; tableau is kept
      // in B^{-1}A form, so y.A_j = sum_i cost[basis[i]] * T(i,j)
      int enter = -1;
      for (int j = 0; j < ncols; ++j) {
        double red = cost[j];
        for (int i = 0; i < m; ++i) red -= cost[basis[i]] * T(i, j);
        if (red < -tol) {
          enter = j;  // Bland: first improving column
          break;
        }
      }
      if (enter < 0) return true;  // optimal
      // ratio test, Bland tie-break on basis index
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        if (T(i, enter) > tol) {
          const double ratio = rhs[i] / T(i, enter);
          if (ratio < best - tol ||
              (ratio < best + tol && (leave < 0 || basis[i] < basis[leave]))) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return false;  // unbounded
      // pivot
      const double piv = T(leave, enter);
      T.row(leave) /= piv;
      rhs[leave] /= piv;
      for (int i = 0; i < m; ++i) {
        if (i == leave) continue;
        const double f = T(i, enter);
        if (f != 0.0) {
          T.row(i) -= f * T.row(leave);
          rhs[i] -= f * rhs[leave];
        }
      }
      basis[leave] = enter;
    }
    return true;  // iteration cap: treat as converged at tolerance
  };

  // phase 1: minimize sum of artificials
  Vec cost1 = Vec::Zero(n + m);
  cost1.tail(m).setOnes();
  run_phase(cost1, n + m);
  double art = 0;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= n) art += rhs[i];
  LpResult res;
  if (art > 1e-7) {
    res.feasible = false;
    return res;
  }
  // drive leftover artificials out of the basis where possible
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= n) {
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (std::abs(T(i, j)) > tol) {
          enter = j;
          break;
        }
      if (enter >= 0) {
        const double piv = T(i, enter);
        T.row(i) /= piv;
        rhs[i] /= piv;
        for (int r = 0; r < m; ++r) {
          if (r == i) continue;
          const double f = T(r, enter);
          if (f != 0.0) {
            T.row(r) -= f * T.row(i);
            rhs[r] -= f * rhs[i];
          }
        }
        basis[i] = enter;
      }
    }
  }

  // phase 2
  Vec cost2 = Vec::Zero(n + m);
  cost2.head(n) = c;
  const bool bounded = run_phase(cost2, n);
  res.feasible = true;
  res.bounded = bounded;
  res.x = Vec::Zero(n);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) res.x[basis[i]] = rhs[i];
  res.objective = bounded ? c.dot(res.x) : -std::numeric_limits<double>::infinity();
  return res;
}

}  // namespace detail

/// Best L1 fit of v by a non-negative combination of the given rays.
/// Returns the residual vector v - R c*.
inline Vec conical_hull_residual(const std::vector<Vec>& rays, const Vec& v) {
  if (rays.empty()) throw invalid_input_error("conical_hull_residual: no rays");
  const int d = static_cast<int>(v.size());
  const int m = static_cast<int>(rays.size());
  // min 1.(s+ + s-)  s.t.  R c + s+ - s- = v, all vars >= 0
  Mat A(d, m + 2 * d);
  for (int j = 0; j < m; ++j) A.col(j) = rays[j];
  A.block(0, m, d, d) = Mat::Identity(d, d);
  A.block(0, m + d, d, d) = -Mat::Identity(d, d);
  Vec c = Vec::Zero(m + 2 * d);
  c.tail(2 * d).setOnes();
  LpResult r = detail::simplex(A, v, c);
  if (!r.feasible) throw invalid_input_error("conical_hull_residual: LP infeasible");
  Vec fit = Vec::Zero(d);
  for (int j = 0; j < m; ++j) fit += r.x[j] * rays[j];
  return v - fit;
}

/// True if the unit vector v lies in the conical hull of the rays within the
/// given angular tolerance.
inline bool in_conical_hull(const std::vector<Vec>& rays, const Vec& v, double angular_tol) {
  const Vec res = conical_hull_residual(rays, v / v.norm());
  return res.norm() <= std::sin(angular_tol) + 1e-12;
}

struct SeparationResult {
  bool ok = false;
  double margin = 0.0;
  Vec form;  // |coeffs|_inf <= 1, coefficients sum to zero
};

/// Maximum-margin linear form with  h.x <= -margin  on neg  and  h.y >= margin
/// on pos, normalized by |h|_inf <= 1 and h constant on the zero-sum complement.
inline SeparationResult separating_form(const std::vector<Vec>& pos,
                                        const std::vector<Vec>& neg) {
  if (pos.empty() || neg.empty())
    throw invalid_input_error("separating_form: empty point set");
  const int n = static_cast<int>(pos[0].size());
  const int np = static_cast<int>(pos.size());
  const int nn = static_cast<int>(neg.size());
  // vars: hp (n), hm (n), margin (1), slacks for points (np+nn), slacks for
  // box bounds hp_i <= 1, hm_i <= 1 (2n). h = hp - hm.
  const int nv = 2 * n + 1 + np + nn + 2 * n;
  const int nr = np + nn + 2 * n + 1;
  Mat A = Mat::Zero(nr, nv);
  Vec b = Vec::Zero(nr);
  int row = 0;
  const int i_m = 2 * n;          // margin var
  const int i_slack = 2 * n + 1;  // first point slack
  for (int p = 0; p < np; ++p, ++row) {
    A.row(row).head(n) = pos[p].transpose();
    A.row(row).segment(n, n) = -pos[p].transpose();
    A(row, i_m) = -1;
    A(row, i_slack + row) = -1;  // h.y - m - s = 0
  }
  for (int q = 0; q < nn; ++q, ++row) {
    A.row(row).head(n) = -neg[q].transpose();
    A.row(row).segment(n, n) = neg[q].transpose();
    A(row, i_m) = -1;
    A(row, i_slack + row) = -1;  // -h.x - m - s = 0
  }
  const int i_box = i_slack + np + nn;
  for (int i = 0; i < 2 * n; ++i, ++row) {
    A(row, i) = 1;
    A(row, i_box + i) = 1;  // h?_i + u = 1
    b[row] = 1;
  }
  // sum of coefficients zero (forms live on the zero-sum hyperplane)
  for (int i = 0; i < n; ++i) {
    A(row, i) = 1;
    A(row, n + i) = -1;
  }
  b[row] = 0;

  Vec c = Vec::Zero(nv);
  c[i_m] = -1;  // maximize margin
  LpResult r = detail::simplex(A, b, c);
  SeparationResult s;
  if (!r.feasible || !r.bounded) return s;
  s.margin = r.x[i_m];
  s.form = r.x.head(n) - r.x.segment(n, n);
  s.ok = true;
  return s;
}

/// Minimum of a linear objective over {v : forms >= 0, sum v = 0, anchor.v = 1}.
/// Used for exact wall-margin checks on half-space cones.
inline LpResult minimize_over_cone_slice(const std::vector<Vec>& forms, const Vec& anchor,
                                         const Vec& objective) {
  const int n = static_cast<int>(anchor.size());
  const int nf = static_cast<int>(forms.size());
  // vars: vp (n), vm (n), slacks (nf); constraints: forms.v - s = 0, 1.v = 0, anchor.v = 1
  const int nv = 2 * n + nf;
  const int nr = nf + 2;
  Mat A = Mat::Zero(nr, nv);
  Vec b = Vec::Zero(nr);
  for (int f = 0; f < nf; ++f) {
    A.row(f).head(n) = forms[f].transpose();
    A.row(f).segment(n, n) = -forms[f].transpose();
    A(f, 2 * n + f) = -1;
  }
  A.row(nf).head(n).setOnes();
  A.row(nf).segment(n, n).setConstant(-1);
  A.row(nf + 1).head(n) = anchor.transpose();
  A.row(nf + 1).segment(n, n) = -anchor.transpose();
  b[nf + 1] = 1;
  Vec c = Vec::Zero(nv);
  c.head(n) = objective;
  c.segment(n, n) = -objective;
  LpResult r = detail::simplex(A, b, c);
  if (r.feasible && r.bounded) {
    Vec v = r.x.head(n) - r.x.segment(n, n);
    r.x = v;
    r.objective = objective.dot(v);
  }
  return r;
}

}  // namespace lcone

#endif
