#ifndef LCONE_SCALED_MATRIX_HPP
#define LCONE_SCALED_MATRIX_HPP

// Overflow-safe matrix products: a matrix is stored renormalized so that its
// largest entry modulus stays in [1/2, 2], together with a log-scale. Long
// word products and high powers then never leave double range.

#include <cmath>
#include <vector>

#include "lcone/cartan.hpp"
#include "lcone/common.hpp"

namespace lcone {

struct ScaledMatrix {
  Mat mat;          // max |entry| in [1/2, 2]
  double logscale;  // true matrix = exp(logscale) * mat

  static ScaledMatrix from(const Mat& m) {
    ScaledMatrix s{m, 0.0};
    s.renormalize();
    return s;
  }

  static ScaledMatrix identity(int n) { return {Mat::Identity(n, n), 0.0}; }

  void renormalize() {
    const double a = mat.cwiseAbs().maxCoeff();
    if (!(a > 0) || !std::isfinite(a))
      throw invalid_input_error("ScaledMatrix: zero or non-finite matrix");
    // scale by a power of two so renormalization itself is exact
    const double s = std::exp2(std::round(std::log2(a)));
    mat /= s;
    logscale += std::log(s);
  }
};

inline ScaledMatrix scaled_multiply(const ScaledMatrix& a, const ScaledMatrix& b) {
  if (a.mat.cols() != b.mat.rows())
    throw invalid_input_error("scaled_multiply: incompatible sizes");
  ScaledMatrix r{a.mat * b.mat, a.logscale + b.logscale};
  r.renormalize();
  return r;
}

inline Mat compound_matrix(const Mat& g, int k);

/// mu of the true matrix exp(logscale)*mat. The uniform log-scale shift is
/// removed by the zero-sum recentering, so only mat's singular values matter.
/// Severe contrast drops the small singular values below the SVD's absolute
/// accuracy (log(0) = -inf); the partial sums log(s_1..s_j) are then recovered
/// as top singular values of the exterior powers, which keep full relative
/// accuracy.
inline Vec cartan_projection(const ScaledMatrix& s) {
  const int n = static_cast<int>(s.mat.rows());
  Eigen::JacobiSVD<Mat> svd(s.mat);
  const Vec& sv = svd.singularValues();
  if (sv[n - 1] > 1e-13 * sv[0]) {
    Vec mu = sv.array().log();
    std::sort(mu.data(), mu.data() + mu.size(), std::greater<double>());
    return recenter_zero_sum(mu);
  }
  Vec omega(n + 1);
  omega[0] = 0.0;
  // group elements have det +-1, so the top partial sum is fixed by the scale;
  // computing it as an n x n minor would cancel catastrophically
  omega[n] = -n * s.logscale;
  for (int j = 1; j <= n - 1; ++j) {
    const ScaledMatrix a = ScaledMatrix::from(compound_matrix(s.mat, j));
    Eigen::JacobiSVD<Mat> csvd(a.mat);
    omega[j] = a.logscale + std::log(csvd.singularValues()[0]);
  }
  Vec mu(n);
  for (int j = 0; j < n; ++j) mu[j] = omega[j + 1] - omega[j];
  std::sort(mu.data(), mu.data() + mu.size(), std::greater<double>());
  return recenter_zero_sum(mu);
}

inline Vec jordan_projection(const ScaledMatrix& s) {
  const int n = static_cast<int>(s.mat.rows());
  Eigen::EigenSolver<Mat> es(s.mat, /*computeEigenvectors=*/false);
  Vec mods(n);
  for (int i = 0; i < n; ++i) mods[i] = std::abs(es.eigenvalues()[i]);
  std::sort(mods.data(), mods.data() + n, std::greater<double>());
  if (mods[n - 1] > 1e-13 * mods[0]) {
    Vec lam = mods.array().log();
    return recenter_zero_sum(lam);
  }
  // partial products of eigenvalue moduli = spectral radii of exterior powers
  Vec omega(n + 1);
  omega[0] = 0.0;
  omega[n] = -n * s.logscale;  // det +-1 convention, as above
  for (int j = 1; j <= n - 1; ++j) {
    const ScaledMatrix a = ScaledMatrix::from(compound_matrix(s.mat, j));
    Eigen::EigenSolver<Mat> ces(a.mat, /*computeEigenvectors=*/false);
    double rho = 0;
    for (int i = 0; i < a.mat.rows(); ++i) rho = std::max(rho, std::abs(ces.eigenvalues()[i]));
    omega[j] = a.logscale + std::log(rho);
  }
  Vec lam(n);
  for (int j = 0; j < n; ++j) lam[j] = omega[j + 1] - omega[j];
  std::sort(lam.data(), lam.data() + n, std::greater<double>());
  return recenter_zero_sum(lam);
}

/// k-th compound matrix (exterior power): entries are k x k minors, indexed
/// by k-subsets in lexicographic order.
inline Mat compound_matrix(const Mat& g, int k) {
  const int n = static_cast<int>(g.rows());
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur(k);
  // lexicographic k-subsets of {0..n-1}
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    subsets.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  const int m = static_cast<int>(subsets.size());
  Mat c(m, m);
  Mat minor(k, k);
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor(i, j) = g(subsets[r][i], subsets[s][j]);
      c(r, s) = minor.determinant();
    }
  return c;
}

/// mu(g^(2^k)) without underflow: the i-th partial sum mu_1+..+mu_i equals the
/// log of the top singular value of the i-th exterior power of g^(2^k), and
/// top singular values survive log-scale renormalized squaring.
inline Vec cartan_of_pow2(const Mat& g, int k) {
  const int n = static_cast<int>(g.rows());
  Vec omega(n + 1);
  omega[0] = 0.0;
  for (int j = 1; j <= n; ++j) {
    ScaledMatrix a = ScaledMatrix::from(compound_matrix(g, j));
    for (int s = 0; s < k; ++s) a = scaled_multiply(a, a);
    Eigen::JacobiSVD<Mat> svd(a.mat);
    omega[j] = a.logscale + std::log(svd.singularValues()[0]);
  }
  Vec mu(n);
  for (int j = 0; j < n; ++j) mu[j] = omega[j + 1] - omega[j];
  return recenter_zero_sum(mu);
}

}  // namespace lcone

#endif
