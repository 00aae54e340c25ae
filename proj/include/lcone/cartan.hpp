#ifndef LCONE_CARTAN_HPP
#define LCONE_CARTAN_HPP

// Numerical Lie theory for SL(n,R) with the diagonal Cartan subalgebra:
// a = zero-sum vectors in R^n, a+ the non-increasing chamber, Weyl group =
// coordinate permutations. Cartan projection = sorted log singular values,
// Jordan projection = sorted log eigenvalue moduli.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "lcone/common.hpp"

namespace lcone {

/// The ambient group SL(n,R); rank = n-1.
struct AmbientGroup {
  int n = 2;
  explicit AmbientGroup(int n_) : n(n_) {
    if (n < 2) throw invalid_input_error("AmbientGroup: need n >= 2");
  }
  int rank() const { return n - 1; }
};

/// A subset of {1..n-1} naming simple roots alpha_i(v) = v_i - v_{i+1}.
struct ThetaSubset {
  int n = 2;
  std::vector<int> indices;  // sorted, 1-based

  ThetaSubset(int n_, std::vector<int> idx) : n(n_), indices(std::move(idx)) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (indices.empty()) throw invalid_input_error("ThetaSubset: empty theta");
    for (int i : indices)
      if (i < 1 || i > n - 1) throw invalid_input_error("ThetaSubset: index out of range");
  }

  static ThetaSubset full(int n) {
    std::vector<int> all(n - 1);
    std::iota(all.begin(), all.end(), 1);
    return ThetaSubset(n, all);
  }

  bool contains(int i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
  }

  /// theta union i(theta), where the opposition involution sends alpha_j to alpha_{n-j}.
  ThetaSubset symmetrized() const {
    std::vector<int> idx = indices;
    for (int i : indices) idx.push_back(n - i);
    return ThetaSubset(n, idx);
  }
};

/// A Weyl group element for SL(n): a permutation acting on coordinates,
/// (w.v)_i = v_{perm[i]} with 0-based perm.
struct WeylElement {
  std::vector<int> perm;

  static WeylElement identity(int n) {
    WeylElement w;
    w.perm.resize(n);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    return w;
  }

  /// Simple reflection s_i swapping coordinates i-1 and i (1-based root index).
  static WeylElement simple_reflection(int n, int i) {
    WeylElement w = identity(n);
    std::swap(w.perm[i - 1], w.perm[i]);
    return w;
  }

  WeylElement compose(const WeylElement& other) const {
    // (this*other).v = this.(other.v)
    WeylElement r;
    r.perm.resize(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) r.perm[i] = other.perm[perm[i]];
    return r;
  }

  bool operator<(const WeylElement& o) const { return perm < o.perm; }
  bool operator==(const WeylElement& o) const { return perm == o.perm; }
};

inline Vec weyl_action(const WeylElement& w, const Vec& v) {
  Vec r(v.size());
  for (int i = 0; i < v.size(); ++i) r[i] = v[w.perm[i]];
  return r;
}

/// Subgroup of W generated by the given simple reflections (closure by BFS).
inline std::vector<WeylElement> weyl_subgroup(int n, const std::vector<int>& root_indices) {
  std::set<WeylElement> seen;
  std::vector<WeylElement> queue{WeylElement::identity(n)};
  seen.insert(queue[0]);
  std::vector<WeylElement> gens;
  for (int i : root_indices) gens.push_back(WeylElement::simple_reflection(n, i));
  for (size_t q = 0; q < queue.size(); ++q) {
    for (const auto& s : gens) {
      WeylElement next = queue[q].compose(s);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return queue;
}

/// W_theta: the pointwise stabilizer of a_theta, generated by s_alpha for
/// alpha in Pi - theta.
inline std::vector<WeylElement> weyl_theta(const ThetaSubset& theta) {
  std::vector<int> complement;
  for (int i = 1; i <= theta.n - 1; ++i)
    if (!theta.contains(i)) complement.push_back(i);
  return weyl_subgroup(theta.n, complement);
}

// ---- projections ----------------------------------------------------------

/// mu(g): log singular values sorted non-increasing, recentered to zero sum.
inline Vec cartan_projection(const Mat& g, double det_tol = 1e-6) {
  if (g.rows() != g.cols() || g.rows() < 2)
    throw invalid_input_error("cartan_projection: need square matrix, n >= 2");
  if (!is_finite(g)) throw invalid_input_error("cartan_projection: non-finite matrix");
  const double det = g.determinant();
  if (!std::isfinite(det) || std::abs(det) < 1e-300)
    throw invalid_input_error("cartan_projection: singular matrix");
  if (std::abs(det - 1.0) > det_tol)
    throw invalid_input_error("cartan_projection: |det - 1| exceeds tolerance");
  Eigen::JacobiSVD<Mat> svd(g);
  Vec mu = svd.singularValues().array().log();
  std::sort(mu.data(), mu.data() + mu.size(), std::greater<double>());
  return recenter_zero_sum(mu);
}

/// lambda(g): log moduli of eigenvalues sorted non-increasing, zero-sum.
/// Complex pairs contribute log|z| twice.
inline Vec jordan_projection(const Mat& g) {
  if (g.rows() != g.cols() || g.rows() < 2)
    throw invalid_input_error("jordan_projection: need square matrix, n >= 2");
  if (!is_finite(g)) throw invalid_input_error("jordan_projection: non-finite matrix");
  if (std::abs(g.determinant()) < 1e-300)
    throw invalid_input_error("jordan_projection: singular matrix");
  Eigen::EigenSolver<Mat> es(g, /*computeEigenvectors=*/false);
  Vec lam(g.rows());
  for (int i = 0; i < g.rows(); ++i) lam[i] = std::log(std::abs(es.eigenvalues()[i]));
  std::sort(lam.data(), lam.data() + lam.size(), std::greater<double>());
  return recenter_zero_sum(lam);
}

/// Opposition involution i(v) = -Ad_{w0}(v): reverse and negate.
inline Vec opposition_involution(const Vec& v) {
  Vec r(v.size());
  for (int i = 0; i < v.size(); ++i) r[i] = -v[v.size() - 1 - i];
  return r;
}

inline double simple_root(int i, const Vec& v) {
  if (i < 1 || i > v.size() - 1) throw invalid_input_error("simple_root: index out of range");
  return v[i - 1] - v[i];
}

/// 2*rho(v) = sum_i (n+1-2i) v_i, the sum of all positive roots.
inline double two_rho(const Vec& v) {
  const int n = static_cast<int>(v.size());
  double s = 0;
  for (int i = 1; i <= n; ++i) s += (n + 1 - 2 * i) * v[i - 1];
  return s;
}

/// Fundamental weight omega_k(v) = v_1 + ... + v_k.
inline double fundamental_weight(int k, const Vec& v) {
  if (k < 1 || k > v.size() - 1) throw invalid_input_error("fundamental_weight: index out of range");
  return v.head(k).sum();
}

/// Orthogonal projection p_theta onto a_theta = {v : alpha_i(v)=0, i not in theta}:
/// averages coordinates over the blocks cut out by theta.
inline Vec p_theta(const ThetaSubset& theta, const Vec& v) {
  const int n = static_cast<int>(v.size());
  if (theta.n != n) throw invalid_input_error("p_theta: dimension mismatch");
  Vec r(n);
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    // block boundary after coordinate i when alpha_i in theta (or at the end)
    if (i == n || theta.contains(i)) {
      const double avg = v.segment(start, i - start).mean();
      r.segment(start, i - start).setConstant(avg);
      start = i;
    }
  }
  return r;
}

/// Sort into the closed chamber a+ and return the witnessing Weyl element,
/// so that weyl_action(w, v) is the folded vector.
inline std::pair<Vec, WeylElement> fold_to_chamber(const Vec& v) {
  const int n = static_cast<int>(v.size());
  WeylElement w = WeylElement::identity(n);
  std::stable_sort(w.perm.begin(), w.perm.end(),
                   [&](int a, int b) { return v[a] > v[b]; });
  return {weyl_action(w, v), w};
}

inline bool in_chamber(const Vec& v, double tol = 0.0) {
  for (int i = 0; i + 1 < v.size(); ++i)
    if (v[i] + tol < v[i + 1]) return false;
  return true;
}

}  // namespace lcone

#endif
