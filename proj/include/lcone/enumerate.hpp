#ifndef LCONE_ENUMERATE_HPP
#define LCONE_ENUMERATE_HPP

// Word-ball enumeration of a marked free group: every reduced word of length
// <= N, depth-first by prefix, with Cartan (and optionally Jordan)
// projections computed from log-scale renormalized matrix products.
//
// Accuracy: a single renormalized product loses the small singular values of
// long contracting words (they fall below the SVD's absolute accuracy), so
// the enumerator carries the exterior-power products along with the word --
// wedge powers are multiplicative, and the j-th partial sum of mu is the log
// of the *top* singular value of the j-th wedge, always well-conditioned.
//
// Parallelism partitions the length-1 prefixes across workers; the merged
// record order is independent of the worker count.

#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lcone/common.hpp"
#include "lcone/marked_group.hpp"
#include "lcone/scaled_matrix.hpp"

namespace lcone {

struct GroupElementRecord {
  std::string word;  // reduced word over a..z / A..Z
  int length = 0;
  Vec mu;
  std::optional<Vec> lambda;
};

struct BallOptions {
  long long budget = 200'000'000;
  int workers = 1;
  bool with_lambda = false;
  double logscale_bound = 1e6;
};

struct BallResult {
  std::vector<GroupElementRecord> records;
  long long dropped = 0;  // elements discarded for log-scale overflow
};

namespace detail {

/// Wedge powers 1..n-1 of one group element (the n-th is det = 1).
using WedgeTuple = std::vector<ScaledMatrix>;

inline WedgeTuple wedge_tuple(const Mat& g) {
  const int n = static_cast<int>(g.rows());
  WedgeTuple t;
  t.reserve(n - 1);
  for (int j = 1; j <= n - 1; ++j) t.push_back(ScaledMatrix::from(compound_matrix(g, j)));
  return t;
}

inline WedgeTuple wedge_multiply(const WedgeTuple& a, const WedgeTuple& b) {
  WedgeTuple r;
  r.reserve(a.size());
  for (size_t j = 0; j < a.size(); ++j) r.push_back(scaled_multiply(a[j], b[j]));
  return r;
}

/// mu from the wedge partial sums: omega_j = log s_1..s_j, omega_n = 0.
inline Vec cartan_from_wedges(const WedgeTuple& w, int n) {
  Vec omega(n + 1);
  omega[0] = 0.0;
  omega[n] = 0.0;  // det 1
  for (int j = 1; j <= n - 1; ++j) {
    Eigen::JacobiSVD<Mat> svd(w[j - 1].mat);
    omega[j] = w[j - 1].logscale + std::log(svd.singularValues()[0]);
  }
  Vec mu(n);
  for (int j = 0; j < n; ++j) mu[j] = omega[j + 1] - omega[j];
  std::sort(mu.data(), mu.data() + n, std::greater<double>());
  return recenter_zero_sum(mu);
}

/// lambda likewise, from spectral radii of the wedges.
inline Vec jordan_from_wedges(const WedgeTuple& w, int n) {
  Vec omega(n + 1);
  omega[0] = 0.0;
  omega[n] = 0.0;
  for (int j = 1; j <= n - 1; ++j) {
    Eigen::EigenSolver<Mat> es(w[j - 1].mat, /*computeEigenvectors=*/false);
    double rho = 0;
    for (int i = 0; i < w[j - 1].mat.rows(); ++i)
      rho = std::max(rho, std::abs(es.eigenvalues()[i]));
    omega[j] = w[j - 1].logscale + std::log(rho);
  }
  Vec lam(n);
  for (int j = 0; j < n; ++j) lam[j] = omega[j + 1] - omega[j];
  std::sort(lam.data(), lam.data() + n, std::greater<double>());
  return recenter_zero_sum(lam);
}

struct SubtreeJob {
  const MarkedGroup* group;
  const std::vector<WedgeTuple>* letter_wedges;  // per symmetric generator
  int first_letter;
  int max_length;
  const BallOptions* opts;
  std::vector<GroupElementRecord> out;
  long long dropped = 0;

  void run() {
    std::string word(1, group->letter_char(first_letter));
    dfs(first_letter, (*letter_wedges)[first_letter], word);
  }

  void emit(const WedgeTuple& w, const std::string& word) {
    GroupElementRecord rec;
    rec.word = word;
    rec.length = static_cast<int>(word.size());
    rec.mu = cartan_from_wedges(w, group->n());
    if (opts->with_lambda) rec.lambda = jordan_from_wedges(w, group->n());
    out.push_back(std::move(rec));
  }

  void dfs(int last_letter, const WedgeTuple& w, std::string& word) {
    for (const auto& s : w)
      if (std::abs(s.logscale) > opts->logscale_bound) {
        ++dropped;
        return;
      }
    emit(w, word);
    if (static_cast<int>(word.size()) == max_length) return;
    const int a = group->alphabet_size();
    const int forbidden = group->inverse_letter(last_letter);
    for (int l = 0; l < a; ++l) {
      if (l == forbidden) continue;
      word.push_back(group->letter_char(l));
      dfs(l, wedge_multiply(w, (*letter_wedges)[l]), word);
      word.pop_back();
    }
  }
};

}  // namespace detail

/// All reduced words of length <= N, each exactly once, in depth-first prefix
/// order starting from the identity. Deterministic for a fixed group and N.
inline BallResult enumerate_ball(const MarkedGroup& group, int N, const BallOptions& opts = {}) {
  if (N < 0) throw invalid_input_error("enumerate_ball: negative radius");
  const long long size = free_ball_size(group.num_generators(), N);
  if (size > opts.budget)
    throw budget_exceeded_error("enumerate_ball: ball of " + std::to_string(size) +
                                " elements exceeds budget " + std::to_string(opts.budget));

  BallResult result;
  result.records.reserve(static_cast<size_t>(size));
  {
    GroupElementRecord id;
    id.word = "";
    id.length = 0;
    id.mu = Vec::Zero(group.n());
    if (opts.with_lambda) id.lambda = Vec::Zero(group.n());
    result.records.push_back(std::move(id));
  }
  if (N == 0) return result;

  const int a = group.alphabet_size();
  std::vector<detail::WedgeTuple> letter_wedges;
  letter_wedges.reserve(a);
  for (int l = 0; l < a; ++l)
    letter_wedges.push_back(detail::wedge_tuple(group.symmetric_generators[l]));

  std::vector<detail::SubtreeJob> jobs(a);
  for (int l = 0; l < a; ++l) jobs[l] = {&group, &letter_wedges, l, N, &opts, {}, 0};

  const int workers = std::max(1, opts.workers);
  if (workers == 1) {
    for (auto& j : jobs) j.run();
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(workers, a); ++w)
      pool.emplace_back([&] {
        for (int j = next.fetch_add(1); j < a; j = next.fetch_add(1)) jobs[j].run();
      });
    for (auto& t : pool) t.join();
  }
  for (auto& j : jobs) {
    result.dropped += j.dropped;
    for (auto& rec : j.out) result.records.push_back(std::move(rec));
  }
  return result;
}

}  // namespace lcone

#endif
