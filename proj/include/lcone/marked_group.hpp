#ifndef LCONE_MARKED_GROUP_HPP
#define LCONE_MARKED_GROUP_HPP

#include <Eigen/Dense>

#include <cctype>
#include <string>
#include <vector>

#include "lcone/cartan.hpp"
#include "lcone/common.hpp"

namespace lcone {

/// A finitely generated subgroup of SL(n,R) with a fixed ordered marking.
/// Generators are letters 'a','b',... and their formal inverses 'A','B',...;
/// the generating set is always symmetrized.
struct MarkedGroup {
  AmbientGroup ambient;
  std::vector<Mat> generators;
  bool assume_free = true;
  std::vector<Mat> symmetric_generators;  // [g_0..g_{k-1}, g_0^-1..g_{k-1}^-1]

  MarkedGroup(int n, std::vector<Mat> gens, bool free = true, double det_tol = 1e-6)
      : ambient(n), generators(std::move(gens)), assume_free(free) {
    if (generators.empty()) throw invalid_input_error("MarkedGroup: no generators");
    for (const Mat& g : generators) {
      if (g.rows() != n || g.cols() != n)
        throw invalid_input_error("MarkedGroup: generator size mismatch");
      if (!is_finite(g)) throw invalid_input_error("MarkedGroup: non-finite generator");
      if (std::abs(g.determinant() - 1.0) > det_tol)
        throw invalid_input_error("MarkedGroup: generator determinant not 1");
    }
    symmetric_generators = generators;
    for (const Mat& g : generators) symmetric_generators.push_back(g.inverse());
  }

  int n() const { return ambient.n; }
  int num_generators() const { return static_cast<int>(generators.size()); }
  int alphabet_size() const { return 2 * num_generators(); }

  /// Index of the formal inverse letter.
  int inverse_letter(int letter) const {
    const int k = num_generators();
    return letter < k ? letter + k : letter - k;
  }

  char letter_char(int letter) const {
    const int k = num_generators();
    return letter < k ? static_cast<char>('a' + letter)
                      : static_cast<char>('A' + (letter - k));
  }

  int letter_index(char c) const {
    const int k = num_generators();
    if (std::islower(static_cast<unsigned char>(c))) {
      const int i = c - 'a';
      if (i < 0 || i >= k) throw invalid_input_error("MarkedGroup: unknown letter");
      return i;
    }
    const int i = c - 'A';
    if (i < 0 || i >= k) throw invalid_input_error("MarkedGroup: unknown letter");
    return i + k;
  }

  /// Formal inverse of a reduced word: reverse and invert each letter.
  std::string inverse_word(const std::string& word) const {
    std::string r;
    r.reserve(word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      r.push_back(letter_char(inverse_letter(letter_index(*it))));
    return r;
  }

  Mat evaluate_word(const std::string& word) const {
    Mat m = Mat::Identity(n(), n());
    for (char c : word) m = m * symmetric_generators[letter_index(c)];
    return m;
  }
};

/// |B(e,N)| in the free group on k generators.
inline long long free_ball_size(int k, int N) {
  long long total = 1;
  long long sphere = 2LL * k;
  for (int m = 1; m <= N; ++m) {
    total += sphere;
    sphere *= 2LL * k - 1;
  }
  return total;
}

inline long long free_sphere_size(int k, int m) {
  if (m == 0) return 1;
  long long s = 2LL * k;
  for (int i = 1; i < m; ++i) s *= 2LL * k - 1;
  return s;
}

}  // namespace lcone

#endif
