#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "lcone/enumerate.hpp"
#include "lcone/marked_group.hpp"

using namespace lcone;

namespace {

MarkedGroup sl2_schottky(double t = 1.2) {
  Mat a(2, 2), r(2, 2);
  a << std::exp(t), 0, 0, std::exp(-t);
  const double c = std::cos(0.6), s = std::sin(0.6);
  r << c, -s, s, c;
  Mat b = r * a * r.inverse();
  return MarkedGroup(2, {a, b});
}

}  // namespace

TEST_CASE("free ball and sphere counting formulas") {
  REQUIRE(free_ball_size(2, 0) == 1);
  REQUIRE(free_ball_size(2, 3) == 53);  // 2*3^3 - 1
  for (int N = 0; N <= 6; ++N) REQUIRE(free_ball_size(2, N) == 2 * static_cast<long long>(std::pow(3, N)) - 1);
  for (int m = 1; m <= 5; ++m) REQUIRE(free_sphere_size(2, m) == 4 * static_cast<long long>(std::pow(3, m - 1)));
  REQUIRE(free_sphere_size(3, 2) == 30);
}

TEST_CASE("enumerated ball has exactly the reduced words") {
  const auto group = sl2_schottky();
  for (int N : {0, 1, 2, 3, 4}) {
    const auto ball = enumerate_ball(group, N);
    REQUIRE(static_cast<long long>(ball.records.size()) == free_ball_size(2, N));
    REQUIRE(ball.dropped == 0);
    std::set<std::string> words;
    std::vector<long long> sphere(N + 1, 0);
    for (const auto& rec : ball.records) {
      REQUIRE(rec.length == static_cast<int>(rec.word.size()));
      REQUIRE(words.insert(rec.word).second);  // unique
      ++sphere[rec.length];
      // reduced: no letter followed by its inverse
      for (size_t i = 0; i + 1 < rec.word.size(); ++i)
        REQUIRE(group.inverse_letter(group.letter_index(rec.word[i])) !=
                group.letter_index(rec.word[i + 1]));
    }
    for (int m = 0; m <= N; ++m) REQUIRE(sphere[m] == free_sphere_size(2, m));
  }
}

TEST_CASE("identity record") {
  const auto ball = enumerate_ball(sl2_schottky(), 0);
  REQUIRE(ball.records.size() == 1);
  REQUIRE(ball.records[0].word.empty());
  REQUIRE(ball.records[0].mu.norm() == 0.0);
}

TEST_CASE("mu of inverse word equals involution of mu") {
  const auto group = sl2_schottky();
  const auto ball = enumerate_ball(group, 5);
  for (const auto& rec : ball.records) {
    if (rec.length == 0) continue;
    const Mat inv = group.evaluate_word(group.inverse_word(rec.word));
    const Vec lhs = cartan_projection(inv, 1e-6);
    REQUIRE((lhs - opposition_involution(rec.mu)).norm() < 1e-8);
  }
}

TEST_CASE("scaled products agree with direct products on short words") {
  const auto group = sl2_schottky();
  const auto ball = enumerate_ball(group, 6);
  for (const auto& rec : ball.records) {
    if (rec.length == 0) continue;
    const Mat direct = group.evaluate_word(rec.word);
    if (direct.cwiseAbs().maxCoeff() > 1e100) continue;
    REQUIRE((cartan_projection(direct, 1e-4) - rec.mu).norm() < 1e-8);
  }
}

TEST_CASE("deterministic order, independent of worker count") {
  const auto group = sl2_schottky();
  BallOptions serial;
  BallOptions parallel;
  parallel.workers = 4;
  const auto b1 = enumerate_ball(group, 6, serial);
  const auto b2 = enumerate_ball(group, 6, serial);
  const auto b4 = enumerate_ball(group, 6, parallel);
  REQUIRE(b1.records.size() == b2.records.size());
  REQUIRE(b1.records.size() == b4.records.size());
  for (size_t i = 0; i < b1.records.size(); ++i) {
    REQUIRE(b1.records[i].word == b2.records[i].word);
    REQUIRE(b1.records[i].word == b4.records[i].word);
    REQUIRE((b1.records[i].mu - b4.records[i].mu).norm() == 0.0);
  }
}

TEST_CASE("budget is checked before enumeration starts") {
  BallOptions opts;
  opts.budget = 100;
  REQUIRE_THROWS_AS(enumerate_ball(sl2_schottky(), 8, opts), budget_exceeded_error);
  REQUIRE_THROWS_AS(enumerate_ball(sl2_schottky(), -1), invalid_input_error);
}

TEST_CASE("lambda records computed on demand") {
  BallOptions opts;
  opts.with_lambda = true;
  const auto ball = enumerate_ball(sl2_schottky(), 3, opts);
  for (const auto& rec : ball.records) {
    REQUIRE(rec.lambda.has_value());
    // |lambda| <= |mu| always
    REQUIRE(rec.lambda->norm() <= rec.mu.norm() + 1e-9);
  }
}
