#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "ballotrank/criteria.hpp"
#include "ballotrank/fixtures.hpp"
#include "ballotrank/margins.hpp"
#include "ballotrank/profile.hpp"
#include "ballotrank/solver.hpp"
#include "oracles.hpp"

using namespace ballotrank;

namespace {

DampingConfig with_damping(double d) {
  DampingConfig cfg;
  cfg.damping = d;
  return cfg;
}

ScoreVector make_scores(std::vector<double> v) {
  ScoreVector s;
  s.scores = std::move(v);
  return s;
}

// Exact-rational stationary cross-check, columns from the library's own
// exact normalization but solved along an independent route.
std::vector<double> oracle_stationary(const MarginMatrix& prepared,
                                      Variant kind) {
  std::vector<Rational> l = normalize_exact(prepared, kind);
  const int n = prepared.n();
  std::vector<std::vector<oracles::BigRat>> cols(
      n, std::vector<oracles::BigRat>(n));
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) {
      const Rational& e = l[static_cast<size_t>(r) * n + c];
      cols[c][r] = oracles::BigRat(e.numerator(), e.denominator());
    }
  auto pi = oracles::exact_stationary(cols);
  REQUIRE(pi.has_value());
  std::vector<double> out;
  for (const auto& v : *pi) out.push_back(v.convert_to<double>());
  return out;
}

}  // namespace

TEST_CASE("toy profile at the default damping") {
  BallotRankResult r = ballotrank::ballotrank(fixtures::toy(), DampingConfig{});
  REQUIRE(r.scores.scores.size() == 4);
  CHECK(r.scores.scores[0] == doctest::Approx(0.846881).epsilon(5e-4));
  CHECK(r.scores.scores[1] == doctest::Approx(0.075614).epsilon(5e-4));
  CHECK(r.scores.scores[2] == doctest::Approx(0.037500).epsilon(5e-4));
  CHECK(r.scores.scores[3] == doctest::Approx(0.040004).epsilon(5e-4));
  CHECK(r.scores.converged);
  CHECK_FALSE(r.scores.cesaro_fallback);
  REQUIRE(r.scores.cross_check_l1.has_value());
  CHECK(*r.scores.cross_check_l1 < 1e-9);
  CHECK_FALSE(r.ranking.winner_only);
  CHECK(r.ranking.groups ==
        std::vector<std::vector<int>>{{0}, {1}, {3}, {2}});
  REQUIRE(r.condorcet.winner.has_value());
  CHECK(*r.condorcet.winner == 0);

  // Margin-matrix entry point produces the same result.
  BallotRankResult m =
      ballotrank::ballotrank(profile_to_margins(fixtures::toy()), DampingConfig{});
  CHECK(m.scores.scores == r.scores.scores);
  CHECK(m.ranking.groups == r.ranking.groups);
}

TEST_CASE("undamped walk with an undefeated candidate") {
  BallotRankResult r = ballotrank::ballotrank(fixtures::toy(), with_damping(1.0));
  CHECK(r.scores.scores[0] == doctest::Approx(1.0).epsilon(1e-9));
  for (int c = 1; c < 4; ++c) CHECK(r.scores.scores[c] < 1e-9);
  CHECK(r.scores.converged);
  CHECK_FALSE(r.scores.cross_check_l1.has_value());
  CHECK(r.ranking.winner_only);
  REQUIRE(r.ranking.groups.size() == 2);
  CHECK(r.ranking.groups[0] == std::vector<int>{0});
  CHECK(r.ranking.groups[1] == std::vector<int>{1, 2, 3});
}

TEST_CASE("undamped walk on a cycle matches the exact stationary") {
  MarginMatrix prepared = apply_self_loops(fixtures::oakland());
  BallotRankResult r = ballotrank::ballotrank(fixtures::oakland(), with_damping(1.0));
  std::vector<double> pi = oracle_stationary(prepared, Variant::self_loops);
  REQUIRE(pi.size() == 3);
  for (int c = 0; c < 3; ++c)
    CHECK(r.scores.scores[c] == doctest::Approx(pi[c]).epsilon(1e-8));
  // The cycle keeps the race close; the most-beaten candidate still leads.
  CHECK(r.scores.scores[0] == doctest::Approx(0.3347).epsilon(1e-3));
  CHECK(r.scores.scores[1] == doctest::Approx(0.3330).epsilon(1e-3));
  CHECK(r.scores.scores[2] == doctest::Approx(0.3323).epsilon(1e-3));
  CHECK(r.scores.converged);
  CHECK_FALSE(r.ranking.winner_only);
  double sum = 0;
  for (double v : r.scores.scores) sum += v;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("power method agrees with the direct solve") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Profile p = random_profile(seed, 2 + static_cast<int>(seed % 5),
                               5 + 2 * (seed % 12));
    for (double d : {0.3, 0.85, 0.99}) {
      BallotRankResult r = ballotrank::ballotrank(p, with_damping(d));
      REQUIRE(r.scores.cross_check_l1.has_value());
      CHECK(*r.scores.cross_check_l1 < 1e-9);
    }
  }
}

TEST_CASE("direct solve reports zero iterations") {
  TransitionMatrix t =
      normalize(apply_self_loops(profile_to_margins(fixtures::toy())),
                Variant::self_loops);
  ScoreVector s = direct_solve(t, DampingConfig{});
  CHECK(s.iterations == 0);
  CHECK(s.converged);
  CHECK_THROWS_AS(direct_solve(t, with_damping(1.0)), std::invalid_argument);
}

TEST_CASE("periodic chain falls back to the trailing average") {
  // 1 <-> 0 two-cycle plus a transient third state feeding 0.
  TransitionMatrix t;
  t.names = {"p", "q", "r"};
  t.entries.assign(9, 0.0);
  t.at(1, 0) = 1.0;
  t.at(0, 1) = 1.0;
  t.at(0, 2) = 1.0;
  ScoreVector s = power_method(t, with_damping(1.0));
  CHECK_FALSE(s.converged);
  CHECK(s.cesaro_fallback);
  CHECK(s.scores[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.scores[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.scores[2] == doctest::Approx(0.0).epsilon(1e-12));
  // The stall is detected long before the iteration budget runs out.
  CHECK(s.iterations < 3000);

  SUBCASE("any amount of teleport restores convergence") {
    ScoreVector damped = power_method(t, with_damping(0.999));
    CHECK(damped.converged);
    CHECK_FALSE(damped.cesaro_fallback);
  }
}

TEST_CASE("input validation") {
  TransitionMatrix t =
      normalize(apply_self_loops(profile_to_margins(fixtures::toy())),
                Variant::self_loops);

  SUBCASE("config ranges") {
    CHECK_THROWS_AS(power_method(t, with_damping(-0.1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(power_method(t, with_damping(1.5)), std::invalid_argument);
    DampingConfig bad_tol;
    bad_tol.tolerance = 0;
    CHECK_THROWS_AS(power_method(t, bad_tol), std::invalid_argument);
    DampingConfig bad_iter;
    bad_iter.max_iterations = 0;
    CHECK_THROWS_AS(power_method(t, bad_iter), std::invalid_argument);
  }

  SUBCASE("non-stochastic matrices are rejected") {
    TransitionMatrix broken = t;
    broken.at(0, 1) += 0.5;
    CHECK_THROWS_AS(power_method(broken, DampingConfig{}),
                    std::invalid_argument);
    TransitionMatrix negative = t;
    negative.at(0, 1) = -negative.at(0, 1);
    CHECK_THROWS_AS(power_method(negative, DampingConfig{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(power_method(TransitionMatrix{}, DampingConfig{}),
                    std::invalid_argument);
  }

  SUBCASE("pipeline wants raw margins") {
    MarginMatrix prepared =
        apply_self_loops(profile_to_margins(fixtures::toy()));
    CHECK_THROWS_AS(ballotrank::ballotrank(prepared, DampingConfig{}),
                    std::invalid_argument);
  }
}

TEST_CASE("degenerate all-tied profile scores uniformly") {
  std::istringstream in("candidates: a, b\n1: a > b\n1: b > a\n");
  Profile p = parse_ballot_file(in);
  BallotRankResult r = ballotrank::ballotrank(p, DampingConfig{});
  CHECK(r.scores.scores[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.scores.scores[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.transition.at(0, 0) == 1.0);  // zero column becomes a self-loop
  CHECK(r.transition.at(1, 1) == 1.0);
  CHECK(r.ranking.groups == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("ranking extraction") {
  SUBCASE("descending groups, ids ascend inside a tie") {
    WeakRanking r = extract_ranking(make_scores({0.2, 0.3, 0.2, 0.3}), 0.0);
    CHECK(r.groups == std::vector<std::vector<int>>{{1, 3}, {0, 2}});
    CHECK_FALSE(r.winner_only);
  }

  SUBCASE("epsilon merges near ties") {
    WeakRanking r =
        extract_ranking(make_scores({0.5, 0.4999999999, 0.3}), 1e-9);
    CHECK(r.groups == std::vector<std::vector<int>>{{0, 1}, {2}});
  }

  SUBCASE("merging is chained through adjacent gaps") {
    WeakRanking r = extract_ranking(
        make_scores({0.5, 0.5 - 0.8e-9, 0.5 - 1.6e-9, 0.3}), 1e-9);
    // The extremes differ by more than epsilon, yet every adjacent step is
    // within it, so all three land in one group.
    CHECK(r.groups == std::vector<std::vector<int>>{{0, 1, 2}, {3}});
  }

  SUBCASE("winner-only collapse") {
    WeakRanking r = extract_ranking(make_scores({0.1, 0.2, 0.7}), 1e-9, 2);
    CHECK(r.winner_only);
    REQUIRE(r.groups.size() == 2);
    CHECK(r.groups[0] == std::vector<int>{2});
    CHECK(r.groups[1] == std::vector<int>{0, 1});
  }

  SUBCASE("negative epsilon is rejected") {
    CHECK_THROWS_AS(extract_ranking(make_scores({1.0}), -1e-3),
                    std::invalid_argument);
  }
}

TEST_CASE("damping sweep") {
  MarginMatrix m = profile_to_margins(fixtures::toy());

  SUBCASE("teleport row, winner flip flag, grid checks") {
    auto rows = damping_sweep(m, {0.0, 0.5, 0.85});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].scores.scores ==
          std::vector<double>{0.25, 0.25, 0.25, 0.25});
    CHECK(rows[0].scores.iterations == 0);
    CHECK(rows[0].winners == std::vector<int>{0, 1, 2, 3});
    CHECK_FALSE(rows[0].winner_changed);
    CHECK(rows[1].winners == std::vector<int>{0});
    CHECK(rows[1].winner_changed);
    CHECK(rows[2].winners == std::vector<int>{0});
    CHECK_FALSE(rows[2].winner_changed);
  }

  SUBCASE("profile overload matches the margin overload") {
    auto a = damping_sweep(fixtures::toy(), {0.25, 0.75});
    auto b = damping_sweep(m, {0.25, 0.75});
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
      CHECK(a[i].scores.scores == b[i].scores.scores);
  }

  SUBCASE("grid validation") {
    CHECK_THROWS_AS(damping_sweep(m, {0.5, 0.3}), std::invalid_argument);
    CHECK_THROWS_AS(damping_sweep(m, {0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(damping_sweep(m, {-0.1}), std::invalid_argument);
    CHECK_THROWS_AS(damping_sweep(m, {1.25}), std::invalid_argument);
    CHECK_THROWS_AS(damping_sweep(apply_self_loops(m), {0.5}),
                    std::invalid_argument);
  }

  SUBCASE("csv rendering") {
    auto rows = damping_sweep(m, {0.0});
    std::string csv = sweep_to_csv(rows, m.names);
    CHECK(csv ==
          "d,a,b,c,d,winner,converged,iterations,winner_changed\n"
          "0,0.25,0.25,0.25,0.25,a|b|c|d,true,0,false\n");
  }
}
