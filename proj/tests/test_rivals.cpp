#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ballotrank/condorcet.hpp"
#include "ballotrank/criteria.hpp"
#include "ballotrank/fixtures.hpp"
#include "ballotrank/rivals.hpp"
#include "oracles.hpp"

using namespace ballotrank;

namespace {

Profile parse_str(const std::string& text) {
  std::istringstream in(text);
  return parse_ballot_file(in);
}

MarginMatrix margins_str(const std::string& text) {
  std::istringstream in(text);
  return parse_margin_csv(in);
}

// a beats b by 2, b beats c by 4, c beats a by 6.
MarginMatrix small_cycle() {
  return margins_str("a,b,c\n0,2,0\n0,0,4\n6,0,0\n");
}

std::vector<std::vector<int>> expand_ballots(const Profile& p) {
  std::vector<std::vector<int>> out;
  for (const auto& b : p.ballots)
    for (long long i = 0; i < b.multiplicity; ++i) out.push_back(b.ranking);
  return out;
}

std::vector<std::string> names_of(const Profile& p) {
  std::vector<std::string> out;
  for (const auto& c : p.candidates) out.push_back(c.name);
  return out;
}

}  // namespace

TEST_CASE("minimax on a three-candidate cycle") {
  MethodResult r = minimax(small_cycle());
  CHECK(r.method == "minimax");
  CHECK(r.scores == std::vector<double>{6, 2, 4});
  CHECK(r.ranking.groups == std::vector<std::vector<int>>{{1}, {2}, {0}});
  CHECK(r.winners() == std::vector<int>{1});
  CHECK(r.trace["worst_defeats"][0]["against"] == "c");
  CHECK(r.trace["worst_defeats"][0]["worst_defeat"] == 6);

  SUBCASE("undefeated candidates carry a zero worst defeat") {
    MethodResult toy = minimax(profile_to_margins(fixtures::toy()));
    CHECK(toy.scores[0] == 0);
    CHECK(toy.trace["worst_defeats"][0]["against"].is_null());
    CHECK(toy.winners() == std::vector<int>{0});
  }
}

TEST_CASE("ranked pairs on a three-candidate cycle") {
  MethodResult r = ranked_pairs(small_cycle());
  CHECK(r.ranking.groups == std::vector<std::vector<int>>{{1}, {2}, {0}});
  CHECK(r.scores == std::vector<double>{2, 0, 1});  // locked-order levels
  const auto& pairs = r.trace["pairs"];
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0]["winner"] == "c");
  CHECK(pairs[0]["margin"] == 6);
  CHECK(pairs[0]["locked"] == true);
  CHECK(pairs[1]["winner"] == "b");
  CHECK(pairs[1]["locked"] == true);
  // The weakest victory would close the cycle and is skipped.
  CHECK(pairs[2]["winner"] == "a");
  CHECK(pairs[2]["locked"] == false);
}

TEST_CASE("ranked pairs breaks equal margins by winner then loser name") {
  // Two margin-4 victories; (a,b) must be processed before (b,c).
  MethodResult r = ranked_pairs(margins_str("a,b,c\n0,4,0\n0,0,4\n2,0,0\n"));
  const auto& pairs = r.trace["pairs"];
  CHECK(pairs[0]["winner"] == "a");
  CHECK(pairs[0]["loser"] == "b");
  CHECK(pairs[1]["winner"] == "b");
  CHECK(pairs[2]["locked"] == false);
  CHECK(r.ranking.groups == std::vector<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("schulze on a three-candidate cycle") {
  MethodResult r = schulze(small_cycle());
  CHECK(r.ranking.groups == std::vector<std::vector<int>>{{1}, {2}, {0}});
  CHECK(r.scores == std::vector<double>{0, 2, 1});  // beatpath wins
  // Widest path from b back to a runs through c at strength 4.
  CHECK(r.trace["strengths"][1][0] == 4);
  CHECK(r.trace["strengths"][0][1] == 2);
}

TEST_CASE("rival methods on the recorded elections") {
  SUBCASE("three-candidate mayoral cycle") {
    MarginMatrix m = fixtures::oakland();
    CHECK(minimax(m).winners() == std::vector<int>{0});
    CHECK(ranked_pairs(m).winners() == std::vector<int>{0});
    CHECK(schulze(m).winners() == std::vector<int>{0});
  }

  SUBCASE("five-candidate ward margins") {
    // All three margin methods agree on Arab here; the tightest worst
    // defeat (15 votes) belongs to Arab and the 15-vote defeat is the one
    // skipped when locking pairs.
    MarginMatrix m = fixtures::minneapolis();
    CHECK(minimax(m).winners() == std::vector<int>{1});
    CHECK(ranked_pairs(m).winners() == std::vector<int>{1});
    CHECK(schulze(m).winners() == std::vector<int>{1});
    MethodResult rp = ranked_pairs(m);
    const auto& last = rp.trace["pairs"][rp.trace["pairs"].size() - 1];
    CHECK(last["margin"] == 15);
    CHECK(last["locked"] == false);
  }
}

TEST_CASE("margin methods pick a pairwise-undefeated candidate") {
  int with_winner = 0;
  for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
    Profile p = random_profile(seed, 3 + static_cast<int>(seed % 4),
                               3 + 2 * (seed % 15));
    MarginMatrix m = profile_to_margins(p);
    CondorcetReport c = analyze(m);
    if (!c.winner) continue;
    ++with_winner;
    CHECK(minimax(m).winners() == std::vector<int>{*c.winner});
    CHECK(ranked_pairs(m).winners() == std::vector<int>{*c.winner});
    CHECK(schulze(m).winners() == std::vector<int>{*c.winner});
  }
  CHECK(with_winner > 50);
}

TEST_CASE("instant runoff") {
  SUBCASE("first-round majority") {
    MethodResult r = irv(fixtures::toy());
    CHECK(r.trace["winner"] == "a");
    CHECK(r.ranking.groups ==
          std::vector<std::vector<int>>{{0}, {1}, {2, 3}});
    REQUIRE(r.trace["rounds"].size() == 1);
    CHECK(r.trace["rounds"][0]["counts"] ==
          nlohmann::ordered_json::array({8, 4, 0, 0}));
    CHECK(r.trace["rounds"][0]["eliminated"].empty());
  }

  SUBCASE("tied elimination and ballot exhaustion") {
    MethodResult r = irv(parse_str("candidates: a, b, c\n2: a\n1: b > c\n1: c\n"));
    CHECK(r.trace["winner"] == "a");
    REQUIRE(r.trace["rounds"].size() == 2);
    CHECK(r.trace["rounds"][0]["eliminated"] ==
          nlohmann::ordered_json::array({"b", "c"}));
    CHECK(r.trace["rounds"][1]["exhausted"] == 2);
    CHECK(r.ranking.groups == std::vector<std::vector<int>>{{0}, {1, 2}});
  }

  SUBCASE("a full tie drops only the lexicographically largest name") {
    MethodResult r = irv(parse_str("candidates: a, b\n1: a > b\n1: b > a\n"));
    CHECK(r.trace["rounds"][0]["lexicographic"] == true);
    CHECK(r.trace["rounds"][0]["eliminated"] ==
          nlohmann::ordered_json::array({"b"}));
    CHECK(r.trace["winner"] == "a");
  }

  SUBCASE("agreement with the reference implementation") {
    for (std::uint64_t seed = 400; seed < 800; ++seed) {
      Profile p = random_profile(seed, 2 + static_cast<int>(seed % 5),
                                 2 + (seed % 24));
      if (seed % 3 == 0 && p.num_candidates() > 2) {
        // Shorten one ballot so exhaustion paths get exercised as well.
        p = truncate_ballot(p, static_cast<int>(seed % p.ballots.size()), 1);
      }
      oracles::IrvOutcome ref =
          oracles::brute_force_irv(expand_ballots(p), names_of(p));
      MethodResult r = irv(p);
      CHECK(r.winners() == std::vector<int>{ref.winner});
      REQUIRE(r.trace["rounds"].size() == ref.rounds.size());
      for (size_t i = 0; i < ref.rounds.size(); ++i) {
        CHECK(r.trace["rounds"][i]["exhausted"] == ref.rounds[i].exhausted);
        CHECK(r.trace["rounds"][i]["counts"] ==
              nlohmann::ordered_json(ref.rounds[i].counts));
        CHECK(r.trace["rounds"][i]["lexicographic"] ==
              ref.rounds[i].lexicographic);
      }
    }
  }
}

TEST_CASE("convergence voting") {
  SUBCASE("adjacency keeps both directions plus retained first places") {
    std::vector<long long> adj = cv_adjacency(fixtures::toy());
    const std::vector<long long> expect = {32, 8, 12, 12, 4, 28, 12, 12,
                                           0,  0, 5,  5,  0, 0,  7,  7};
    CHECK(adj == expect);
    // Every column spends the full per-voter budget.
    for (int b = 0; b < 4; ++b) {
      long long col = 0;
      for (int a = 0; a < 4; ++a) col += adj[static_cast<size_t>(a) * 4 + b];
      CHECK(col == 36);
    }
  }

  SUBCASE("undamped stationary point on the toy profile") {
    MethodResult r = convergence_voting(fixtures::toy());
    CHECK(r.method == "cv");
    CHECK(r.trace["damping"] == 1.0);
    CHECK(r.trace["column_sum"] == 36);
    CHECK(r.trace["converged"] == true);
    CHECK(r.scores[0] == doctest::Approx(2.0 / 3).epsilon(1e-9));
    CHECK(r.scores[1] == doctest::Approx(1.0 / 3).epsilon(1e-9));
    CHECK(r.scores[2] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r.scores[3] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r.winners() == std::vector<int>{0});
  }

  SUBCASE("two candidates split by vote share") {
    Profile p = parse_str("candidates: x, y\n100: x > y\n25: y > x\n");
    MethodResult r = convergence_voting(p);
    CHECK(r.scores[0] == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(r.scores[1] == doctest::Approx(0.2).epsilon(1e-12));
  }

  SUBCASE("an explicit config overrides the undamped default") {
    DampingConfig cfg;
    cfg.damping = 0.5;
    MethodResult r = convergence_voting(fixtures::toy(), cfg);
    CHECK(r.trace["damping"] == 0.5);
    // Teleport pulls everyone off the extremes.
    CHECK(r.scores[2] > 0.05);
    CHECK(r.winners() == std::vector<int>{0});
  }

  SUBCASE("incomplete ballots are rejected") {
    Profile p = parse_str("candidates: a, b, c\n1: a > b\n1: b > a > c\n");
    CHECK_THROWS_AS(convergence_voting(p), std::invalid_argument);
    CHECK_THROWS_AS(cv_adjacency(p), std::invalid_argument);
  }

  SUBCASE("single candidate has no budget to spend") {
    Profile p = parse_str("candidates: solo\n4: solo\n");
    MethodResult r = convergence_voting(p);
    CHECK(r.scores == std::vector<double>{1.0});
    CHECK(r.trace["column_sum"] == 0);
  }
}
