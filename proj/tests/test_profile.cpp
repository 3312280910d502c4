#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "ballotrank/profile.hpp"

using namespace ballotrank;

namespace {

std::string data_path(const std::string& name) {
  return std::string(BALLOTRANK_DATA_DIR) + "/" + name;
}

Profile parse_str(const std::string& text) {
  std::istringstream in(text);
  return parse_ballot_file(in);
}

MarginMatrix parse_csv_str(const std::string& text) {
  std::istringstream in(text);
  return parse_margin_csv(in);
}

}  // namespace

TEST_CASE("ballot file parsing") {
  SUBCASE("reference four-candidate profile") {
    Profile p = parse_ballot_file(data_path("toy.bal"));
    REQUIRE(p.num_candidates() == 4);
    CHECK(p.name_of(0) == "a");
    CHECK(p.name_of(3) == "d");
    CHECK(p.id_of("c") == 2);
    CHECK(p.id_of("zz") == -1);
    REQUIRE(p.ballots.size() == 3);
    CHECK(p.ballots[0].multiplicity == 1);
    CHECK(p.ballots[1].multiplicity == 7);
    CHECK(p.ballots[2].multiplicity == 4);
    CHECK(p.ballots[1].ranking == std::vector<int>{0, 1, 3, 2});
    CHECK(p.num_voters() == 12);
    CHECK(p.complete());
  }

  SUBCASE("multiplicity defaults to one and partial ballots are kept") {
    Profile p = parse_str("candidates: x, y, z\nx > y\n3: z\n");
    CHECK(p.ballots[0].multiplicity == 1);
    CHECK(p.ballots[0].ranking == std::vector<int>{0, 1});
    CHECK(p.ballots[1].ranking == std::vector<int>{2});
    CHECK(p.num_voters() == 4);
    CHECK_FALSE(p.complete());
  }

  SUBCASE("comments and blank lines still advance the line counter") {
    Profile p = parse_str("# header comment\n\ncandidates: a, b\n# mid\na > b\n");
    CHECK(p.num_voters() == 1);
    CHECK_THROWS_WITH_AS(
        parse_str("# one\n\ncandidates: a, b\nq > a\n"),
        "line 4: unknown candidate 'q'", ParseError);
  }

  SUBCASE("whitespace around names and counts is ignored") {
    Profile p = parse_str("candidates:  a ,b \n  2 :  b>a \n");
    CHECK(p.name_of(1) == "b");
    CHECK(p.ballots[0].multiplicity == 2);
    CHECK(p.ballots[0].ranking == std::vector<int>{1, 0});
  }
}

TEST_CASE("ballot file errors carry 1-based line numbers") {
  CHECK_THROWS_WITH_AS(parse_str("a > b\n"),
                       "line 1: expected 'candidates: ...' header",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_str("# only a comment\n"),
                       "line 1: no 'candidates:' header found", ParseError);
  CHECK_THROWS_WITH_AS(parse_str("candidates: a, b, a\n"),
                       "line 1: duplicate candidate 'a'", ParseError);
  CHECK_THROWS_WITH_AS(parse_str("candidates: a,,b\n"),
                       "line 1: empty candidate name", ParseError);
  CHECK_THROWS_WITH_AS(
      parse_str("candidates: a>b\n"),
      "line 1: candidate name 'a>b' contains a separator character",
      ParseError);
  CHECK_THROWS_WITH_AS(parse_str("candidates: a, b\nc > a\n"),
                       "line 2: unknown candidate 'c'", ParseError);
  CHECK_THROWS_WITH_AS(parse_str("candidates: a, b\na > b > a\n"),
                       "line 2: candidate 'a' listed twice on a ballot",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_str("candidates: a, b\na > > b\n"),
                       "line 2: empty entry in ranking", ParseError);
  CHECK_THROWS_WITH_AS(parse_str("candidates: a, b\n0: a > b\n"),
                       "line 2: ballot multiplicity must be positive",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_str("candidates: a, b\nx2: a > b\n"),
                       "line 2: malformed ballot multiplicity 'x2'",
                       ParseError);

  try {
    parse_str("candidates: a, b\n\nb > q\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("serialize_profile round trip") {
  Profile p = parse_ballot_file(data_path("toy.bal"));
  Profile q = parse_str(serialize_profile(p));
  REQUIRE(q.num_candidates() == p.num_candidates());
  for (int i = 0; i < p.num_candidates(); ++i)
    CHECK(q.name_of(i) == p.name_of(i));
  REQUIRE(q.ballots.size() == p.ballots.size());
  for (size_t i = 0; i < p.ballots.size(); ++i) {
    CHECK(q.ballots[i].multiplicity == p.ballots[i].multiplicity);
    CHECK(q.ballots[i].ranking == p.ballots[i].ranking);
  }

  // Partial ballots survive the trip too.
  Profile r = parse_str("candidates: x, y, z\nx > z\n5: y\n");
  Profile s = parse_str(serialize_profile(r));
  CHECK(s.ballots[0].ranking == std::vector<int>{0, 2});
  CHECK(s.ballots[1].multiplicity == 5);
  CHECK_FALSE(s.complete());
}

TEST_CASE("pairwise wins and margins") {
  Profile p = parse_ballot_file(data_path("toy.bal"));
  const int n = p.num_candidates();
  auto wins = pairwise_wins(p);
  auto w = [&](int a, int b) { return wins[static_cast<size_t>(a) * n + b]; };
  CHECK(w(0, 1) == 8);   // a over b on the two a-first blocks
  CHECK(w(1, 0) == 4);
  CHECK(w(0, 2) == 12);
  CHECK(w(2, 0) == 0);
  CHECK(w(2, 3) == 5);   // c over d only where c precedes d
  CHECK(w(3, 2) == 7);

  SUBCASE("unlisted candidates are not compared") {
    Profile q = parse_str("candidates: x, y\n3: x\n2: y > x\n");
    auto qw = pairwise_wins(q);
    CHECK(qw[0 * 2 + 1] == 0);  // the x-only ballots say nothing about y
    CHECK(qw[1 * 2 + 0] == 2);
  }

  SUBCASE("net margins keep only the winning direction") {
    MarginMatrix m = profile_to_margins(p);
    const Rational expect[4][4] = {{0, 4, 12, 12},
                                   {0, 0, 12, 12},
                                   {0, 0, 0, 0},
                                   {0, 0, 2, 0}};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) CHECK(m.at(a, b) == expect[a][b]);
    CHECK_FALSE(m.has_diagonal);
    CHECK_FALSE(m.degenerate);
  }

  SUBCASE("empty profile is rejected") {
    CHECK_THROWS_AS(profile_to_margins(Profile{}), std::invalid_argument);
  }
}

TEST_CASE("margin CSV parsing") {
  MarginMatrix m = parse_margin_csv(data_path("oakland.csv"));
  REQUIRE(m.n() == 3);
  CHECK(m.names == std::vector<std::string>{"Hutchinson", "Resnick", "Manigo"});
  CHECK(m.at(0, 1) == 299);
  CHECK(m.at(1, 2) == 557);
  CHECK(m.at(2, 0) == 46);
  CHECK(m.at(1, 0) == 0);

  SUBCASE("to_csv round trip") {
    MarginMatrix r = parse_csv_str(to_csv(m));
    CHECK(r.names == m.names);
    CHECK(r.entries == m.entries);
  }

  SUBCASE("malformed inputs") {
    CHECK_THROWS_WITH_AS(parse_csv_str(""), "line 1: empty margin file",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_csv_str("a,b\n0,1\n"),
                         "line 2: expected 2 data rows, found 1", ParseError);
    CHECK_THROWS_WITH_AS(parse_csv_str("a,b\n0,1,0\n0,0\n"),
                         "line 2: expected 2 cells, found 3", ParseError);
    CHECK_THROWS_WITH_AS(parse_csv_str("a,b\n3,1\n0,0\n"),
                         "line 2: nonzero diagonal margin for 'a'", ParseError);
    CHECK_THROWS_WITH_AS(
        parse_csv_str("a,b\n0,1\n2,0\n"),
        "line 3: margins a/b are positive in both directions", ParseError);
    CHECK_THROWS_WITH_AS(parse_csv_str("a,a\n0,0\n0,0\n"),
                         "line 1: duplicate candidate 'a'", ParseError);
    CHECK_THROWS_AS(parse_csv_str("a,b\n0,x\n0,0\n"), ParseError);
  }

  SUBCASE("missing file") {
    CHECK_THROWS_AS(parse_margin_csv(data_path("nope.csv")),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_ballot_file(data_path("nope.bal")),
                    std::runtime_error);
  }
}

TEST_CASE("rational helpers") {
  CHECK(to_double(Rational(1, 4)) == 0.25);
  CHECK(to_double(Rational(0)) == 0.0);
  MarginMatrix z = MarginMatrix::zero({"p", "q"});
  CHECK(z.n() == 2);
  CHECK(z.at(0, 1) == 0);
}
