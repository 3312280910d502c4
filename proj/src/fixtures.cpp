#include "ballotrank/fixtures.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace ballotrank::fixtures {

namespace {

// Byte-for-byte copies of the files under data/; test_cli checks the sync.
const std::string kToy = R"(# Twelve voters over four candidates; a beats everyone head-to-head.
candidates: a, b, c, d
1: a > b > c > d
7: a > b > d > c
4: b > a > c > d
)";

const std::string kIia2 = R"(# Companion to toy.bal: the a-vs-b ballots are unchanged relative to a
# profile where a wins, yet the overall outcome reorders a and b.
candidates: a, b, c, d
3: a > b > c > d
5: c > a > b > d
4: b > c > a > d
)";

const std::string kMono1 = R"(# Base profile of the raise-a pair; see mono2.bal.
candidates: a, b, c, d
2: b > a > d > c
2: c > b > a > d
2: d > b > c > a
2: d > c > a > b
1: a > c > d > b
1: b > a > c > d
1: c > a > d > b
1: d > c > b > a
)";

const std::string kMono2 = R"(# mono1.bal after two voters move a up one position:
# c>a>d>b becomes a>c>d>b, and one d>b>c>a becomes d>b>a>c.
candidates: a, b, c, d
2: b > a > d > c
2: c > b > a > d
1: d > b > c > a
2: d > c > a > b
1: a > c > d > b
1: b > a > c > d
1: a > c > d > b
1: d > c > b > a
1: d > b > a > c
)";

const std::string kLnh1 = R"(# Four voters, two of them with truncated ballots.
candidates: a, b, c
a > b > c
c > a > b
b > c
c > a
)";

const std::string kLnh2 = R"(# lnh1.bal with the last voter extending c > a to a full ranking.
candidates: a, b, c
a > b > c
c > a > b
b > c
c > a > b
)";

const std::string kNoshow1 = R"(# Nineteen voters; a beats both rivals head-to-head.
candidates: a, b, c
9: a > b > c
1: b > a > c
5: b > c > a
1: c > a > b
3: c > b > a
)";

const std::string kNoshow2 = R"(# noshow1.bal plus two extra c > a > b voters.
candidates: a, b, c
9: a > b > c
1: b > a > c
5: b > c > a
1: c > a > b
3: c > b > a
2: c > a > b
)";

const std::string kClone1 = R"(# Nineteen voters; companion of clone2.bal, which clones candidate a.
candidates: a, b, c, d
4: a > b > c > d
1: a > c > b > d
3: b > c > d > a
2: c > b > a > d
4: c > d > a > b
4: d > a > b > c
1: d > b > c > a
)";

const std::string kClone2 = R"(# clone1.bal with a cloned: a' sits directly above a on every ballot.
candidates: a, a', b, c, d
4: a' > a > b > c > d
1: a' > a > c > b > d
3: b > c > d > a' > a
2: c > b > a' > a > d
4: c > d > a' > a > b
4: d > a' > a > b > c
1: d > b > c > a' > a
)";

const std::string kOakland = R"(Hutchinson,Resnick,Manigo
0,299,0
0,0,557
46,0,0
)";

const std::string kMinneapolis = R"(Gordon,Arab,Worlobah,Gaskin,Anderson
0,0,73,4592,2192
225,0,0,5079,3239
0,15,0,4283,2017
0,0,0,0,0
0,0,0,2740,0
)";

const std::map<std::string, const std::string*>& registry() {
  static const std::map<std::string, const std::string*> m = {
      {"toy", &kToy},         {"iia2", &kIia2},
      {"mono1", &kMono1},     {"mono2", &kMono2},
      {"lnh1", &kLnh1},       {"lnh2", &kLnh2},
      {"noshow1", &kNoshow1}, {"noshow2", &kNoshow2},
      {"clone1", &kClone1},   {"clone2", &kClone2},
      {"oakland", &kOakland}, {"minneapolis", &kMinneapolis},
  };
  return m;
}

Profile profile_from(const std::string& raw) {
  std::istringstream in(raw);
  return parse_ballot_file(in);
}

MarginMatrix margins_from(const std::string& raw) {
  std::istringstream in(raw);
  return parse_margin_csv(in);
}

}  // namespace

Profile toy() { return profile_from(kToy); }
Profile iia2() { return profile_from(kIia2); }
Profile mono1() { return profile_from(kMono1); }
Profile mono2() { return profile_from(kMono2); }
Profile lnh1() { return profile_from(kLnh1); }
Profile lnh2() { return profile_from(kLnh2); }
Profile noshow1() { return profile_from(kNoshow1); }
Profile noshow2() { return profile_from(kNoshow2); }
Profile clone1() { return profile_from(kClone1); }
Profile clone2() { return profile_from(kClone2); }

MarginMatrix oakland() { return margins_from(kOakland); }
MarginMatrix minneapolis() { return margins_from(kMinneapolis); }

const std::string& text(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end())
    throw std::invalid_argument("unknown fixture: " + name);
  return *it->second;
}

}  // namespace ballotrank::fixtures
