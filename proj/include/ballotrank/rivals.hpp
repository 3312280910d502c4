#pragma once

// Rival tabulation methods run against the same inputs: minimax, ranked
// pairs, Schulze, IRV, and convergence voting. Each returns a weak ranking
// plus a method-specific trace for reports.

#include <string>
#include <vector>

#include <json.hpp>

#include "ballotrank/solver.hpp"

namespace ballotrank {

struct MethodResult {
  std::string method;
  WeakRanking ranking;
  // Per-candidate diagnostic: worst defeat (minimax), locked-order group
  // index (ranked pairs), beatpath win count (schulze), elimination round
  // (irv), stationary score (cv).
  std::vector<double> scores;
  nlohmann::ordered_json trace;

  const std::vector<int>& winners() const { return ranking.groups.front(); }
};

// Candidates ordered by their worst pairwise defeat margin, ascending;
// undefeated candidates have a worst defeat of 0. Exact ties share a group.
MethodResult minimax(const MarginMatrix& m);

// Victories locked from the largest margin down, skipping any lock that
// would close a cycle; equal margins are processed in lexicographic
// (winner name, loser name) order, which the trace records. The ranking
// peels sources off the locked graph.
MethodResult ranked_pairs(const MarginMatrix& m);

// Widest-path (beatpath) comparison with margin strengths; candidates are
// ordered by their number of beatpath wins.
MethodResult schulze(const MarginMatrix& m);

// Instant runoff. Each round counts first preferences among the remaining
// candidates over non-exhausted ballots; a strict majority wins, otherwise
// everyone tied for fewest is eliminated. If that would eliminate the whole
// field, only the lexicographically largest name goes (recorded in the
// trace). Ballots whose listed candidates are all eliminated are exhausted.
MethodResult irv(const Profile& p);

// Raw-vote walk: both directed edges per pair are kept, weighted by the
// number of voters preferring the head, and each candidate keeps a self-loop
// of the first-place votes it retains: diag(b) = V*(n-1) - (votes cast
// against b across all pairings). Columns all sum to V*(n-1). Requires
// complete ballots. Runs undamped (d = 1) unless cfg says otherwise.
MethodResult convergence_voting(const Profile& p,
                                std::optional<DampingConfig> cfg = {});

// The pre-normalization walk weights behind convergence_voting, row-major:
// [a*n+b] = votes preferring a over b for a != b, retention weight on the
// diagonal. Exposed for characterization tests.
std::vector<long long> cv_adjacency(const Profile& p);

}  // namespace ballotrank
