#pragma once

// Pairwise-majority analysis of a margin matrix: winner, loser, Smith set,
// cycle detection, and a connectivity diagnostic.

#include <optional>
#include <vector>

#include "ballotrank/profile.hpp"

namespace ballotrank {

struct CondorcetReport {
  std::optional<int> winner;   // beats every other candidate
  std::optional<int> loser;    // beaten by every other candidate
  std::vector<int> smith_set;  // ascending ids
  bool has_cycle = false;      // the beat relation contains a directed cycle
  // Weak connectivity of the graph of decided contests. A disconnected graph
  // is tabulated normally; the flag surfaces in diagnostics so downstream
  // consumers know components never exchange walk mass at d = 1.
  bool connected = true;
};

// Ignores the diagonal, so both raw and self-looped matrices are accepted.
//
// The Smith set is the smallest nonempty set whose members beat every
// outsider; with pairwise ties it is grown under the "does not lose to"
// relation, so tied candidates on the boundary are pulled in.
CondorcetReport analyze(const MarginMatrix& m);

}  // namespace ballotrank
