#pragma once

// Social-choice criteria: randomized positive checks for the properties the
// scorer satisfies, and replayed fixture pairs for the ones it (knowingly)
// fails. Profile surgery helpers live here too, since both the checkers and
// the fixture pairs are defined in terms of them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ballotrank/solver.hpp"

namespace ballotrank {

enum class Criterion {
  // Positive, sampled:
  anonymity,
  neutrality,
  majority,         // d = 1 claim
  condorcet_loser,
  pareto,
  smith,            // d = 1 claim
  // Failures, replayed from fixtures:
  iia,
  monotonicity,
  later_no_harm,
  no_show,
  cloning,
};

const char* criterion_name(Criterion c);

enum class Verdict {
  holds_on_sample,
  counterexample_found,
  fixture_reproduced,
  fixture_mismatch,
};

const char* verdict_name(Verdict v);

struct CriterionOutcome {
  Criterion criterion;
  Verdict verdict;
  long long trials = 0;
  long long violations = 0;
  bool report_only = false;  // d-value outside the criterion's claim
  std::string witness;       // serialized offending profile(s), when any
  std::string detail;
};

struct PositiveCheckConfig {
  DampingConfig damping;  // majority/smith score claims hold at d = 1
  Variant variant = Variant::self_loops;
  long long trials = 300;
  std::uint64_t seed = 1;
};

// Runs `trials` seeded random profiles (trials run concurrently; the
// lowest-index violation is reported). majority and smith assert only at
// d = 1; at other d they count violations in report-only mode.
CriterionOutcome check_positive(Criterion c, const PositiveCheckConfig& cfg);

// Replays the named fixture pair for a failing criterion and checks the
// pinned scores/ranking flips. Any drift reports fixture_mismatch.
CriterionOutcome replay_counterexample(Criterion c);

// Impartial culture: iid uniform random strict orders, unit multiplicities.
// Identical (seed, shape) arguments reproduce the profile exactly, on any
// platform.
Profile random_profile(std::uint64_t seed, int num_candidates,
                       long long num_voters);

// Profile surgery. Each function returns a modified copy.
Profile permute_voters(const Profile& p, const std::vector<int>& order);
Profile swap_candidates(const Profile& p, int a, int b);
// Moves candidate c up one slot on one unit of ballot `index` (multiplicity
// is split off if needed; the modified unit ballot is appended).
Profile raise_candidate(const Profile& p, int index, int c);
Profile truncate_ballot(const Profile& p, int index, int keep);
Profile extend_ballot(const Profile& p, int index,
                      const std::vector<int>& tail);
Profile add_ballots(const Profile& p, const std::vector<Ballot>& extra);
// Inserts a new candidate directly above `target` on every ballot ranking
// it, and directly after it in the declaration order.
Profile clone_candidate(const Profile& p, int target,
                        const std::string& clone_name);

struct ProfileTransform {
  enum class Kind {
    permute_voters,
    swap_candidates,
    raise_candidate,
    truncate_extend,
    add_ballots,
    clone_candidate,
  };
  Kind kind;
  std::vector<int> candidates;   // ids; meaning depends on kind
  std::vector<int> positions;    // ballot indices / keep counts
  std::vector<Ballot> ballots;   // extensions or additions
  std::string name;              // clone name
  std::uint64_t seed = 0;        // voter permutation seed

  Profile apply(const Profile& p) const;
};

}  // namespace ballotrank
