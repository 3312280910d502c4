#pragma once

// The damped random-walk scorer: power iteration (canonical path), a dense
// linear solve used as a cross-check for d < 1, ranking extraction, the
// end-to-end pipeline, and damping sweeps.

#include <optional>
#include <string>
#include <vector>

#include "ballotrank/condorcet.hpp"
#include "ballotrank/margins.hpp"

namespace ballotrank {

struct DampingConfig {
  double damping = 0.85;               // d in [0, 1]
  double tolerance = 1e-12;            // L1 change stopping threshold
  long long max_iterations = 1000000;
  double tie_epsilon = 1e-9;           // ranking extraction tie width
};

struct ScoreVector {
  std::vector<double> scores;  // one per candidate, sums to 1
  long long iterations = 0;
  bool converged = true;
  double residual = 0.0;        // final L1 change / fixed-point residual
  bool cesaro_fallback = false; // periodic chain: trailing average returned
  // L1 distance between the power and direct solutions; set by the
  // ballotrank() pipeline when d < 1.
  std::optional<double> cross_check_l1;
};

struct WeakRanking {
  std::vector<std::vector<int>> groups;  // best first; ids ascend in a group
  double epsilon = 0.0;
  // Set when scores collapsed to the d = 1 indicator of a pairwise-undefeated
  // candidate: only groups[0] carries information, the rest are unranked.
  bool winner_only = false;
};

// y = t * x with a fixed, ascending-index inner summation order. The parallel
// kernel splits rows across threads; every element is produced by the same
// arithmetic in the same order, so the two variants agree bit for bit.
void matvec_serial(const TransitionMatrix& t, const std::vector<double>& x,
                   std::vector<double>& y);
void matvec_parallel(const TransitionMatrix& t, const std::vector<double>& x,
                     std::vector<double>& y);

// Iterates x <- (1-d)/n + d*t*x from the uniform vector until the L1 change
// drops below cfg.tolerance or cfg.max_iterations is hit. At d = 1 a
// periodic chain shows up as an L1 change that stops shrinking; after 1000
// stalled iterations the trailing 64 iterates are averaged (Cesaro fallback)
// and the result is flagged converged = false.
ScoreVector power_method(const TransitionMatrix& t, const DampingConfig& cfg);

// Solves (I - d*t) x = (1-d)/n * 1 directly; requires d < 1 (the system is
// strictly column diagonally dominant, hence nonsingular).
ScoreVector direct_solve(const TransitionMatrix& t, const DampingConfig& cfg);

// Groups candidates into descending tie groups, merging neighbours whose
// scores differ by at most epsilon. When unit_damping_winner is set the
// ranking is the winner-only collapse described on WeakRanking.
WeakRanking extract_ranking(const ScoreVector& s, double epsilon,
                            std::optional<int> unit_damping_winner = {});

struct BallotRankResult {
  ScoreVector scores;
  WeakRanking ranking;
  TransitionMatrix transition;
  CondorcetReport condorcet;
};

// Full pipeline: margins -> (self-loops) -> normalize -> power iteration,
// plus the direct-solve cross-check at d < 1 and Condorcet-aware ranking
// extraction at d = 1. The margin overload expects raw margins (no diagonal).
BallotRankResult ballotrank(const Profile& p, const DampingConfig& cfg,
                            Variant variant = Variant::self_loops);
BallotRankResult ballotrank(const MarginMatrix& m, const DampingConfig& cfg,
                            Variant variant = Variant::self_loops);

struct SweepRow {
  double damping = 0.0;
  ScoreVector scores;
  std::vector<int> winners;  // argmax ids, exact ties all listed
  bool winner_changed = false;  // winner set differs from the previous row
};

// One power-method run per grid point (no cross-check), rows computed
// independently (OpenMP) and assembled in grid order. d = 0 rows are the
// uniform teleport limit. The grid must be sorted ascending within [0, 1].
std::vector<SweepRow> damping_sweep(const MarginMatrix& m,
                                    const std::vector<double>& grid,
                                    Variant variant = Variant::self_loops,
                                    const DampingConfig& base = {});
std::vector<SweepRow> damping_sweep(const Profile& p,
                                    const std::vector<double>& grid,
                                    Variant variant = Variant::self_loops,
                                    const DampingConfig& base = {});

// CSV: d, one score column per candidate, winner, converged, iterations,
// winner_changed. Ties in the winner column are joined with '|'.
std::string sweep_to_csv(const std::vector<SweepRow>& rows,
                         const std::vector<std::string>& names);

}  // namespace ballotrank
