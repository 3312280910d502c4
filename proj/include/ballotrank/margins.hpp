#pragma once

// Margin-graph aggregates, self-loop installation, and column normalization
// into the stochastic transition matrix driving the random walk.

#include <string>
#include <vector>

#include "ballotrank/profile.hpp"

namespace ballotrank {

struct MarginAggregates {
  std::vector<long long> total_wins;        // TW(a): sum of a's row margins
  long long total_wins_sum = 0;             // TW: sum over all candidates
  std::vector<long long> total_losses_raw;  // column sums, diagonal excluded
  std::vector<Rational> total_losses;       // column sums, diagonal included
  std::vector<std::vector<int>> beats;      // beats[a]: candidates a defeats
  std::vector<int> loss_counts;             // L(b): number of defeats suffered
};

MarginAggregates aggregates(const MarginMatrix& m);

// Returns a copy of m with the diagonal set to TW(a)/TW. An all-ties profile
// has TW = 0; the diagonal stays zero and the degenerate flag is raised.
// Requires m.has_diagonal == false.
MarginMatrix apply_self_loops(const MarginMatrix& m);

enum class Variant {
  self_loops,     // margin kernel with self-loop diagonal (the default)
  no_self_loops,  // margin kernel, no diagonal
  unweighted,     // uniform 1/L(b) kernel over the defeat relation
};

const char* variant_name(Variant v);

// Column-stochastic walk matrix. at(a,b) is the share of b's mass flowing to
// a per step, so scores evolve as x <- (1-d)/n + d * (entries * x).
struct TransitionMatrix {
  std::vector<std::string> names;
  std::vector<double> entries;  // row-major, n*n
  Variant kind = Variant::self_loops;

  int n() const { return static_cast<int>(names.size()); }
  double at(int a, int b) const {
    return entries[static_cast<size_t>(a) * names.size() + b];
  }
  double& at(int a, int b) {
    return entries[static_cast<size_t>(a) * names.size() + b];
  }
};

// Exact column normalization as reduced fractions (row-major n*n). Columns
// with no inbound weight become pure self-loops: entry (b,b) = 1.
// self_loops requires m.has_diagonal == true, the other kinds require false.
std::vector<Rational> normalize_exact(const MarginMatrix& m, Variant kind);

// Same normalization with each exact entry rounded once to double.
TransitionMatrix normalize(const MarginMatrix& m, Variant kind);

// Graphviz export: one node per candidate (self-loop share in the label when
// present), one edge b -> a per positive off-diagonal entry, labelled with
// the flow share to four significant digits.
std::string to_dot(const TransitionMatrix& t);

}  // namespace ballotrank
