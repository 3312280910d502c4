#include "ballotrank/condorcet.hpp"

#include <algorithm>
#include <numeric>

namespace ballotrank {

namespace {

// Union-find over candidate ids, for the connectivity diagnostic.
int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

CondorcetReport analyze(const MarginMatrix& m) {
  const int n = m.n();
  CondorcetReport rep;
  std::vector<std::vector<bool>> beats(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && m.at(a, b) > 0) beats[a][b] = true;

  for (int a = 0; a < n; ++a) {
    bool beats_all = true, loses_all = true, wins_none = true;
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (!beats[a][b]) beats_all = false;
      if (beats[a][b]) wins_none = false;
      if (!beats[b][a]) loses_all = false;
    }
    if (beats_all && !rep.winner) rep.winner = a;
    if (wins_none && loses_all && !rep.loser) rep.loser = a;
  }

  // Smith set: seed with the maximal-Copeland candidates (they sit in the
  // top cycle), then close under "is not strictly beaten by the set". With
  // ties this pulls in anyone the set fails to beat, which keeps the
  // defining property: every member beats every non-member.
  std::vector<int> copeland(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (beats[a][b]) ++copeland[a];
  int best = *std::max_element(copeland.begin(), copeland.end());
  std::vector<bool> in_set(n, false);
  for (int a = 0; a < n; ++a)
    if (copeland[a] == best) in_set[a] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int t = 0; t < n; ++t) {
      if (in_set[t]) continue;
      for (int s = 0; s < n; ++s) {
        if (in_set[s] && !beats[s][t]) {
          in_set[t] = true;
          grew = true;
          break;
        }
      }
    }
  }
  for (int a = 0; a < n; ++a)
    if (in_set[a]) rep.smith_set.push_back(a);

  // Cycle detection: peel vertices without inbound beats (Kahn); leftovers
  // form at least one directed cycle.
  std::vector<int> indeg(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (beats[a][b]) ++indeg[b];
  std::vector<int> queue;
  for (int a = 0; a < n; ++a)
    if (indeg[a] == 0) queue.push_back(a);
  int removed = 0;
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    ++removed;
    for (int v = 0; v < n; ++v) {
      if (beats[u][v] && --indeg[v] == 0) queue.push_back(v);
    }
  }
  rep.has_cycle = removed < n;

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (beats[a][b] || beats[b][a])
        parent[find_root(parent, a)] = find_root(parent, b);
  for (int a = 1; a < n; ++a)
    if (find_root(parent, a) != find_root(parent, 0)) rep.connected = false;

  return rep;
}

}  // namespace ballotrank
