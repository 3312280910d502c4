#include "ballotrank/rivals.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ballotrank {

namespace {

// Raw margins are integers; the Rational wrapper is only there for the
// self-loop diagonal, which none of the rival methods read.
long long int_margin(const Rational& r) {
  return boost::rational_cast<long long>(r);
}

WeakRanking rank_descending(const std::vector<long long>& key) {
  const int n = static_cast<int>(key.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (key[a] != key[b]) return key[a] > key[b];
    return a < b;
  });
  WeakRanking out;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || key[order[i - 1]] != key[order[i]]) out.groups.emplace_back();
    out.groups.back().push_back(order[i]);
  }
  return out;
}

}  // namespace

MethodResult minimax(const MarginMatrix& m) {
  const int n = m.n();
  if (n == 0) throw std::invalid_argument("empty margin matrix");
  MethodResult res;
  res.method = "minimax";
  std::vector<long long> worst(n, 0);
  std::vector<int> against(n, -1);
  for (int c = 0; c < n; ++c) {
    for (int a = 0; a < n; ++a) {
      if (a == c) continue;
      long long margin = int_margin(m.at(a, c));
      if (margin > worst[c]) {
        worst[c] = margin;
        against[c] = a;
      }
    }
  }
  std::vector<long long> key(n);
  for (int c = 0; c < n; ++c) key[c] = -worst[c];
  res.ranking = rank_descending(key);
  res.scores.assign(worst.begin(), worst.end());
  auto defeats = nlohmann::ordered_json::array();
  for (int c = 0; c < n; ++c) {
    nlohmann::ordered_json row;
    row["candidate"] = m.names[c];
    row["worst_defeat"] = worst[c];
    row["against"] =
        against[c] >= 0 ? nlohmann::ordered_json(m.names[against[c]])
                        : nlohmann::ordered_json(nullptr);
    defeats.push_back(std::move(row));
  }
  res.trace["worst_defeats"] = std::move(defeats);
  return res;
}

MethodResult ranked_pairs(const MarginMatrix& m) {
  const int n = m.n();
  if (n == 0) throw std::invalid_argument("empty margin matrix");
  MethodResult res;
  res.method = "rankedpairs";

  struct Defeat {
    int winner;
    int loser;
    long long margin;
  };
  std::vector<Defeat> defeats;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      long long margin = int_margin(m.at(a, b));
      if (margin > 0) defeats.push_back({a, b, margin});
    }
  }
  std::sort(defeats.begin(), defeats.end(),
            [&](const Defeat& x, const Defeat& y) {
              if (x.margin != y.margin) return x.margin > y.margin;
              if (m.names[x.winner] != m.names[y.winner])
                return m.names[x.winner] < m.names[y.winner];
              return m.names[x.loser] < m.names[y.loser];
            });

  // reach[x][y]: y is reachable from x through locked victories. Kept closed
  // under transitivity so the cycle test for a new lock is a single lookup.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> locked(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) reach[i][i] = true;
  auto steps = nlohmann::ordered_json::array();
  for (const auto& d : defeats) {
    bool closes_cycle = reach[d.loser][d.winner];
    if (!closes_cycle) {
      locked[d.winner][d.loser] = true;
      for (int x = 0; x < n; ++x) {
        if (!reach[x][d.winner]) continue;
        for (int y = 0; y < n; ++y)
          if (reach[d.loser][y]) reach[x][y] = true;
      }
    }
    nlohmann::ordered_json step;
    step["winner"] = m.names[d.winner];
    step["loser"] = m.names[d.loser];
    step["margin"] = d.margin;
    step["locked"] = !closes_cycle;
    steps.push_back(std::move(step));
  }

  // Peel sources off the (acyclic) locked graph; candidates removed in the
  // same pass tie.
  std::vector<int> group_of(n, -1);
  std::vector<bool> removed(n, false);
  int removed_count = 0;
  int level = 0;
  while (removed_count < n) {
    std::vector<int> sources;
    for (int c = 0; c < n; ++c) {
      if (removed[c]) continue;
      bool source = true;
      for (int a = 0; a < n; ++a) {
        if (!removed[a] && locked[a][c]) {
          source = false;
          break;
        }
      }
      if (source) sources.push_back(c);
    }
    for (int c : sources) {
      removed[c] = true;
      group_of[c] = level;
      ++removed_count;
    }
    ++level;
  }
  res.ranking.groups.resize(level);
  for (int c = 0; c < n; ++c) res.ranking.groups[group_of[c]].push_back(c);
  res.ranking.groups.erase(
      std::remove_if(res.ranking.groups.begin(), res.ranking.groups.end(),
                     [](const std::vector<int>& g) { return g.empty(); }),
      res.ranking.groups.end());
  res.scores.assign(group_of.begin(), group_of.end());
  res.trace["pairs"] = std::move(steps);
  return res;
}

MethodResult schulze(const MarginMatrix& m) {
  const int n = m.n();
  if (n == 0) throw std::invalid_argument("empty margin matrix");
  MethodResult res;
  res.method = "schulze";

  // Widest-path strengths over the defeat edges (Floyd-Warshall).
  std::vector<std::vector<long long>> p(n, std::vector<long long>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      long long margin = int_margin(m.at(a, b));
      if (margin > 0) p[a][b] = margin;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a) {
      if (a == k) continue;
      for (int b = 0; b < n; ++b) {
        if (b == k || b == a) continue;
        p[a][b] = std::max(p[a][b], std::min(p[a][k], p[k][b]));
      }
    }
  }
  std::vector<long long> wins(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && p[a][b] > p[b][a]) ++wins[a];
  res.ranking = rank_descending(wins);
  res.scores.assign(wins.begin(), wins.end());
  res.trace["strengths"] = p;
  res.trace["beatpath_wins"] = wins;
  return res;
}

MethodResult irv(const Profile& prof) {
  const int n = prof.num_candidates();
  if (n == 0) throw std::invalid_argument("empty profile");
  MethodResult res;
  res.method = "irv";

  std::vector<bool> active(n, true);
  int active_count = n;
  std::vector<int> elim_round(n, 0);
  std::vector<long long> final_counts(n, 0);
  auto rounds = nlohmann::ordered_json::array();
  int winner = -1;
  int round_no = 0;
  while (winner < 0) {
    ++round_no;
    std::vector<long long> counts(n, -1);
    for (int i = 0; i < n; ++i)
      if (active[i]) counts[i] = 0;
    long long live = 0, exhausted = 0;
    for (const auto& b : prof.ballots) {
      int top = -1;
      for (int c : b.ranking) {
        if (active[c]) {
          top = c;
          break;
        }
      }
      if (top < 0)
        exhausted += b.multiplicity;
      else {
        counts[top] += b.multiplicity;
        live += b.multiplicity;
      }
    }
    bool lexicographic = false;
    std::vector<int> eliminated;
    if (active_count == 1) {
      for (int i = 0; i < n; ++i)
        if (active[i]) winner = i;
    } else {
      long long top_count = -1;
      int top = -1;
      for (int i = 0; i < n; ++i) {
        if (active[i] && counts[i] > top_count) {
          top_count = counts[i];
          top = i;
        }
      }
      if (2 * top_count > live) {
        winner = top;
      } else {
        long long fewest = -1;
        for (int i = 0; i < n; ++i)
          if (active[i] && (fewest < 0 || counts[i] < fewest))
            fewest = counts[i];
        for (int i = 0; i < n; ++i)
          if (active[i] && counts[i] == fewest) eliminated.push_back(i);
        if (static_cast<int>(eliminated.size()) == active_count) {
          // A full tie would empty the field; drop only the
          // lexicographically largest name and note the tiebreak.
          int victim = eliminated[0];
          for (int i : eliminated)
            if (prof.name_of(i) > prof.name_of(victim)) victim = i;
          eliminated = {victim};
          lexicographic = true;
        }
        for (int i : eliminated) {
          active[i] = false;
          --active_count;
          elim_round[i] = round_no;
        }
      }
    }
    nlohmann::ordered_json round;
    round["counts"] = counts;
    auto elim_names = nlohmann::ordered_json::array();
    for (int i : eliminated) elim_names.push_back(prof.name_of(i));
    round["eliminated"] = std::move(elim_names);
    round["exhausted"] = exhausted;
    round["lexicographic"] = lexicographic;
    rounds.push_back(std::move(round));
    if (winner >= 0) final_counts = counts;
  }

  // Winner first, surviving candidates by their final-round counts, then the
  // eliminated in reverse order of elimination (same round ties).
  res.ranking.groups.push_back({winner});
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (active[i] && i != winner) others.push_back(i);
  std::sort(others.begin(), others.end(), [&](int a, int b) {
    if (final_counts[a] != final_counts[b])
      return final_counts[a] > final_counts[b];
    return a < b;
  });
  for (size_t i = 0; i < others.size(); ++i) {
    if (i == 0 || final_counts[others[i - 1]] != final_counts[others[i]])
      res.ranking.groups.emplace_back();
    res.ranking.groups.back().push_back(others[i]);
  }
  for (int r = round_no; r >= 1; --r) {
    std::vector<int> group;
    for (int i = 0; i < n; ++i)
      if (elim_round[i] == r) group.push_back(i);
    if (!group.empty()) res.ranking.groups.push_back(std::move(group));
  }
  res.scores.assign(elim_round.begin(), elim_round.end());
  res.trace["rounds"] = std::move(rounds);
  res.trace["winner"] = prof.name_of(winner);
  return res;
}

std::vector<long long> cv_adjacency(const Profile& p) {
  if (!p.complete())
    throw std::invalid_argument("convergence voting requires complete ballots");
  const int n = p.num_candidates();
  std::vector<long long> adj = pairwise_wins(p);
  const long long budget = p.num_voters() * (n - 1);
  for (int b = 0; b < n; ++b) {
    long long lost = 0;
    for (int a = 0; a < n; ++a)
      if (a != b) lost += adj[static_cast<size_t>(a) * n + b];
    adj[static_cast<size_t>(b) * n + b] = budget - lost;
  }
  return adj;
}

MethodResult convergence_voting(const Profile& p,
                                std::optional<DampingConfig> cfg) {
  const int n = p.num_candidates();
  if (n == 0) throw std::invalid_argument("empty profile");
  std::vector<long long> adj = cv_adjacency(p);
  const long long budget = p.num_voters() * (n - 1);

  TransitionMatrix t;
  for (int i = 0; i < n; ++i) t.names.push_back(p.name_of(i));
  t.entries.assign(static_cast<size_t>(n) * n, 0.0);
  if (budget > 0) {
    for (size_t i = 0; i < adj.size(); ++i)
      t.entries[i] = static_cast<double>(adj[i]) / budget;
  } else {
    for (int i = 0; i < n; ++i) t.at(i, i) = 1.0;
  }

  DampingConfig config = cfg.value_or(DampingConfig{});
  if (!cfg) config.damping = 1.0;  // raw-vote walk runs undamped by default

  MethodResult res;
  res.method = "cv";
  ScoreVector scores = power_method(t, config);
  res.scores = scores.scores;
  res.ranking = extract_ranking(scores, config.tie_epsilon);

  auto matrix = nlohmann::ordered_json::array();
  for (int a = 0; a < n; ++a) {
    auto row = nlohmann::ordered_json::array();
    for (int b = 0; b < n; ++b)
      row.push_back(adj[static_cast<size_t>(a) * n + b]);
    matrix.push_back(std::move(row));
  }
  res.trace["adjacency"] = std::move(matrix);
  res.trace["column_sum"] = budget;
  res.trace["damping"] = config.damping;
  res.trace["iterations"] = scores.iterations;
  res.trace["converged"] = scores.converged;
  res.trace["residual"] = scores.residual;
  res.trace["cesaro_fallback"] = scores.cesaro_fallback;
  return res;
}

}  // namespace ballotrank
