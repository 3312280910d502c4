#include "ballotrank/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ballotrank/fixtures.hpp"

namespace ballotrank {

const char* criterion_name(Criterion c) {
  switch (c) {
    case Criterion::anonymity: return "anonymity";
    case Criterion::neutrality: return "neutrality";
    case Criterion::majority: return "majority";
    case Criterion::condorcet_loser: return "condorcet_loser";
    case Criterion::pareto: return "pareto";
    case Criterion::smith: return "smith";
    case Criterion::iia: return "iia";
    case Criterion::monotonicity: return "monotonicity";
    case Criterion::later_no_harm: return "later_no_harm";
    case Criterion::no_show: return "no_show";
    case Criterion::cloning: return "cloning";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds_on_sample: return "holds_on_sample";
    case Verdict::counterexample_found: return "counterexample_found";
    case Verdict::fixture_reproduced: return "fixture_reproduced";
    case Verdict::fixture_mismatch: return "fixture_mismatch";
  }
  return "?";
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Distinct, platform-independent stream per trial.
std::uint64_t trial_seed(std::uint64_t seed, long long trial) {
  return mix64(seed ^ mix64(static_cast<std::uint64_t>(trial) +
                            0x9e3779b97f4a7c15ULL));
}

// Unbiased draw in [0, n). The engine's raw output is pinned by the standard;
// std::uniform_int_distribution is not, so reject-and-retry by hand.
std::uint64_t bounded(std::mt19937_64& eng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    std::uint64_t r = eng();
    if (r >= threshold) return r % n;
  }
}

void shuffle_ints(std::vector<int>& v, std::mt19937_64& eng) {
  for (size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[bounded(eng, i)]);
}

}  // namespace

Profile random_profile(std::uint64_t seed, int num_candidates,
                       long long num_voters) {
  if (num_candidates < 1 || num_candidates > 26)
    throw std::invalid_argument("need 1..26 candidates");
  if (num_voters < 0) throw std::invalid_argument("negative voter count");
  Profile p;
  for (int i = 0; i < num_candidates; ++i)
    p.candidates.push_back({i, std::string(1, static_cast<char>('a' + i))});
  std::mt19937_64 eng(seed);
  for (long long v = 0; v < num_voters; ++v) {
    std::vector<int> ranking(num_candidates);
    std::iota(ranking.begin(), ranking.end(), 0);
    shuffle_ints(ranking, eng);
    p.ballots.push_back({std::move(ranking), 1});
  }
  return p;
}

Profile permute_voters(const Profile& p, const std::vector<int>& order) {
  if (order.size() != p.ballots.size())
    throw std::invalid_argument("order length mismatch");
  std::vector<bool> seen(order.size(), false);
  Profile out = p;
  out.ballots.clear();
  for (int idx : order) {
    if (idx < 0 || idx >= static_cast<int>(p.ballots.size()) || seen[idx])
      throw std::invalid_argument("order is not a permutation");
    seen[idx] = true;
    out.ballots.push_back(p.ballots[idx]);
  }
  return out;
}

Profile swap_candidates(const Profile& p, int a, int b) {
  if (a < 0 || b < 0 || a >= p.num_candidates() || b >= p.num_candidates())
    throw std::invalid_argument("candidate id out of range");
  Profile out = p;
  for (auto& ballot : out.ballots) {
    for (int& c : ballot.ranking) {
      if (c == a)
        c = b;
      else if (c == b)
        c = a;
    }
  }
  return out;
}

Profile raise_candidate(const Profile& p, int index, int c) {
  if (index < 0 || index >= static_cast<int>(p.ballots.size()))
    throw std::invalid_argument("ballot index out of range");
  if (c < 0 || c >= p.num_candidates())
    throw std::invalid_argument("candidate id out of range");
  Profile out = p;
  auto& ranking = out.ballots[index].ranking;
  auto it = std::find(ranking.begin(), ranking.end(), c);
  if (it == ranking.end())
    throw std::invalid_argument("candidate not on that ballot");
  if (it == ranking.begin())
    throw std::invalid_argument("candidate already ranked first there");
  if (out.ballots[index].multiplicity == 1) {
    std::iter_swap(it, it - 1);
  } else {
    Ballot raised = out.ballots[index];
    raised.multiplicity = 1;
    auto pos = raised.ranking.begin() + (it - ranking.begin());
    std::iter_swap(pos, pos - 1);
    --out.ballots[index].multiplicity;
    out.ballots.push_back(std::move(raised));
  }
  return out;
}

Profile truncate_ballot(const Profile& p, int index, int keep) {
  if (index < 0 || index >= static_cast<int>(p.ballots.size()))
    throw std::invalid_argument("ballot index out of range");
  const auto& ranking = p.ballots[index].ranking;
  if (keep < 1 || keep > static_cast<int>(ranking.size()))
    throw std::invalid_argument("keep count out of range");
  Profile out = p;
  out.ballots[index].ranking.resize(keep);
  return out;
}

Profile extend_ballot(const Profile& p, int index,
                      const std::vector<int>& tail) {
  if (index < 0 || index >= static_cast<int>(p.ballots.size()))
    throw std::invalid_argument("ballot index out of range");
  Profile out = p;
  auto& ranking = out.ballots[index].ranking;
  for (int c : tail) {
    if (c < 0 || c >= p.num_candidates())
      throw std::invalid_argument("candidate id out of range");
    if (std::find(ranking.begin(), ranking.end(), c) != ranking.end())
      throw std::invalid_argument("candidate already ranked on that ballot");
    ranking.push_back(c);
  }
  return out;
}

Profile add_ballots(const Profile& p, const std::vector<Ballot>& extra) {
  Profile out = p;
  for (const auto& b : extra) {
    if (b.multiplicity < 1) throw std::invalid_argument("zero multiplicity");
    if (b.ranking.empty()) throw std::invalid_argument("empty ballot");
    std::vector<bool> seen(p.num_candidates(), false);
    for (int c : b.ranking) {
      if (c < 0 || c >= p.num_candidates())
        throw std::invalid_argument("candidate id out of range");
      if (seen[c]) throw std::invalid_argument("candidate repeated on ballot");
      seen[c] = true;
    }
    out.ballots.push_back(b);
  }
  return out;
}

Profile clone_candidate(const Profile& p, int target,
                        const std::string& clone_name) {
  if (target < 0 || target >= p.num_candidates())
    throw std::invalid_argument("candidate id out of range");
  for (const auto& c : p.candidates)
    if (c.name == clone_name)
      throw std::invalid_argument("clone name already taken");
  const int clone_id = target + 1;
  Profile out;
  for (int i = 0; i < p.num_candidates(); ++i) {
    out.candidates.push_back({i <= target ? i : i + 1, p.candidates[i].name});
    if (i == target) out.candidates.push_back({clone_id, clone_name});
  }
  std::sort(out.candidates.begin(), out.candidates.end(),
            [](const Candidate& x, const Candidate& y) { return x.id < y.id; });
  for (const auto& b : p.ballots) {
    Ballot nb;
    nb.multiplicity = b.multiplicity;
    for (int c : b.ranking) {
      if (c == target) nb.ranking.push_back(clone_id);
      nb.ranking.push_back(c <= target ? c : c + 1);
    }
    out.ballots.push_back(std::move(nb));
  }
  return out;
}

Profile ProfileTransform::apply(const Profile& p) const {
  switch (kind) {
    case Kind::permute_voters: {
      if (!positions.empty()) return ballotrank::permute_voters(p, positions);
      std::vector<int> order(p.ballots.size());
      std::iota(order.begin(), order.end(), 0);
      std::mt19937_64 eng(seed);
      shuffle_ints(order, eng);
      return ballotrank::permute_voters(p, order);
    }
    case Kind::swap_candidates:
      if (candidates.size() != 2)
        throw std::invalid_argument("swap needs two candidate ids");
      return ballotrank::swap_candidates(p, candidates[0], candidates[1]);
    case Kind::raise_candidate: {
      if (candidates.size() != 1)
        throw std::invalid_argument("raise needs one candidate id");
      Profile out = p;
      for (int idx : positions)
        out = ballotrank::raise_candidate(out, idx, candidates[0]);
      return out;
    }
    case Kind::truncate_extend: {
      if (ballots.empty()) {
        if (positions.size() != 2)
          throw std::invalid_argument("truncate needs {index, keep}");
        return truncate_ballot(p, positions[0], positions[1]);
      }
      if (positions.size() != 1)
        throw std::invalid_argument("extend needs {index}");
      return extend_ballot(p, positions[0], ballots[0].ranking);
    }
    case Kind::add_ballots:
      return ballotrank::add_ballots(p, ballots);
    case Kind::clone_candidate:
      if (candidates.size() != 1)
        throw std::invalid_argument("clone needs one candidate id");
      return ballotrank::clone_candidate(p, candidates[0], name);
  }
  throw std::logic_error("unhandled transform kind");
}

namespace {

struct TrialReport {
  bool violated = false;
  bool vacuous = false;
  std::string witness;
  std::string detail;
};

int group_of(const WeakRanking& r, int id) {
  for (int g = 0; g < static_cast<int>(r.groups.size()); ++g)
    for (int c : r.groups[g])
      if (c == id) return g;
  return -1;
}

bool in_top_group(const WeakRanking& r, int id) {
  const auto& top = r.groups.front();
  return std::find(top.begin(), top.end(), id) != top.end();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// n in 2..6 keeps the exact oracles cheap while leaving room for cycles.
// Voter counts are odd (3..41): complete ballots with an odd electorate
// cannot produce pairwise ties, which would otherwise let a tie-glued member
// of the top set drain to zero at d = 1 and muddy the score-separation
// claims.
void draw_shape(std::mt19937_64& eng, int& n, long long& voters) {
  n = 2 + static_cast<int>(bounded(eng, 5));
  voters = 3 + 2 * static_cast<long long>(bounded(eng, 20));
}

TrialReport run_positive_trial(Criterion c, const PositiveCheckConfig& cfg,
                               long long trial) {
  TrialReport rep;
  std::mt19937_64 eng(trial_seed(cfg.seed, trial));
  int n = 0;
  long long voters = 0;
  draw_shape(eng, n, voters);

  switch (c) {
    case Criterion::anonymity: {
      Profile p = random_profile(eng(), n, voters);
      std::vector<int> order(p.ballots.size());
      std::iota(order.begin(), order.end(), 0);
      shuffle_ints(order, eng);
      Profile q = permute_voters(p, order);
      auto r1 = ballotrank(p, cfg.damping, cfg.variant);
      auto r2 = ballotrank(q, cfg.damping, cfg.variant);
      double worst = 0;
      for (int i = 0; i < n; ++i)
        worst = std::max(worst, std::fabs(r1.scores.scores[i] -
                                          r2.scores.scores[i]));
      if (worst != 0.0) {
        rep.violated = true;
        rep.witness = serialize_profile(p);
        rep.detail = "scores moved by " + fmt(worst) + " under a voter shuffle";
      }
      return rep;
    }
    case Criterion::neutrality: {
      Profile p = random_profile(eng(), n, voters);
      int a = static_cast<int>(bounded(eng, n));
      int b = static_cast<int>(bounded(eng, n - 1));
      if (b >= a) ++b;
      Profile q = swap_candidates(p, a, b);
      auto r1 = ballotrank(p, cfg.damping, cfg.variant);
      auto r2 = ballotrank(q, cfg.damping, cfg.variant);
      double worst = 0;
      for (int i = 0; i < n; ++i) {
        int j = i == a ? b : i == b ? a : i;
        worst = std::max(worst, std::fabs(r2.scores.scores[j] -
                                          r1.scores.scores[i]));
      }
      if (worst > 1e-12) {
        rep.violated = true;
        rep.witness = serialize_profile(p);
        rep.detail = "swapping " + p.name_of(a) + "/" + p.name_of(b) +
                     " moved scores by " + fmt(worst);
      }
      return rep;
    }
    case Criterion::majority: {
      Profile p = random_profile(eng(), n, voters);
      if (trial % 2 == 1) {
        // Plant a majority favourite so half the sample is non-vacuous.
        int m = static_cast<int>(bounded(eng, n));
        long long need = voters / 2 + 1;
        for (long long i = 0; i < need; ++i) {
          auto& r = p.ballots[i].ranking;
          auto it = std::find(r.begin(), r.end(), m);
          r.erase(it);
          r.insert(r.begin(), m);
        }
      }
      std::vector<long long> firsts(n, 0);
      for (const auto& b : p.ballots) firsts[b.ranking[0]] += b.multiplicity;
      int favourite = -1;
      for (int i = 0; i < n; ++i)
        if (2 * firsts[i] > p.num_voters()) favourite = i;
      if (favourite < 0) {
        rep.vacuous = true;
        return rep;
      }
      auto r = ballotrank(p, cfg.damping, cfg.variant);
      if (!in_top_group(r.ranking, favourite)) {
        rep.violated = true;
        rep.witness = serialize_profile(p);
        rep.detail = p.name_of(favourite) +
                     " is ranked first by a majority but did not win";
      }
      return rep;
    }
    case Criterion::condorcet_loser: {
      Profile p = trial == 0 ? fixtures::toy() : random_profile(eng(), n, voters);
      auto r = ballotrank(p, cfg.damping, cfg.variant);
      if (!r.condorcet.loser) {
        rep.vacuous = true;
        return rep;
      }
      const int loser = *r.condorcet.loser;
      if (in_top_group(r.ranking, loser)) {
        rep.violated = true;
        rep.witness = serialize_profile(p);
        rep.detail =
            "pairwise loser " + p.name_of(loser) + " reached the top rank";
      } else if (cfg.damping.damping == 1.0 &&
                 !(r.scores.scores[loser] < 1e-9)) {
        // Undamped, the loser's row is empty: it defeats nobody, so no flow
        // arrives and its self-loop share of the win mass is zero. Its score
        // must vanish outright.
        rep.violated = true;
        rep.witness = serialize_profile(p);
        rep.detail = "pairwise loser " + p.name_of(loser) +
                     " kept a score of " + fmt(r.scores.scores[loser]) +
                     " at d = 1";
      }
      return rep;
    }
    case Criterion::pareto: {
      Profile p = random_profile(eng(), n, voters);
      int x = static_cast<int>(bounded(eng, n));
      int y = static_cast<int>(bounded(eng, n - 1));
      if (y >= x) ++y;
      // Force unanimity for x over y by swapping their slots where needed.
      for (auto& b : p.ballots) {
        auto ix = std::find(b.ranking.begin(), b.ranking.end(), x);
        auto iy = std::find(b.ranking.begin(), b.ranking.end(), y);
        if (iy < ix) std::iter_swap(ix, iy);
      }
      auto r = ballotrank(p, cfg.damping, cfg.variant);
      // Score dominance, not just group order: x may tie y (both zero at
      // d = 1) but must never score below it.
      if (r.scores.scores[y] - r.scores.scores[x] > 1e-12) {
        rep.violated = true;
        rep.witness = serialize_profile(p);
        rep.detail = p.name_of(y) + " outscored " + p.name_of(x) +
                     " despite unanimous preference for the latter";
      }
      return rep;
    }
    case Criterion::smith: {
      MarginMatrix m = trial == 0
                           ? fixtures::minneapolis()
                           : profile_to_margins(random_profile(eng(), n, voters));
      auto r = ballotrank(m, cfg.damping, cfg.variant);
      const auto& smith = r.condorcet.smith_set;
      if (static_cast<int>(smith.size()) == m.n()) {
        rep.vacuous = true;  // no outsiders, nothing to separate
        return rep;
      }
      std::vector<bool> in_smith(m.n(), false);
      for (int s : smith) in_smith[s] = true;
      double weakest_member = 1.0, best_outsider = 0.0;
      int culprit = -1;
      for (int i = 0; i < m.n(); ++i) {
        if (in_smith[i]) {
          weakest_member = std::min(weakest_member, r.scores.scores[i]);
        } else if (r.scores.scores[i] >= best_outsider) {
          best_outsider = r.scores.scores[i];
          culprit = i;
        }
      }
      if (best_outsider >= weakest_member - 1e-12) {
        rep.violated = true;
        rep.witness = to_csv(m);
        rep.detail = m.names[culprit] +
                     " scores level with the top set it sits outside of";
      }
      return rep;
    }
    default:
      throw std::invalid_argument(
          "criterion has a replayed counterexample, not a positive check");
  }
}

constexpr double kReplayTolerance = 5e-4;  // pinned values carry 3-4 decimals

struct ReplayLog {
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void expect_close(double got, double pinned, const std::string& what) {
    if (std::fabs(got - pinned) > kReplayTolerance)
      problems.push_back(what + ": got " + fmt(got) + ", pinned " +
                         fmt(pinned));
  }
  void expect_scores(const BallotRankResult& r,
                     const std::vector<double>& pinned,
                     const std::string& label) {
    for (size_t i = 0; i < pinned.size(); ++i)
      expect_close(r.scores.scores[i], pinned[i],
                   label + " score " + std::to_string(i));
  }
};

CriterionOutcome finish_replay(Criterion c, ReplayLog& log,
                               const Profile& before, const Profile& after,
                               const std::string& reproduced_detail) {
  CriterionOutcome out;
  out.criterion = c;
  if (log.problems.empty()) {
    out.verdict = Verdict::fixture_reproduced;
    out.detail = reproduced_detail;
    out.witness = "# before\n" + serialize_profile(before) + "# after\n" +
                  serialize_profile(after);
  } else {
    out.verdict = Verdict::fixture_mismatch;
    std::string joined;
    for (const auto& p : log.problems) {
      if (!joined.empty()) joined += "; ";
      joined += p;
    }
    out.detail = joined;
  }
  return out;
}

}  // namespace

CriterionOutcome check_positive(Criterion c, const PositiveCheckConfig& cfg) {
  switch (c) {
    case Criterion::anonymity:
    case Criterion::neutrality:
    case Criterion::majority:
    case Criterion::condorcet_loser:
    case Criterion::pareto:
    case Criterion::smith:
      break;
    default:
      throw std::invalid_argument(
          "criterion has a replayed counterexample, not a positive check");
  }
  if (cfg.trials < 1) throw std::invalid_argument("need at least one trial");

  CriterionOutcome out;
  out.criterion = c;
  out.trials = cfg.trials;
  const double d = cfg.damping.damping;
  const bool unit_claim = c == Criterion::majority || c == Criterion::smith;
  out.report_only = unit_claim ? d != 1.0 : d == 0.0;

  std::vector<TrialReport> reports(cfg.trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < cfg.trials; ++i)
    reports[i] = run_positive_trial(c, cfg, i);

  long long active = 0;
  for (long long i = 0; i < cfg.trials; ++i) {
    const auto& rep = reports[i];
    if (!rep.vacuous) ++active;
    if (rep.violated) {
      ++out.violations;
      if (out.witness.empty()) {
        out.witness = rep.witness;
        out.detail = "trial " + std::to_string(i) + ": " + rep.detail;
      }
    }
  }
  if (out.violations == 0)
    out.detail = std::to_string(active) + " of " + std::to_string(cfg.trials) +
                 " trials exercised the property (seed " +
                 std::to_string(cfg.seed) + ")";
  out.verdict = out.violations == 0 ? Verdict::holds_on_sample
                                    : Verdict::counterexample_found;
  return out;
}

CriterionOutcome replay_counterexample(Criterion c) {
  ReplayLog log;
  DampingConfig at085;
  at085.damping = 0.85;
  DampingConfig at1;
  at1.damping = 1.0;

  switch (c) {
    case Criterion::iia: {
      Profile p1 = fixtures::toy();
      Profile p2 = fixtures::iia2();
      // Same head-to-head a/b tallies in both profiles.
      auto w1 = pairwise_wins(p1);
      auto w2 = pairwise_wins(p2);
      const int n = p1.num_candidates();
      log.expect(w1[0 * n + 1] == w2[0 * n + 1] && w1[1 * n + 0] == w2[1 * n + 0],
                 "a/b tallies differ between the two profiles");
      auto r1 = ballotrank(p1, at085);
      auto r2 = ballotrank(p2, at085);
      log.expect_scores(r1, {0.8469, 0.0756, 0.0375, 0.0400}, "base d=0.85");
      log.expect_scores(r2, {0.3086, 0.3113, 0.3426, 0.0375}, "altered d=0.85");
      auto r2u = ballotrank(p2, at1);
      log.expect_scores(r2u, {0.3183, 0.3236, 0.3581, 0.0000}, "altered d=1");
      log.expect(group_of(r1.ranking, 0) < group_of(r1.ranking, 1),
                 "base profile should rank a over b");
      log.expect(group_of(r2.ranking, 1) < group_of(r2.ranking, 0),
                 "altered profile should rank b over a");
      return finish_replay(
          c, log, p1, p2,
          "a/b order flips between the profiles although every voter's a-vs-b "
          "preference is unchanged");
    }
    case Criterion::monotonicity: {
      Profile p1 = fixtures::mono1();
      ProfileTransform t;
      t.kind = ProfileTransform::Kind::raise_candidate;
      t.candidates = {0};
      t.positions = {6, 2};
      Profile p2 = t.apply(p1);
      log.expect(serialize_profile(p2) == serialize_profile(fixtures::mono2()),
                 "raise transform does not reproduce the stored profile");
      auto r1 = ballotrank(p1, at085);
      auto r2 = ballotrank(p2, at085);
      log.expect_scores(r1, {0.2763, 0.1612, 0.2513, 0.3112}, "base d=0.85");
      log.expect_scores(r2, {0.2677, 0.2738, 0.1551, 0.3034}, "raised d=0.85");
      log.expect(group_of(r2.ranking, 0) > group_of(r1.ranking, 0),
                 "raising a should demote it here");
      return finish_replay(c, log, p1, p2,
                           "moving a up on two ballots drops it from second "
                           "to third place");
    }
    case Criterion::later_no_harm: {
      Profile p1 = fixtures::lnh1();
      Profile p2 = extend_ballot(p1, 3, {1});
      log.expect(serialize_profile(p2) == serialize_profile(fixtures::lnh2()),
                 "extend transform does not reproduce the stored profile");
      auto r1 = ballotrank(p1, at1);
      log.expect_scores(r1, {0.387, 0.290, 0.323}, "truncated d=1");
      log.expect(r1.ranking.groups.front() == std::vector<int>{0},
                 "a should win before the extension");
      auto r2 = ballotrank(p2, at1);
      log.expect(r2.ranking.groups.front() == std::vector<int>{2},
                 "c should win after the extension");
      auto r2d = ballotrank(p2, at085);
      log.expect(group_of(r2d.ranking, 2) < group_of(r2d.ranking, 0) &&
                     group_of(r2d.ranking, 0) < group_of(r2d.ranking, 1),
                 "extended profile should rank c over a over b at d=0.85");
      return finish_replay(c, log, p1, p2,
                           "ranking b below a on one ballot costs a the win");
    }
    case Criterion::no_show: {
      Profile p1 = fixtures::noshow1();
      Profile p2 = add_ballots(p1, {Ballot{{2, 0, 1}, 2}});
      log.expect(serialize_profile(p2) == serialize_profile(fixtures::noshow2()),
                 "added ballots do not reproduce the stored profile");
      auto r1 = ballotrank(p1, at085);
      log.expect(r1.condorcet.winner && *r1.condorcet.winner == 0,
                 "a should be the pairwise winner before the addition");
      log.expect(r1.ranking.groups.front() == std::vector<int>{0},
                 "a should win before the addition");
      auto r2 = ballotrank(p2, at085);
      log.expect(group_of(r2.ranking, 1) == 0 && group_of(r2.ranking, 0) == 1 &&
                     group_of(r2.ranking, 2) == 2,
                 "addition should produce b over a over c");
      return finish_replay(c, log, p1, p2,
                           "two extra ballots preferring a over b hand the "
                           "win to b");
    }
    case Criterion::cloning: {
      Profile p1 = fixtures::clone1();
      Profile p2 = clone_candidate(p1, 0, "a'");
      log.expect(serialize_profile(p2) == serialize_profile(fixtures::clone2()),
                 "clone transform does not reproduce the stored profile");
      auto r1 = ballotrank(p1, at1);
      log.expect_close(r1.scores.scores[0], 0.2669, "base a");
      log.expect_close(r1.scores.scores[1], 0.2641, "base b");
      log.expect(r1.ranking.groups.front() == std::vector<int>{0},
                 "a should win before cloning");
      auto r2 = ballotrank(p2, at1);
      log.expect_close(r2.scores.scores[2], 0.2369, "cloned b");
      log.expect_close(r2.scores.scores[1], 0.2220, "cloned a'");
      log.expect_close(r2.scores.scores[0], 0.1182, "cloned a");
      log.expect(r2.ranking.groups.front() == std::vector<int>{2},
                 "b should win after cloning");
      return finish_replay(c, log, p1, p2,
                           "cloning the winner hands the election to b");
    }
    default:
      throw std::invalid_argument(
          "criterion has a positive check, not a replayed counterexample");
  }
}

}  // namespace ballotrank
