#include "ballotrank/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace ballotrank {

namespace {

constexpr int kPlateauWindow = 1000;  // stalled iterations before Cesaro
constexpr int kCesaroWindow = 64;     // trailing iterates averaged
// Rows below this size are not worth forking threads for; the arithmetic is
// identical either way, so this is purely a scheduling knob.
constexpr int kParallelRows = 64;

double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += std::fabs(a[i] - b[i]);
  return s;
}

void validate_stochastic(const TransitionMatrix& t) {
  const int n = t.n();
  if (n == 0) throw std::invalid_argument("empty transition matrix");
  if (t.entries.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("transition matrix shape mismatch");
  for (int b = 0; b < n; ++b) {
    double colsum = 0;
    for (int a = 0; a < n; ++a) {
      if (t.at(a, b) < 0)
        throw std::invalid_argument("negative transition entry");
      colsum += t.at(a, b);
    }
    if (std::fabs(colsum - 1.0) > 1e-9)
      throw std::invalid_argument("transition matrix is not column-stochastic");
  }
}

void validate_config(const DampingConfig& cfg) {
  if (!(cfg.damping >= 0.0 && cfg.damping <= 1.0))
    throw std::invalid_argument("damping must lie in [0, 1]");
  if (!(cfg.tolerance > 0))
    throw std::invalid_argument("tolerance must be positive");
  if (cfg.max_iterations <= 0)
    throw std::invalid_argument("max_iterations must be positive");
  if (cfg.tie_epsilon < 0)
    throw std::invalid_argument("tie epsilon must be nonnegative");
}

}  // namespace

void matvec_serial(const TransitionMatrix& t, const std::vector<double>& x,
                   std::vector<double>& y) {
  const int n = t.n();
  const double* e = t.entries.data();
  for (int a = 0; a < n; ++a) {
    double s = 0;
    const double* row = e + static_cast<size_t>(a) * n;
    for (int b = 0; b < n; ++b) s += row[b] * x[b];
    y[a] = s;
  }
}

void matvec_parallel(const TransitionMatrix& t, const std::vector<double>& x,
                     std::vector<double>& y) {
  const int n = t.n();
  const double* e = t.entries.data();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int a = 0; a < n; ++a) {
    double s = 0;
    const double* row = e + static_cast<size_t>(a) * n;
    for (int b = 0; b < n; ++b) s += row[b] * x[b];
    y[a] = s;
  }
}

ScoreVector power_method(const TransitionMatrix& t, const DampingConfig& cfg) {
  validate_config(cfg);
  validate_stochastic(t);
  const int n = t.n();
  const double d = cfg.damping;
  const double teleport = (1.0 - d) / n;
  const bool wide = n >= kParallelRows;

  std::vector<double> x(n, 1.0 / n), y(n);
  std::deque<double> residuals;             // last kPlateauWindow L1 changes
  std::deque<std::vector<double>> window;   // last kCesaroWindow iterates

  ScoreVector out;
  for (long long k = 1; k <= cfg.max_iterations; ++k) {
    if (wide)
      matvec_parallel(t, x, y);
    else
      matvec_serial(t, x, y);
    for (int a = 0; a < n; ++a) y[a] = teleport + d * y[a];
    double r = l1_distance(x, y);
    x.swap(y);
    out.iterations = k;
    out.residual = r;
    if (r < cfg.tolerance) {
      out.converged = true;
      out.scores = x;
      return out;
    }
    window.push_back(x);
    if (static_cast<int>(window.size()) > kCesaroWindow) window.pop_front();
    residuals.push_back(r);
    if (static_cast<int>(residuals.size()) > kPlateauWindow) {
      double old = residuals.front();
      residuals.pop_front();
      if (r >= old) {
        // No net progress across the whole window: periodic at d = 1.
        // Average the trailing iterates instead of spinning to max_iterations.
        std::vector<double> avg(n, 0.0);
        for (const auto& it : window)
          for (int a = 0; a < n; ++a) avg[a] += it[a];
        double total = 0;
        for (double v : avg) total += v;
        for (double& v : avg) v /= total;
        out.scores = std::move(avg);
        out.converged = false;
        out.cesaro_fallback = true;
        return out;
      }
    }
  }
  out.converged = false;
  out.scores = x;
  return out;
}

ScoreVector direct_solve(const TransitionMatrix& t, const DampingConfig& cfg) {
  validate_config(cfg);
  validate_stochastic(t);
  if (cfg.damping >= 1.0)
    throw std::invalid_argument(
        "direct solve requires damping < 1 (no teleport mass otherwise)");
  const int n = t.n();
  const double d = cfg.damping;

  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) -= d * t.at(r, c);
  Eigen::VectorXd rhs = Eigen::VectorXd::Constant(n, (1.0 - d) / n);
  Eigen::VectorXd x = a.partialPivLu().solve(rhs);

  ScoreVector out;
  out.scores.assign(x.data(), x.data() + n);
  for (double v : out.scores)
    if (!std::isfinite(v))
      throw std::runtime_error("direct solve produced a non-finite score");
  // Residual of the fixed-point equation, reported like the power method's.
  std::vector<double> fx(n);
  matvec_serial(t, out.scores, fx);
  double r = 0;
  for (int i = 0; i < n; ++i)
    r += std::fabs((1.0 - d) / n + d * fx[i] - out.scores[i]);
  out.residual = r;
  out.iterations = 0;
  out.converged = true;
  return out;
}

WeakRanking extract_ranking(const ScoreVector& s, double epsilon,
                            std::optional<int> unit_damping_winner) {
  if (epsilon < 0) throw std::invalid_argument("epsilon must be nonnegative");
  const int n = static_cast<int>(s.scores.size());
  WeakRanking out;
  out.epsilon = epsilon;
  if (unit_damping_winner) {
    // Scores collapsed onto a pairwise-undefeated candidate; everyone else
    // carries no information and lands in one unranked group.
    out.winner_only = true;
    out.groups.push_back({*unit_damping_winner});
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (i != *unit_damping_winner) rest.push_back(i);
    if (!rest.empty()) out.groups.push_back(std::move(rest));
    return out;
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (s.scores[a] != s.scores[b]) return s.scores[a] > s.scores[b];
    return a < b;
  });
  for (int i = 0; i < n; ++i) {
    if (i == 0 ||
        s.scores[order[i - 1]] - s.scores[order[i]] > epsilon)
      out.groups.emplace_back();
    out.groups.back().push_back(order[i]);
  }
  for (auto& g : out.groups) std::sort(g.begin(), g.end());
  return out;
}

BallotRankResult ballotrank(const MarginMatrix& m, const DampingConfig& cfg,
                            Variant variant) {
  validate_config(cfg);
  if (m.has_diagonal)
    throw std::invalid_argument("pipeline expects raw margins");
  BallotRankResult res;
  res.condorcet = analyze(m);
  MarginMatrix prepared =
      variant == Variant::self_loops ? apply_self_loops(m) : m;
  res.transition = normalize(prepared, variant);
  res.scores = power_method(res.transition, cfg);
  if (cfg.damping < 1.0) {
    ScoreVector direct = direct_solve(res.transition, cfg);
    res.scores.cross_check_l1 = l1_distance(res.scores.scores, direct.scores);
  }
  std::optional<int> collapse;
  if (cfg.damping == 1.0 && res.condorcet.winner) collapse = res.condorcet.winner;
  res.ranking = extract_ranking(res.scores, cfg.tie_epsilon, collapse);
  return res;
}

BallotRankResult ballotrank(const Profile& p, const DampingConfig& cfg,
                            Variant variant) {
  return ballotrank(profile_to_margins(p), cfg, variant);
}

std::vector<SweepRow> damping_sweep(const MarginMatrix& m,
                                    const std::vector<double>& grid,
                                    Variant variant,
                                    const DampingConfig& base) {
  if (m.has_diagonal)
    throw std::invalid_argument("sweep expects raw margins");
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0 || grid[i] > 1)
      throw std::invalid_argument("sweep grid values must lie in [0, 1]");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw std::invalid_argument("sweep grid must ascend");
  }
  MarginMatrix prepared =
      variant == Variant::self_loops ? apply_self_loops(m) : m;
  TransitionMatrix t = normalize(prepared, variant);
  const int n = t.n();
  const int rows = static_cast<int>(grid.size());
  std::vector<SweepRow> out(rows);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < rows; ++i) {
    SweepRow row;
    row.damping = grid[i];
    if (grid[i] == 0.0) {
      // Pure teleport: the walk forgets the graph entirely.
      row.scores.scores.assign(n, 1.0 / n);
      row.scores.converged = true;
      row.scores.iterations = 0;
    } else {
      DampingConfig cfg = base;
      cfg.damping = grid[i];
      row.scores = power_method(t, cfg);
    }
    double top = *std::max_element(row.scores.scores.begin(),
                                   row.scores.scores.end());
    for (int c = 0; c < n; ++c)
      if (row.scores.scores[c] == top) row.winners.push_back(c);
    out[i] = std::move(row);
  }
  for (int i = 1; i < rows; ++i)
    out[i].winner_changed = out[i].winners != out[i - 1].winners;
  return out;
}

std::vector<SweepRow> damping_sweep(const Profile& p,
                                    const std::vector<double>& grid,
                                    Variant variant,
                                    const DampingConfig& base) {
  return damping_sweep(profile_to_margins(p), grid, variant, base);
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows,
                         const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "d";
  for (const auto& name : names) out << "," << name;
  out << ",winner,converged,iterations,winner_changed\n";
  char buf[64];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%.12g", row.damping);
    out << buf;
    for (double v : row.scores.scores) {
      std::snprintf(buf, sizeof buf, "%.12g", v);
      out << "," << buf;
    }
    out << ",";
    for (size_t i = 0; i < row.winners.size(); ++i) {
      if (i) out << "|";
      out << names[row.winners[i]];
    }
    out << "," << (row.scores.converged ? "true" : "false") << ","
        << row.scores.iterations << ","
        << (row.winner_changed ? "true" : "false") << "\n";
  }
  return out.str();
}

}  // namespace ballotrank
