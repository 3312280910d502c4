// Subcommand bodies behind the ballotrank binary. Everything here takes
// plain option structs and streams so tests can drive commands in-process;
// argv handling lives in the tool's main().

#include "ballotrank/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ballotrank/condorcet.hpp"
#include "ballotrank/margins.hpp"
#include "ballotrank/profile.hpp"

namespace ballotrank::cli {

using nlohmann::ordered_json;

const char* method_name(Method m) {
  switch (m) {
    case Method::ballotrank: return "ballotrank";
    case Method::minimax: return "minimax";
    case Method::rankedpairs: return "rankedpairs";
    case Method::schulze: return "schulze";
    case Method::irv: return "irv";
    case Method::cv: return "cv";
  }
  return "?";
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

namespace {

const char* format_name(InputFormat f) {
  return f == InputFormat::ballots ? "ballots" : "margins";
}

bool walk_method(Method m) {
  return m == Method::ballotrank || m == Method::cv;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  buf << in.rdbuf();
  return buf.str();
}

// Damping default chain: explicit flag, then $BALLOTRANK_DAMPING, then 0.85.
double resolve_damping(const std::optional<double>& flag) {
  double d = 0.85;
  if (flag) {
    d = *flag;
  } else if (const char* env = std::getenv(kDampingEnvVar)) {
    char* end = nullptr;
    errno = 0;
    d = std::strtod(env, &end);
    if (errno != 0 || end == env || *end != '\0')
      throw std::invalid_argument(std::string(kDampingEnvVar) +
                                  " is not a number: '" + env + "'");
  }
  if (!(d >= 0.0 && d <= 1.0))
    throw std::invalid_argument("damping must lie in [0, 1]");
  return d;
}

// Solver-shaping flags only make sense for the walk methods; the rest of the
// matrix is spelled out in the README. Defaults never conflict.
void validate_method_flags(const CommonOptions& opt) {
  const std::string name = method_name(opt.method);
  if (!walk_method(opt.method)) {
    require(!opt.damping, "--damping does not apply to " + name);
    require(opt.variant == Variant::self_loops,
            "--variant does not apply to " + name);
    require(opt.tolerance == 1e-12, "--tolerance does not apply to " + name);
    require(opt.max_iter == 1000000, "--max-iter does not apply to " + name);
    require(opt.emit_graph.empty(),
            "--emit-graph needs a walk method (ballotrank or cv)");
  }
  if (opt.method == Method::cv)
    require(opt.variant == Variant::self_loops,
            "--variant applies to ballotrank only");
  if (opt.method == Method::irv || opt.method == Method::cv)
    require(opt.format == InputFormat::ballots,
            name + " needs full ballots, not a margin matrix");
}

// One rounding pass through a 12-significant-digit decimal; strtod maps the
// string back to the nearest double, whose shortest JSON form then has at
// most those 12 digits.
double round12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

void round_floats(ordered_json& j) {
  if (j.is_number_float())
    j = round12(j.get<double>());
  else if (j.is_object() || j.is_array())
    for (auto& child : j) round_floats(child);
}

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct LoadedInput {
  std::string name;              // path as given ("-" for stdin)
  std::string bytes;
  std::optional<Profile> profile;  // ballots format only
  MarginMatrix margins;            // derived from the profile if needed
};

LoadedInput parse_input(const CommonOptions& opt, const std::string& name,
                        const std::string& bytes) {
  LoadedInput in;
  in.name = name;
  in.bytes = bytes;
  std::istringstream stream(bytes);
  if (opt.format == InputFormat::ballots) {
    in.profile = parse_ballot_file(stream);
    in.margins = profile_to_margins(*in.profile);
  } else {
    in.margins = parse_margin_csv(stream);
  }
  return in;
}

LoadedInput load_input(const CommonOptions& opt) {
  return parse_input(opt, opt.input, read_input(opt.input));
}

ordered_json input_block(const LoadedInput& in, InputFormat format) {
  ordered_json j;
  j["file"] = in.name;
  j["format"] = format_name(format);
  j["hash"] = fnv1a64_hex(in.bytes);
  return j;
}

ordered_json scores_json(const std::vector<double>& scores,
                         const std::vector<std::string>& names) {
  ordered_json j = ordered_json::object();
  for (size_t i = 0; i < scores.size(); ++i) j[names[i]] = scores[i];
  return j;
}

ordered_json ranking_json(const WeakRanking& r,
                          const std::vector<std::string>& names) {
  auto groups = ordered_json::array();
  for (const auto& g : r.groups) {
    auto group = ordered_json::array();
    for (int id : g) group.push_back(names[id]);
    groups.push_back(std::move(group));
  }
  return groups;
}

ordered_json condorcet_block(const CondorcetReport& c,
                             const std::vector<std::string>& names) {
  ordered_json j;
  j["winner"] = c.winner ? ordered_json(names[*c.winner]) : nullptr;
  j["loser"] = c.loser ? ordered_json(names[*c.loser]) : nullptr;
  auto smith = ordered_json::array();
  for (int id : c.smith_set) smith.push_back(names[id]);
  j["smith_set"] = std::move(smith);
  j["has_cycle"] = c.has_cycle;
  j["connected"] = c.connected;
  return j;
}

ordered_json solver_block(const ScoreVector& s) {
  ordered_json j;
  j["iterations"] = s.iterations;
  j["converged"] = s.converged;
  j["residual"] = s.residual;
  j["cesaro_fallback"] = s.cesaro_fallback;
  j["cross_check_l1"] =
      s.cross_check_l1 ? ordered_json(*s.cross_check_l1) : nullptr;
  return j;
}

// Report plus the pieces the report cannot carry: the transition matrix for
// --emit-graph and the convergence flag for the exit code.
struct Tabulation {
  ordered_json report;
  std::optional<TransitionMatrix> transition;
  bool converged = true;
};

TransitionMatrix cv_transition(const Profile& p) {
  const int n = p.num_candidates();
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
  return t;
}

Tabulation run_tabulation(const CommonOptions& opt, const LoadedInput& in) {
  validate_method_flags(opt);
  const std::vector<std::string>& names = in.margins.names;
  const CondorcetReport condorcet = analyze(in.margins);

  Tabulation tab;
  ordered_json config;
  std::vector<double> score_values;
  WeakRanking ranking;
  std::optional<ScoreVector> solver;
  ordered_json trace = ordered_json::object();

  switch (opt.method) {
    case Method::ballotrank: {
      DampingConfig cfg;
      cfg.damping = resolve_damping(opt.damping);
      cfg.tolerance = opt.tolerance;
      cfg.max_iterations = opt.max_iter;
      BallotRankResult res = in.profile
                                 ? ballotrank(*in.profile, cfg, opt.variant)
                                 : ballotrank(in.margins, cfg, opt.variant);
      config["damping"] = cfg.damping;
      config["variant"] = variant_name(opt.variant);
      config["tolerance"] = cfg.tolerance;
      config["max_iter"] = cfg.max_iterations;
      score_values = res.scores.scores;
      ranking = res.ranking;
      solver = res.scores;
      trace["degenerate"] = aggregates(in.margins).total_wins_sum == 0;
      ordered_json diagonal = ordered_json::object();
      for (int i = 0; i < in.margins.n(); ++i)
        diagonal[names[i]] = res.transition.at(i, i);
      trace["diagonal"] = std::move(diagonal);  // retained flow share
      tab.transition = std::move(res.transition);
      break;
    }
    case Method::cv: {
      DampingConfig cfg;
      // cv is natively undamped; only an explicit flag overrides that.
      cfg.damping = opt.damping.value_or(1.0);
      require(cfg.damping >= 0.0 && cfg.damping <= 1.0,
              "damping must lie in [0, 1]");
      cfg.tolerance = opt.tolerance;
      cfg.max_iterations = opt.max_iter;
      MethodResult res = convergence_voting(*in.profile, cfg);
      config["damping"] = cfg.damping;
      config["variant"] = nullptr;
      config["tolerance"] = cfg.tolerance;
      config["max_iter"] = cfg.max_iterations;
      score_values = res.scores;
      ranking = res.ranking;
      ScoreVector sv;
      sv.scores = res.scores;
      sv.iterations = res.trace["iterations"].get<long long>();
      sv.converged = res.trace["converged"].get<bool>();
      sv.residual = res.trace["residual"].get<double>();
      sv.cesaro_fallback = res.trace["cesaro_fallback"].get<bool>();
      solver = std::move(sv);
      trace = std::move(res.trace);
      tab.transition = cv_transition(*in.profile);
      break;
    }
    case Method::minimax:
    case Method::rankedpairs:
    case Method::schulze:
    case Method::irv: {
      MethodResult res = opt.method == Method::minimax
                             ? minimax(in.margins)
                         : opt.method == Method::rankedpairs
                             ? ranked_pairs(in.margins)
                         : opt.method == Method::schulze
                             ? schulze(in.margins)
                             : irv(*in.profile);
      config["damping"] = nullptr;
      config["variant"] = nullptr;
      config["tolerance"] = nullptr;
      config["max_iter"] = nullptr;
      score_values = res.scores;
      ranking = res.ranking;
      trace = std::move(res.trace);
      break;
    }
  }

  ordered_json report;
  report["input"] = input_block(in, opt.format);
  report["method"] = method_name(opt.method);
  report["config"] = std::move(config);
  report["scores"] = scores_json(score_values, names);
  report["ranking"] = ranking_json(ranking, names);
  auto winners = ordered_json::array();
  for (int id : ranking.groups.front()) winners.push_back(names[id]);
  report["winners"] = std::move(winners);
  report["winner_only"] = ranking.winner_only;
  report["condorcet"] = condorcet_block(condorcet, names);
  report["solver"] = solver ? solver_block(*solver) : ordered_json(nullptr);
  report["trace"] = std::move(trace);
  round_floats(report);

  tab.report = std::move(report);
  tab.converged = !solver || solver->converged;
  return tab;
}

std::string ranking_line(const ordered_json& report) {
  std::string line;
  for (const auto& group : report["ranking"]) {
    if (!line.empty()) line += " > ";
    std::string tied;
    for (const auto& name : group) {
      if (!tied.empty()) tied += " = ";
      tied += name.get<std::string>();
    }
    line += tied;
  }
  if (report["winner_only"].get<bool>()) line += "  (winner only)";
  return line;
}

void print_tabulation_text(const ordered_json& report, std::ostream& out) {
  const auto& input = report["input"];
  out << "input: " << input["file"].get<std::string>() << " ("
      << input["format"].get<std::string>() << ", hash "
      << input["hash"].get<std::string>() << ")\n";
  out << "method: " << report["method"].get<std::string>();
  const auto& config = report["config"];
  if (!config["damping"].is_null()) {
    out << " (d=" << fmt4(config["damping"].get<double>());
    if (!config["variant"].is_null())
      out << ", " << config["variant"].get<std::string>();
    out << ")";
  }
  out << "\n";
  out << "scores:\n";
  for (const auto& [name, value] : report["scores"].items())
    out << "  " << name << " " << fmt4(value.get<double>()) << "\n";
  out << "ranking: " << ranking_line(report) << "\n";
  const auto& c = report["condorcet"];
  out << "condorcet: winner="
      << (c["winner"].is_null() ? "none" : c["winner"].get<std::string>())
      << " loser="
      << (c["loser"].is_null() ? "none" : c["loser"].get<std::string>())
      << " smith={";
  bool first = true;
  for (const auto& name : c["smith_set"]) {
    if (!first) out << ", ";
    out << name.get<std::string>();
    first = false;
  }
  out << "} cycle=" << (c["has_cycle"].get<bool>() ? "yes" : "no")
      << " connected=" << (c["connected"].get<bool>() ? "yes" : "no") << "\n";
  const auto& solver = report["solver"];
  if (!solver.is_null()) {
    out << "solver: " << solver["iterations"].get<long long>()
        << " iterations, "
        << (solver["converged"].get<bool>() ? "converged" : "NOT CONVERGED")
        << ", residual " << fmt4(solver["residual"].get<double>());
    if (solver["cesaro_fallback"].get<bool>()) out << ", cesaro fallback";
    if (!solver["cross_check_l1"].is_null())
      out << ", cross-check L1 "
          << fmt4(solver["cross_check_l1"].get<double>());
    out << "\n";
  }
}

void print_tabulation_csv(const ordered_json& report, std::ostream& out) {
  out << "candidate,score,rank\n";
  const bool winner_only = report["winner_only"].get<bool>();
  int rank = 0;
  for (const auto& group : report["ranking"]) {
    ++rank;
    for (const auto& name : group) {
      const std::string n = name.get<std::string>();
      out << n << "," << fmt12(report["scores"][n].get<double>()) << ",";
      if (winner_only && rank > 1)
        out << "\n";  // collapsed tail carries no rank information
      else
        out << rank << "\n";
    }
  }
}

void write_graph_file(const std::string& path, const TransitionMatrix& t) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write graph file: " + path);
  f << to_dot(t);
}

int input_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return kExitInputError;
}

}  // namespace

ordered_json tabulation_report(const CommonOptions& opt,
                               const std::string& input_name,
                               const std::string& input_bytes) {
  return run_tabulation(opt, parse_input(opt, input_name, input_bytes)).report;
}

int cmd_tabulate(const CommonOptions& opt, std::ostream& out,
                 std::ostream& err) {
  try {
    validate_method_flags(opt);
    LoadedInput in = load_input(opt);
    Tabulation tab = run_tabulation(opt, in);
    if (!opt.emit_graph.empty())
      write_graph_file(opt.emit_graph, *tab.transition);
    switch (opt.output) {
      case OutputFormat::json: out << tab.report.dump(2) << "\n"; break;
      case OutputFormat::text: print_tabulation_text(tab.report, out); break;
      case OutputFormat::csv: print_tabulation_csv(tab.report, out); break;
    }
    return tab.converged ? kExitOk : kExitNotConverged;
  } catch (const std::exception& e) {
    return input_error(err, e.what());
  }
}

int cmd_compare(const CompareOptions& opt, std::ostream& out,
                std::ostream& err) {
  try {
    require(opt.common.emit_graph.empty(),
            "--emit-graph applies to tabulate only");
    LoadedInput in = load_input(opt.common);

    std::vector<Method> methods = opt.methods;
    if (methods.empty()) {
      methods = {Method::ballotrank, Method::minimax, Method::rankedpairs,
                 Method::schulze};
      if (opt.common.format == InputFormat::ballots) {
        methods.push_back(Method::irv);
        methods.push_back(Method::cv);
      }
    }

    auto reports = ordered_json::array();
    ordered_json winners = ordered_json::object();
    std::optional<std::vector<std::string>> reference;
    bool match = true;
    bool converged = true;
    for (Method m : methods) {
      CommonOptions one = opt.common;
      one.method = m;
      if (!walk_method(m)) {
        // Solver-shaping flags target the walk methods; the rest run bare.
        one.damping.reset();
        one.variant = Variant::self_loops;
        one.tolerance = 1e-12;
        one.max_iter = 1000000;
      }
      Tabulation tab = run_tabulation(one, in);
      converged = converged && tab.converged;
      std::vector<std::string> winner_set;
      for (const auto& w : tab.report["winners"])
        winner_set.push_back(w.get<std::string>());
      std::sort(winner_set.begin(), winner_set.end());
      if (!reference)
        reference = winner_set;
      else if (winner_set != *reference)
        match = false;
      winners[method_name(m)] = tab.report["winners"];
      reports.push_back(std::move(tab.report));
    }

    ordered_json report;
    report["input"] = input_block(in, opt.common.format);
    report["reports"] = std::move(reports);
    report["summary"]["winners"] = std::move(winners);
    report["summary"]["match"] = match;

    switch (opt.common.output) {
      case OutputFormat::json:
        out << report.dump(2) << "\n";
        break;
      case OutputFormat::csv: {
        out << "method,winners,match\n";
        for (const auto& [name, group] : report["summary"]["winners"].items()) {
          std::string joined;
          for (const auto& w : group) {
            if (!joined.empty()) joined += "|";
            joined += w.get<std::string>();
          }
          out << name << "," << joined << "," << (match ? "true" : "false")
              << "\n";
        }
        break;
      }
      case OutputFormat::text: {
        const auto& input = report["input"];
        out << "input: " << input["file"].get<std::string>() << " ("
            << input["format"].get<std::string>() << ", hash "
            << input["hash"].get<std::string>() << ")\n";
        for (const auto& [name, group] : report["summary"]["winners"].items()) {
          std::string joined;
          for (const auto& w : group) {
            if (!joined.empty()) joined += " = ";
            joined += w.get<std::string>();
          }
          out << "  " << name << std::string(13 - name.size(), ' ') << joined
              << "\n";
        }
        out << "match: " << (match ? "yes" : "no") << "\n";
        break;
      }
    }
    return converged ? kExitOk : kExitNotConverged;
  } catch (const std::exception& e) {
    return input_error(err, e.what());
  }
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const CommonOptions& c = opt.common;
    require(c.method == Method::ballotrank, "sweep tabulates ballotrank only");
    require(!c.damping, "--damping conflicts with the sweep grid");
    require(c.emit_graph.empty(), "--emit-graph applies to tabulate only");
    require(opt.grid_step > 0, "grid step must be positive");
    require(opt.grid_start >= 0 && opt.grid_stop <= 1 &&
                opt.grid_start <= opt.grid_stop,
            "sweep grid must lie in [0, 1]");
    LoadedInput in = load_input(c);

    std::vector<double> grid;
    for (long long k = 0;; ++k) {
      double v = opt.grid_start + static_cast<double>(k) * opt.grid_step;
      if (v > opt.grid_stop + opt.grid_step * 1e-9) break;
      grid.push_back(std::min(v, opt.grid_stop));
    }

    DampingConfig base;
    base.tolerance = c.tolerance;
    base.max_iterations = c.max_iter;
    std::vector<SweepRow> rows =
        in.profile ? damping_sweep(*in.profile, grid, c.variant, base)
                   : damping_sweep(in.margins, grid, c.variant, base);

    bool converged = true;
    for (const auto& row : rows) converged = converged && row.scores.converged;

    if (c.output == OutputFormat::json) {
      ordered_json report;
      report["input"] = input_block(in, c.format);
      report["config"]["variant"] = variant_name(c.variant);
      report["config"]["tolerance"] = c.tolerance;
      report["config"]["max_iter"] = c.max_iter;
      report["config"]["grid"]["start"] = opt.grid_start;
      report["config"]["grid"]["stop"] = opt.grid_stop;
      report["config"]["grid"]["step"] = opt.grid_step;
      auto rows_json = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json r;
        r["damping"] = row.damping;
        r["scores"] = scores_json(row.scores.scores, in.margins.names);
        auto winners = ordered_json::array();
        for (int id : row.winners) winners.push_back(in.margins.names[id]);
        r["winners"] = std::move(winners);
        r["converged"] = row.scores.converged;
        r["iterations"] = row.scores.iterations;
        r["winner_changed"] = row.winner_changed;
        rows_json.push_back(std::move(r));
      }
      report["rows"] = std::move(rows_json);
      round_floats(report);
      out << report.dump(2) << "\n";
    } else {
      // csv and text both emit the plot-ready table
      out << sweep_to_csv(rows, in.margins.names);
    }
    return converged ? kExitOk : kExitNotConverged;
  } catch (const std::exception& e) {
    return input_error(err, e.what());
  }
}

int cmd_criteria(const CriteriaOptions& opt, std::ostream& out,
                 std::ostream& err) {
  try {
    const CommonOptions& c = opt.common;
    require(c.method == Method::ballotrank,
            "criteria checks the ballotrank scorer only");
    require(c.emit_graph.empty(), "--emit-graph applies to tabulate only");
    require(opt.trials >= 0, "--trials must be nonnegative");
    require(opt.suite == "random" || opt.suite == "fixtures" ||
                opt.suite == "all",
            "--suite must be random, fixtures, or all");
    const double base_damping = resolve_damping(c.damping);

    std::vector<CriterionOutcome> outcomes;
    std::vector<std::optional<double>> ran_at;  // null for fixture replays
    if ((opt.suite == "random" || opt.suite == "all") && opt.trials > 0) {
      PositiveCheckConfig pc;
      pc.damping.damping = base_damping;
      pc.damping.tolerance = c.tolerance;
      pc.damping.max_iterations = c.max_iter;
      pc.variant = c.variant;
      pc.trials = opt.trials;
      pc.seed = opt.seed;
      for (Criterion crit :
           {Criterion::anonymity, Criterion::neutrality, Criterion::majority,
            Criterion::condorcet_loser, Criterion::pareto, Criterion::smith}) {
        PositiveCheckConfig one = pc;
        // majority and smith are undamped claims; without an explicit
        // --damping they run at d = 1 rather than the tool default.
        if (!c.damping &&
            (crit == Criterion::majority || crit == Criterion::smith))
          one.damping.damping = 1.0;
        outcomes.push_back(check_positive(crit, one));
        ran_at.push_back(one.damping.damping);
      }
    }
    if (opt.suite == "fixtures" || opt.suite == "all") {
      for (Criterion crit :
           {Criterion::iia, Criterion::monotonicity, Criterion::later_no_harm,
            Criterion::no_show, Criterion::cloning}) {
        outcomes.push_back(replay_counterexample(crit));
        ran_at.push_back(std::nullopt);
      }
    }

    int failures = 0;
    for (const auto& o : outcomes)
      if (o.verdict == Verdict::fixture_mismatch ||
          (o.verdict == Verdict::counterexample_found && !o.report_only))
        ++failures;

    ordered_json report;
    report["suite"] = opt.suite;
    report["config"]["trials"] = opt.trials;
    report["config"]["seed"] = opt.seed;
    report["config"]["damping"] = base_damping;
    report["config"]["variant"] = variant_name(c.variant);
    auto items = ordered_json::array();
    for (size_t i = 0; i < outcomes.size(); ++i) {
      const auto& o = outcomes[i];
      ordered_json item;
      item["criterion"] = criterion_name(o.criterion);
      item["verdict"] = verdict_name(o.verdict);
      item["damping"] = ran_at[i] ? ordered_json(*ran_at[i]) : nullptr;
      item["trials"] = o.trials;
      item["violations"] = o.violations;
      item["report_only"] = o.report_only;
      item["detail"] = o.detail;
      item["witness"] = o.witness.empty() ? ordered_json(nullptr)
                                          : ordered_json(o.witness);
      items.push_back(std::move(item));
    }
    report["criteria"] = std::move(items);
    report["failures"] = failures;
    round_floats(report);

    switch (c.output) {
      case OutputFormat::json:
        out << report.dump(2) << "\n";
        break;
      case OutputFormat::csv:
        out << "criterion,verdict,trials,violations,report_only\n";
        for (const auto& o : outcomes)
          out << criterion_name(o.criterion) << "," << verdict_name(o.verdict)
              << "," << o.trials << "," << o.violations << ","
              << (o.report_only ? "true" : "false") << "\n";
        break;
      case OutputFormat::text:
        for (const auto& o : outcomes) {
          std::string name = criterion_name(o.criterion);
          out << name << std::string(16 - name.size(), ' ')
              << verdict_name(o.verdict);
          if (o.trials > 0)
            out << "  (" << o.trials << " trials, " << o.violations
                << " violations" << (o.report_only ? ", report only" : "")
                << ")";
          out << "\n";
        }
        out << "failures: " << failures << "\n";
        break;
    }
    return failures == 0 ? kExitOk : 1;
  } catch (const std::exception& e) {
    return input_error(err, e.what());
  }
}

}  // namespace ballotrank::cli
