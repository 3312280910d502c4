#pragma once

// Command implementations behind the ballotrank binary. main() only parses
// flags and forwards here, so everything below is unit-testable in-process.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ballotrank/criteria.hpp"
#include "ballotrank/rivals.hpp"
#include "ballotrank/solver.hpp"

namespace ballotrank::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNotConverged = 3;

enum class InputFormat { ballots, margins };
enum class OutputFormat { json, csv, text };
enum class Method { ballotrank, minimax, rankedpairs, schulze, irv, cv };

const char* method_name(Method m);

struct CommonOptions {
  std::string input;  // path; "-" reads stdin
  InputFormat format = InputFormat::ballots;
  Method method = Method::ballotrank;
  std::optional<double> damping;  // falls back to $BALLOTRANK_DAMPING, then 0.85
  Variant variant = Variant::self_loops;
  double tolerance = 1e-12;
  long long max_iter = 1000000;
  OutputFormat output = OutputFormat::json;
  std::string emit_graph;  // DOT path; ballotrank/cv only
};

struct CompareOptions {
  CommonOptions common;           // common.method is ignored
  std::vector<Method> methods;    // empty = every method the input supports
};

struct SweepOptions {
  CommonOptions common;
  double grid_start = 0.0;
  double grid_stop = 1.0;
  double grid_step = 0.05;
};

struct CriteriaOptions {
  CommonOptions common;          // input unused; method must stay ballotrank
  std::string suite = "all";     // random | fixtures | all
  long long trials = 300;
  std::uint64_t seed = 1;
};

// Self-contained tabulation report: echoes the input descriptor and the full
// configuration, so re-running the tool with them reproduces the report
// bit-identically. Doubles carry 12 significant digits.
nlohmann::ordered_json tabulation_report(const CommonOptions& opt,
                                         const std::string& input_name,
                                         const std::string& input_bytes);

int cmd_tabulate(const CommonOptions& opt, std::ostream& out,
                 std::ostream& err);
int cmd_compare(const CompareOptions& opt, std::ostream& out,
                std::ostream& err);
int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err);
int cmd_criteria(const CriteriaOptions& opt, std::ostream& out,
                 std::ostream& err);

// FNV-1a/64 over the raw bytes, rendered as 16 hex digits; the report's
// input hash.
std::string fnv1a64_hex(const std::string& bytes);

// Environment override for the default damping factor.
inline constexpr const char* kDampingEnvVar = "BALLOTRANK_DAMPING";

}  // namespace ballotrank::cli
