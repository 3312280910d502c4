// Wall-clock comparison of the serial reference kernels against their OpenMP
// counterparts: the power-method matvec, damping-sweep rows, and criteria
// trials. Each pairing also rechecks bit-identical output, which is the
// contract that makes the parallel paths drop-in replacements.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <vector>

#include "ballotrank/criteria.hpp"
#include "ballotrank/margins.hpp"
#include "ballotrank/parallel.hpp"
#include "ballotrank/solver.hpp"

namespace {

using namespace ballotrank;
namespace chrono = std::chrono;

double now_ms() {
  return chrono::duration<double, std::milli>(
             chrono::steady_clock::now().time_since_epoch())
      .count();
}

TransitionMatrix random_walk_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  TransitionMatrix t;
  for (int i = 0; i < n; ++i) t.names.push_back("c" + std::to_string(i));
  t.entries.resize(static_cast<size_t>(n) * n);
  for (auto& e : t.entries)
    e = static_cast<double>(eng() >> 11) * 0x1p-53 + 1e-6;
  for (int b = 0; b < n; ++b) {  // column-normalize
    double sum = 0;
    for (int a = 0; a < n; ++a) sum += t.at(a, b);
    for (int a = 0; a < n; ++a) t.at(a, b) /= sum;
  }
  return t;
}

void bench_matvec() {
  std::printf("matvec (serial reference vs omp rows)\n");
  for (int n : {64, 256, 1024}) {
    TransitionMatrix t = random_walk_matrix(n, 42 + n);
    std::vector<double> x(n, 1.0 / n), ys(n), yp(n);
    const long long reps =
        std::max(10LL, 50000000LL / (static_cast<long long>(n) * n));
    double t0 = now_ms();
    for (long long r = 0; r < reps; ++r) matvec_serial(t, x, ys);
    double t1 = now_ms();
    for (long long r = 0; r < reps; ++r) matvec_parallel(t, x, yp);
    double t2 = now_ms();
    bool identical = ys == yp;
    std::printf(
        "  n=%4d  reps=%6lld  serial %8.2f ms  parallel %8.2f ms  "
        "speedup %5.2fx  identical %s\n",
        n, reps, t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1),
        identical ? "yes" : "NO");
  }
}

void bench_sweep() {
  std::printf("damping sweep (rows across threads)\n");
  Profile p = random_profile(11, 24, 2001);
  MarginMatrix m = profile_to_margins(p);
  std::vector<double> grid;
  for (int k = 0; k <= 76; ++k) grid.push_back(k * 0.0125);

  set_threads(1);
  double t0 = now_ms();
  auto rows1 = damping_sweep(m, grid);
  double t1 = now_ms();
  set_threads(max_threads());
  double t2 = now_ms();
  auto rowsN = damping_sweep(m, grid);
  double t3 = now_ms();

  bool identical = rows1.size() == rowsN.size();
  for (size_t i = 0; identical && i < rows1.size(); ++i)
    identical = rows1[i].scores.scores == rowsN[i].scores.scores;
  std::printf(
      "  n=24 voters=2001 grid=%zu  1 thread %8.2f ms  %d threads %8.2f ms  "
      "speedup %5.2fx  identical %s\n",
      grid.size(), t1 - t0, max_threads(), t3 - t2, (t1 - t0) / (t3 - t2),
      identical ? "yes" : "NO");
}

void bench_criteria() {
  std::printf("criteria trials (trials across threads)\n");
  PositiveCheckConfig cfg;
  cfg.trials = 512;
  cfg.seed = 5;

  set_threads(1);
  double t0 = now_ms();
  auto out1 = check_positive(Criterion::neutrality, cfg);
  double t1 = now_ms();
  set_threads(max_threads());
  double t2 = now_ms();
  auto outN = check_positive(Criterion::neutrality, cfg);
  double t3 = now_ms();

  bool identical = out1.violations == outN.violations &&
                   out1.verdict == outN.verdict && out1.detail == outN.detail;
  std::printf(
      "  neutrality trials=%lld  1 thread %8.2f ms  %d threads %8.2f ms  "
      "speedup %5.2fx  identical %s\n",
      cfg.trials, t1 - t0, max_threads(), t3 - t2, (t1 - t0) / (t3 - t2),
      identical ? "yes" : "NO");
}

}  // namespace

int main() {
  std::printf("%d thread(s) available\n", max_threads());
  bench_matvec();
  bench_sweep();
  bench_criteria();
  return 0;
}
