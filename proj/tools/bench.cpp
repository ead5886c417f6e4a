// Timing harness: run-accelerated walk vs the single-step reference, and
// the OpenMP range sweep vs its serial twin. Results are checked for
// agreement before any number is reported.

#include "pellwalk/cycle.hpp"
#include "pellwalk/sweep.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <vector>

using namespace pellwalk;

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double best_ms(int repeat, F&& body) {
  double best = 0.0;
  for (int i = 0; i < repeat; ++i) {
    Clock::time_point t0 = Clock::now();
    body();
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (i == 0 || ms < best) {
      best = ms;
    }
  }
  return best;
}

std::vector<BigInt> nonsquares(long lo, long hi) {
  std::vector<BigInt> out;
  for (long d = lo; d <= hi; ++d) {
    if (!is_square(BigInt(d))) {
      out.emplace_back(d);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  long step_max = 300;
  long sweep_max = 2000;
  int repeat = 3;

  CLI::App app{"pellwalk benchmarks"};
  app.add_option("--step-max", step_max, "largest D for the walk comparison (default 300)");
  app.add_option("--sweep-max", sweep_max, "largest D for the sweep comparison (default 2000)");
  app.add_option("--repeat", repeat, "measurements per timing, best is kept (default 3)");
  CLI11_PARSE(app, argc, argv);
  if (step_max < 2 || sweep_max < 2 || repeat < 1) {
    std::fprintf(stderr, "bench: bounds must be >= 2 and repeat >= 1\n");
    return 2;
  }

  const std::vector<BigInt> ds = nonsquares(2, step_max);

  // Agreement first: the reference letters must aggregate to the
  // accelerated word for every D measured.
  for (const BigInt& d : ds) {
    if (walk_single_step(d).word != solve(d).word) {
      std::fprintf(stderr, "bench: walks disagree at D=%s\n", d.get_str().c_str());
      return 1;
    }
  }

  double single_ms = best_ms(repeat, [&] {
    for (const BigInt& d : ds) {
      walk_single_step(d);
    }
  });
  double accel_ms = best_ms(repeat, [&] {
    for (const BigInt& d : ds) {
      solve(d);
    }
  });

  if (sweep_range(BigInt(2), BigInt(sweep_max)) !=
      sweep_range_serial(BigInt(2), BigInt(sweep_max))) {
    std::fprintf(stderr, "bench: sweeps disagree on [2,%ld]\n", sweep_max);
    return 1;
  }
  double serial_ms = best_ms(repeat, [&] { sweep_range_serial(BigInt(2), BigInt(sweep_max)); });
  double parallel_ms = best_ms(repeat, [&] { sweep_range(BigInt(2), BigInt(sweep_max)); });

  std::printf("walk comparison, nonsquare D in [2,%ld]:\n", step_max);
  std::printf("  single-step reference  %10.2f ms\n", single_ms);
  std::printf("  run-accelerated        %10.2f ms   (%.1fx)\n", accel_ms,
              accel_ms > 0 ? single_ms / accel_ms : 0.0);
  std::printf("sweep comparison, nonsquare D in [2,%ld]:\n", sweep_max);
  std::printf("  serial reference       %10.2f ms\n", serial_ms);
  std::printf("  openmp, %2d threads     %10.2f ms   (%.1fx)\n", omp_get_max_threads(),
              parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
  return 0;
}
