// Timing comparison of the serial reference kernels against the OpenMP
// variants, plus a full commutant solve. Usage: bench_superop [n] [reps].

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "klab/commutant.hpp"
#include "klab/kernels.hpp"
#include "klab/rng.hpp"

using namespace klab;
using clk = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clk::now();
    f();
    const auto t1 = clk::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 16;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 5;
  if (n < 2 || reps < 1) {
    std::fprintf(stderr, "usage: bench_superop [n>=2] [reps>=1]\n");
    return 2;
  }

  TrialRng rng(1234, 0);
  const Mat a = rng.hermitian_gaussian(n);

  volatile double sink = 0.0;
  const double t_serial = time_ms(reps, [&] { sink = kernels::commutator_superop_serial(a).norm(); });
  const double t_omp = time_ms(reps, [&] { sink = kernels::commutator_superop(a).norm(); });
  const double t_anti_serial =
      time_ms(reps, [&] { sink = kernels::anti_intertwiner_superop_serial(a).norm(); });
  const double t_anti_omp = time_ms(reps, [&] { sink = kernels::anti_intertwiner_superop(a).norm(); });

  const std::vector<Mat> gens{a};
  const double t_commutant = time_ms(1, [&] { sink = commutant_basis(gens).dimension(); });
  (void)sink;

  std::printf("n = %d (superoperator %d x %d), best of %d\n", n, n * n, n * n, reps);
  std::printf("%-32s %10.3f ms\n", "commutator superop (serial)", t_serial);
  std::printf("%-32s %10.3f ms  (%.2fx)\n", "commutator superop (omp)", t_omp, t_serial / t_omp);
  std::printf("%-32s %10.3f ms\n", "anti-intertwiner superop (serial)", t_anti_serial);
  std::printf("%-32s %10.3f ms  (%.2fx)\n", "anti-intertwiner superop (omp)", t_anti_omp,
              t_anti_serial / t_anti_omp);
  std::printf("%-32s %10.3f ms\n", "full commutant solve", t_commutant);
  return 0;
}
