// Timing comparison of the serial reference kernels against the OpenMP
// variants. Also checks the two produce bit-identical results, since the
// parallel kernels are written with deterministic reductions.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "syncav/diagnostics.hpp"
#include "syncav/kernels.hpp"
#include "syncav/presets.hpp"
#include "syncav/rng.hpp"

namespace {

using syncav::kernels::Exec;

double elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

template <typename F>
double time_call(F&& f, double* out) {
  const auto t0 = std::chrono::steady_clock::now();
  *out = f();
  return elapsed_ms(t0);
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms,
              identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel variants run serially\n");
#endif

  const auto space = syncav::MetricSpace::circle();
  const std::size_t n_atoms = 6000;
  std::vector<double> pts(n_atoms), w(n_atoms, 1.0 / double(n_atoms));
  for (std::size_t i = 0; i < n_atoms; ++i)
    pts[i] = syncav::unit_uniform(7, static_cast<std::int64_t>(i));

  double a = 0.0, b = 0.0;
  {
    const double ts = time_call(
        [&] { return syncav::kernels::pairwise_mean_distance(space, pts, w, Exec::Serial); },
        &a);
    const double tp = time_call(
        [&] { return syncav::kernels::pairwise_mean_distance(space, pts, w, Exec::Parallel); },
        &b);
    report("pairwise_mean_distance", ts, tp, a == b);
  }
  {
    const double ts = time_call(
        [&] { return syncav::kernels::max_pairwise_distance(space, pts, Exec::Serial); }, &a);
    const double tp = time_call(
        [&] { return syncav::kernels::max_pairwise_distance(space, pts, Exec::Parallel); },
        &b);
    report("max_pairwise_distance", ts, tp, a == b);
  }

  const auto rp = syncav::build_preset("halving-ifs", {});
  const auto path = rp.base().sample_path(11);
  {
    const std::int64_t n = 512;
    const double eps = 1.0 / 256.0;
    const double ts = time_call(
        [&] { return syncav::strong_sync_profile(rp, path, eps, n, Exec::Serial); }, &a);
    const double tp = time_call(
        [&] { return syncav::strong_sync_profile(rp, path, eps, n, Exec::Parallel); }, &b);
    report("strong_sync_profile", ts, tp, a == b);
  }
  {
    std::vector<double> seeds(512);
    for (std::size_t i = 0; i < seeds.size(); ++i)
      seeds[i] = syncav::unit_uniform(13, static_cast<std::int64_t>(i));
    const double ts = time_call(
        [&] {
          const auto v = syncav::kernels::pullback_batch(rp, path, 4096, seeds, Exec::Serial);
          return v.back();
        },
        &a);
    const double tp = time_call(
        [&] {
          const auto v =
              syncav::kernels::pullback_batch(rp, path, 4096, seeds, Exec::Parallel);
          return v.back();
        },
        &b);
    report("pullback_batch", ts, tp, a == b);
  }
  return 0;
}
