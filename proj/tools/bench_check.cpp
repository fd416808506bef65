// Compares the serial reference grid kernel with the OpenMP one on a
// representative check, and verifies the reports are bit-identical.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lcm/check.hpp"
#include "lcm/families.hpp"

namespace {

double run_once(const lcm::LogDerivProvider& p, lcm::ExecMode mode,
                lcm::CheckReport* out) {
  const lcm::Interval iv{-0.99, 50.0};
  const auto t0 = std::chrono::steady_clock::now();
  *out = lcm::check_lcm(p, iv, 8, 2000, 1e-9, mode);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
  lcm::FamilySpec spec;
  spec.kind = lcm::FamilyKind::RecipGammaRoot;
  const auto provider = lcm::make_provider(spec, 20);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  lcm::CheckReport serial, parallel;
  // warmup
  run_once(*provider, lcm::ExecMode::Serial, &serial);

  const double t_serial = run_once(*provider, lcm::ExecMode::Serial, &serial);
  const double t_parallel = run_once(*provider, lcm::ExecMode::Parallel, &parallel);

  bool identical = serial.pass == parallel.pass &&
                   serial.records.size() == parallel.records.size();
  for (std::size_t i = 0; identical && i < serial.records.size(); ++i)
    identical = serial.records[i].min_signed == parallel.records[i].min_signed &&
                serial.records[i].argmin == parallel.records[i].argmin;

  std::printf("serial:   %.3f s\n", t_serial);
  std::printf("parallel: %.3f s\n", t_parallel);
  std::printf("speedup:  %.2fx\n", t_serial / t_parallel);
  std::printf("reports bit-identical: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
