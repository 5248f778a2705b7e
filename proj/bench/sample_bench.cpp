// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Compares the serial and OpenMP sampling kernels on identical inputs and
// checks they produce bitwise-equal extrema while doing it.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcontact/oracle.hpp"

using namespace qc;

namespace {

template <typename F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main() {
  Ellipsoid e = Ellipsoid::canonical(1.3, 0.9, 0.4, RigidMotion::translate({0.3, -0.2, 1.7}));
  Quadric q = Quadric::from_coefficients(0.5, -0.25, 1.0, 0.1, 0.0, -0.3, 0.2, 0.0, -0.7, -1.0);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif
  std::printf("%6s %12s %12s %8s %s\n", "n", "serial[s]", "parallel[s]", "speedup", "match");

  for (int n : {256, 512, 1024, 2048}) {
    SampleResult rs, rp;
    double ts = time_best_of(3, [&] { rs = sample_intersection_serial(e, q, n); });
    double tp = time_best_of(3, [&] { rp = sample_intersection(e, q, n); });
    bool match = rs.min == rp.min && rs.max == rp.max && rs.verdict == rp.verdict;
    std::printf("%6d %12.6f %12.6f %8.2f %s\n", n, ts, tp, ts / tp, match ? "yes" : "NO");
    if (!match) return 1;
  }
  return 0;
}
