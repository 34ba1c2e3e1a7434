#pragma once

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hrec::par {

int max_threads();
void set_threads(int k); // k <= 0 restores the runtime default

/// Parallel loop over [0, n). f(i) must be independent across i.
template <class F>
void for_each(std::int64_t n, F&& f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t i = 0; i < n; ++i) f(i);
}

template <class F>
void for_each_dynamic(std::int64_t n, F&& f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (std::int64_t i = 0; i < n; ++i) f(i);
}

// Blocked sum with a fixed block count: the summation order does not depend
// on the number of threads, so results are bitwise reproducible.
template <class F>
double sum(std::int64_t n, F&& f) {
  if (n <= 0) return 0.0;
  const std::int64_t nblocks = n < 1024 ? n : 1024;
  std::vector<double> partial(static_cast<std::size_t>(nblocks), 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t b = 0; b < nblocks; ++b) {
    const std::int64_t lo = b * n / nblocks;
    const std::int64_t hi = (b + 1) * n / nblocks;
    double s = 0.0;
    for (std::int64_t i = lo; i < hi; ++i) s += f(i);
    partial[static_cast<std::size_t>(b)] = s;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

template <class F>
double max_abs(std::int64_t n, F&& f) {
  double m = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : m)
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    const double v = f(i);
    const double a = v < 0 ? -v : v;
    if (a > m) m = a;
  }
  return m;
}

} // namespace hrec::par
