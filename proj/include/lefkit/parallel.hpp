#ifndef LEFKIT_PARALLEL_HPP
#define LEFKIT_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lefkit::par {

/// True when the parallel path is compiled in.
inline bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

/// Runs fn(i) for every i in [0, count). With workers <= 1, or without
/// OpenMP, the serial reference path runs; otherwise iterations are spread
/// over the requested number of threads. fn must confine its writes to
/// per-index slots. The first exception thrown by any iteration is rethrown
/// after all iterations finish, so both paths fail the same way.
template <typename Fn>
void for_each_index(std::size_t count, int workers, Fn&& fn) {
#ifdef _OPENMP
  if (workers > 1 && count > 1) {
    std::exception_ptr first;
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(lefkit_for_each_index)
        if (!first) first = std::current_exception();
      }
    }
    if (first) std::rethrow_exception(first);
    return;
  }
#else
  (void)workers;
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace lefkit::par

#endif
