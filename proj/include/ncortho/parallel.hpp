#ifndef NCORTHO_PARALLEL_HPP
#define NCORTHO_PARALLEL_HPP

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace ncortho {

// Parallel loop over [0, n). Iterations must be independent; each result is
// written to its own slot, so serial and parallel runs are bit-identical.
template <typename Fn>
void parallel_for(std::ptrdiff_t n, Fn&& fn) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
#else
  for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
#endif
}

inline int parallel_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ncortho

#endif
