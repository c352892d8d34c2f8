#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace soncray {

// Execution mode for the data-parallel kernels. The serial path is the
// reference implementation; the parallel path must produce identical results.
enum class Exec { serial, parallel };

template <typename Body>
void parallel_for(Exec mode, std::size_t count, Body&& body) {
#ifdef _OPENMP
  if (mode == Exec::parallel && count > 1) {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(soncray_parallel_for_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < count; ++i) body(i);
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace soncray
