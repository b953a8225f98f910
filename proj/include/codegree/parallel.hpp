#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace codegree {

enum class Execution { serial, parallel };

/// Evaluates fn(i) for i in [0, count) and returns the results in index
/// order. The serial path is the reference; the parallel path distributes
/// points over OpenMP threads and must produce the identical vector.
template <class Result, class Fn>
std::vector<Result> evaluate_points(std::size_t count, Fn&& fn, Execution exec) {
  std::vector<Result> out(count);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < static_cast<long>(count); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(codegree_evaluate_points)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace codegree
