#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace polaritylab {

/// Every batch kernel has a plain serial loop kept as the reference path and
/// an OpenMP path; both must produce identical output.
enum class Execution { serial, parallel };

/// Number of OpenMP threads used by the parallel path (>= 1).
void set_worker_count(int workers);
int worker_count();
int available_cores();

/// out[i] = fn(i) for i in [0, count). Results land in index order, so the
/// output never depends on scheduling.
template <typename T, typename Fn>
std::vector<T> indexed_map(std::size_t count, Fn&& fn, Execution exec) {
  std::vector<T> out(count);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  return out;
}

}  // namespace polaritylab
