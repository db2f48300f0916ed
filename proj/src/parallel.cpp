#include "polaritylab/parallel.hpp"

#include <omp.h>

#include <algorithm>

namespace polaritylab {

void set_worker_count(int workers) { omp_set_num_threads(std::max(1, workers)); }

int worker_count() { return omp_get_max_threads(); }

int available_cores() { return std::max(1, omp_get_num_procs()); }

}  // namespace polaritylab
