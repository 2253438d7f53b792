#pragma once

#ifdef _OPENMP
#include <omp.h>
#define LEGTORUS_OMP_PARALLEL_FOR_DYNAMIC _Pragma("omp parallel for schedule(dynamic)")
#else
#define LEGTORUS_OMP_PARALLEL_FOR_DYNAMIC
#endif

namespace legtorus {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace legtorus
