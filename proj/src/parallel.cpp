#include "hrec/parallel.hpp"

namespace hrec::par {

namespace {
int g_requested_threads = 0;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int k) {
  g_requested_threads = k;
#ifdef _OPENMP
  if (k > 0) omp_set_num_threads(k);
#endif
}

} // namespace hrec::par
