#include "srg/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace srg {

namespace {
int g_threads = 0;

int default_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}
}  // namespace

int thread_count() { return g_threads > 0 ? g_threads : default_threads(); }

void set_thread_count(int n) { g_threads = n > 0 ? n : 0; }

void init_threads_from_env() {
  if (const char* v = std::getenv("SRG_THREADS")) {
    try {
      set_thread_count(std::stoi(v));
    } catch (const std::exception&) {
      set_thread_count(0);
    }
  }
}

}  // namespace srg
