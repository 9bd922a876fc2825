#include "hermlift/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace hermlift {

int worker_count() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("HERMLIFT_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0 && cap < n) n = cap;
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
  return n < 1 ? 1 : n;
}

}  // namespace hermlift
