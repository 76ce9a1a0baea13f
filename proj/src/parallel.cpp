#include "conifold/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace conifold {

unsigned default_thread_count() {
  if (const char* env = std::getenv("CONIFOLD_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

unsigned resolve_thread_count(unsigned requested) {
  return requested != 0 ? requested : default_thread_count();
}

}  // namespace conifold
