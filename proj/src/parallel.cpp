#include "immig/parallel.hpp"

#include <cstdlib>
#include <string>

namespace immig {

unsigned default_threads() {
  if (const char* env = std::getenv("IMMIGRATE_SIM_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace immig
