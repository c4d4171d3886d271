#include "icosa/parallel.hpp"

#include <cstdlib>
#include <string>

namespace icosa {

int defaultThreads() {
  if (const char* env = std::getenv("ICOSA_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace icosa
