#include "pptower/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pptower {

int worker_count() {
  static const int count = [] {
    const char* env = std::getenv("PP_THREADS");
    if (env == nullptr) return 1;
    try {
      int n = std::stoi(env);
      if (n < 1) return 1;
      if (n > 256) return 256;
      return n;
    } catch (const std::exception&) {
      return 1;
    }
  }();
  return count;
}

}  // namespace pptower
