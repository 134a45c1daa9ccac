#include "nlc/config.hpp"

#include <cstdlib>
#include <string>

namespace nlc {

namespace {

int read_limit() {
  const char* env = std::getenv("NLCSEQ_EXHAUSTIVE_LIMIT");
  if (env == nullptr || *env == '\0') return 20;
  try {
    int v = std::stoi(env);
    if (v < 1) return 20;
    return v > 62 ? 62 : v;
  } catch (...) {
    return 20;
  }
}

}  // namespace

int exhaustive_limit() {
  static const int limit = read_limit();
  return limit;
}

}  // namespace nlc
