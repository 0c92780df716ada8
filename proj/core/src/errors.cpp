#include "tracta/errors.hpp"

#include <cstdlib>

namespace tracta {

std::uint64_t enumeration_guard() {
  constexpr std::uint64_t kDefault = 10'000'000;
  const char* env = std::getenv("TRACTA_GUARD");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') return kDefault;
  return v;
}

void check_guard(std::uint64_t size, const std::string& what) {
  std::uint64_t g = enumeration_guard();
  if (size > g) {
    throw GuardExceeded(what + ": " + std::to_string(size) +
                        " candidates exceed guard " + std::to_string(g));
  }
}

}  // namespace tracta
