#include "arnold/config.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "arnold/error.hpp"

namespace arnold {

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, std::string(name) + "='" + v + "' is not an integer");
  }
}

}  // namespace

int max_n() { return env_int("ARNOLD_MAX_N", kDefaultMaxN); }

int thread_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  int t = env_int("ARNOLD_THREADS", hw > 0 ? hw : 1);
  return t < 1 ? 1 : t;
}

void require_size(int n) {
  if (n < 1 || n > max_n())
    throw Error(ErrorCode::SizeCapExceeded,
                "n=" + std::to_string(n) + " outside 1.." + std::to_string(max_n()) + " (set ARNOLD_MAX_N to raise)");
}

}  // namespace arnold
