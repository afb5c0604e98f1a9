#pragma once

#include <cstdint>
#include <string>

#include "arnold/error.hpp"

namespace arnold {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, std::to_string(a) + " * " + std::to_string(b));
  return r;
}

}  // namespace arnold
