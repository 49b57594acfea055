#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permob {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when an input violates a documented precondition.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when an exponential routine would exceed its configured size cap.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("signed 64-bit overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("signed 64-bit overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("signed 64-bit overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace checked
}  // namespace permob
