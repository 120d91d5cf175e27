#pragma once

// 128-bit exact integer support.
//
// Every coefficient and accumulator in the library is an Int.  Arithmetic
// that could conceivably wrap goes through the checked helpers; the result
// is exact or an exception, never a silently wrong value.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace fpbound {

using Int = __int128;

std::string to_string(Int v);

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("128-bit add overflow");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("128-bit subtract overflow");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("128-bit multiply overflow");
  return r;
}

// Nonnegative gcd; gcd(0, 0) = 0.  Local implementation because __int128 is
// not an integral type under a strict -std= dialect, so std::gcd may not
// accept it.
Int gcd_int(Int a, Int b);

// Checked narrowing for interfaces that want machine integers (JSON, DP
// tables).  Throws when the value does not fit.
std::int64_t to_i64(Int v);

}  // namespace fpbound

// Stream output for __int128, used by error messages, reports and the test
// framework's failure dumps.
std::ostream& operator<<(std::ostream& os, __int128 v);
