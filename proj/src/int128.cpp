#include "fpbound/int128.hpp"

#include <limits>
#include <ostream>

namespace fpbound {

std::string to_string(Int v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  // Magnitude in unsigned space so the minimum value negates safely.
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  char buf[48];
  int pos = sizeof(buf);
  while (u > 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  std::string s;
  if (neg) s.push_back('-');
  s.append(buf + pos, sizeof(buf) - pos);
  return s;
}

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t to_i64(Int v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("value " + to_string(v) + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace fpbound

std::ostream& operator<<(std::ostream& os, __int128 v) { return os << fpbound::to_string(v); }
