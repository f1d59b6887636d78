#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "pn/error.hpp"

namespace pn {

/// Exact rational over int64 with __int128 intermediates. All bound and
/// gate arithmetic goes through this type; nothing is ever rounded.
struct Rat {
  long long num = 0;
  long long den = 1;  // > 0, gcd(|num|, den) == 1

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}  // NOLINT: implicit on purpose
  Rat(long long n, long long d);

  bool is_integer() const { return den == 1; }
  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }
};

Rat rat_min(const Rat& a, const Rat& b);

}  // namespace pn
