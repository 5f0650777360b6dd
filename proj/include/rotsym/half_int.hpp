#pragma once

#include <compare>
#include <cstdlib>
#include <string>

#include "rotsym/errors.hpp"

namespace rotsym {

/// Angular momentum or magnetic quantum number stored as a doubled
/// integer, so half-integer spins are exact. HalfInt(3)/2 is not
/// representable by accident: construct via from_twice or whole().
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice, 0); }
  static constexpr HalfInt whole(int n) { return HalfInt(2 * n, 0); }

  constexpr int twice() const { return two_; }
  constexpr bool is_integer() const { return two_ % 2 == 0; }
  constexpr bool is_negative() const { return two_ < 0; }

  /// The integer value; caller must know is_integer() holds.
  constexpr int to_int() const { return two_ / 2; }
  constexpr double to_double() const { return 0.5 * two_; }

  constexpr HalfInt operator+(HalfInt o) const { return from_twice(two_ + o.two_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(two_ - o.two_); }
  constexpr HalfInt operator-() const { return from_twice(-two_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr HalfInt(int twice, int) : two_(twice) {}
  int two_ = 0;
};

inline constexpr HalfInt abs(HalfInt h) {
  return HalfInt::from_twice(h.twice() < 0 ? -h.twice() : h.twice());
}

/// (-1)^k for integer k; half-integer exponents are a caller bug.
inline int phase(HalfInt k) {
  if (!k.is_integer()) throw InputError("phase exponent " + std::to_string(k.twice()) + "/2 is not an integer");
  return (k.to_int() % 2 == 0) ? 1 : -1;
}

/// Triangle rule |a-b| <= c <= a+b with integer perimeter.
inline constexpr bool triangle_valid(HalfInt a, HalfInt b, HalfInt c) {
  if ((a.twice() + b.twice() + c.twice()) % 2 != 0) return false;
  return abs(a - b) <= c && c <= a + b;
}

/// Three spin magnitudes subject to the triangle selection rule.
struct Triangle {
  HalfInt a, b, c;
  constexpr bool valid() const { return triangle_valid(a, b, c); }
};

/// A (j, m) pair is well formed when j >= 0, j - m is an integer and
/// |m| <= j. Throws InputError otherwise (parity violations would make
/// phases (-1)^(j-m) ill defined).
inline void require_jm_pair(HalfInt j, HalfInt m, const char* what) {
  if (j.is_negative()) throw InputError(std::string(what) + ": spin magnitude is negative");
  if ((j.twice() - m.twice()) % 2 != 0)
    throw InputError(std::string(what) + ": j and m differ by a half-integer");
  if (abs(m) > j) throw InputError(std::string(what) + ": |m| exceeds j");
}

/// Parses "3/2", "-1/2", "2", "0". Only halves are accepted.
HalfInt parse_half_int(const std::string& text);

/// "3/2" for odd twice(), otherwise the plain integer.
std::string to_string(HalfInt h);

}  // namespace rotsym
