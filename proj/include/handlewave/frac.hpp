#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace handlewave {

// Exact rational position on a segment.
struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n) : num(n) {}
  Frac(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Frac: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Frac& x, const Frac& y) {
    return x.num == y.num && x.den == y.den;
  }

  friend std::strong_ordering operator<=>(const Frac& x, const Frac& y) {
    const __int128 l = static_cast<__int128>(x.num) * y.den;
    const __int128 r = static_cast<__int128>(y.num) * x.den;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Frac operator+(const Frac& x, const Frac& y) {
    return Frac(x.num * y.den + y.num * x.den, x.den * y.den);
  }

  friend Frac operator-(const Frac& x, const Frac& y) {
    return Frac(x.num * y.den - y.num * x.den, x.den * y.den);
  }

  // Midpoint; used to place fresh endpoints inside a gap.
  static Frac mid(const Frac& x, const Frac& y) {
    return Frac(x.num * y.den + y.num * x.den, 2 * x.den * y.den);
  }
};

std::string to_string(const Frac& f);
Frac parse_frac(const std::string& text);

}  // namespace handlewave
