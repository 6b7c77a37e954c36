#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "stuffle/errors.hpp"

namespace stuffle {

namespace detail {
inline long long checked_narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN + 1)
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<long long>(v);
}
}  // namespace detail

/// Exact rational on 64-bit integers, always in lowest terms, denominator > 0.
/// Intermediates are computed in 128 bits; results that do not fit in 64 bits
/// throw std::overflow_error.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // implicit: integers are rationals
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return make(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero rational");
    return make((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  /// Parses "p" or "p/q" (q > 0 after normalization).
  static Rational parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        long long n = std::stoll(text, &used);
        if (used != text.size()) throw ParseError("bad rational: " + text);
        return Rational(n);
      }
      long long n = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw ParseError("bad rational: " + text);
      long long d = std::stoll(text.substr(slash + 1), &used);
      if (used != text.size() - slash - 1 || d == 0)
        throw ParseError("bad rational: " + text);
      return Rational(n, d);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational: " + text);
    } catch (const std::out_of_range&) {
      throw ParseError("rational out of range: " + text);
    }
  }

private:
  static Rational make(__int128 n, __int128 d) {
    Rational r;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      r.num_ = 0;
      r.den_ = 1;
      return r;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 g = gcd128(a, d);
    r.num_ = detail::checked_narrow(n / g);
    r.den_ = detail::checked_narrow(d / g);
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void normalize() {
    if (den_ == 0) throw std::domain_error("zero denominator");
    *this = make(num_, den_);
  }

  long long num_ = 0;
  long long den_ = 1;
};

/// n! as a checked 64-bit integer (n <= 20).
inline long long factorial(unsigned n) {
  __int128 r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return detail::checked_narrow(r);
}

/// Binomial coefficient, exact, checked.
inline long long binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return detail::checked_narrow(r);
}

}  // namespace stuffle
