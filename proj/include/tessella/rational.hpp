#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tessella {

using i128 = __int128;
using u128 = unsigned __int128;

// Thrown when an exact value no longer fits in 64-bit components.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

namespace detail {

inline u128 uabs(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

inline u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      uint64_t x = uint64_t(a), y = uint64_t(b);
      while (y != 0) {
        uint64_t t = x % y;
        x = y;
        y = t;
      }
      return x;
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int64_t narrow(i128 v) {
  if (v > i128(INT64_MAX) || v < -i128(INT64_MAX)) throw OverflowError("exact value exceeds 64-bit range");
  return int64_t(v);
}

}  // namespace detail

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(int64_t n) : num_(n) {}  // NOLINT: implicit from integers is intended
  Rational(int64_t n, int64_t d) { assign(n, d); }

  static Rational from_wide(i128 n, i128 d) {
    Rational r;
    r.assign(n, d);
    return r;
  }

  // Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view s);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  int64_t floor() const;
  int64_t ceil() const;
  long double to_ld() const { return static_cast<long double>(num_) / den_; }
  double to_double() const { return static_cast<double>(to_ld()); }
  std::string str() const;  // always "p/q"

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from_wide(i128(a.num_) + b.num_, a.den_);
    return from_wide(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return from_wide(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

 private:
  void assign(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    u128 g = detail::gcd_u128(detail::uabs(n), u128(d));
    if (g > 1) {
      n /= i128(g);
      d /= i128(g);
    }
    num_ = detail::narrow(n);
    den_ = detail::narrow(d);
  }

  int64_t num_ = 0;
  int64_t den_ = 1;
};

Rational abs(const Rational& r);

}  // namespace tessella

template <>
struct std::hash<tessella::Rational> {
  size_t operator()(const tessella::Rational& r) const noexcept {
    return std::hash<int64_t>()(r.num()) * 1000003u ^ std::hash<int64_t>()(r.den());
  }
};
