#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tessella/rational.hpp"

namespace tessella {

// Minimal polynomial data for the two fields in use. Phi_N is monic of degree
// D; `low` holds the coefficients of x^0..x^{D-1}.
template <int N>
struct CycloTraits;

template <>
struct CycloTraits<20> {
  static constexpr int D = 8;
  static constexpr std::array<int, 8> low = {1, 0, -1, 0, 1, 0, -1, 0};
  static constexpr std::array<int, 8> units = {1, 3, 7, 9, 11, 13, 17, 19};
};

template <>
struct CycloTraits<12> {
  static constexpr int D = 4;
  static constexpr std::array<int, 4> low = {1, 0, -1, 0};
  static constexpr std::array<int, 4> units = {1, 5, 7, 11};
};

// Element of Q(zeta_N) as sum c_i zeta^i / den, i < D, reduced modulo Phi_N.
// gcd(c_0..c_{D-1}, den) = 1 and den > 0 after every operation.
template <int N>
class CycNum {
 public:
  static constexpr int D = CycloTraits<N>::D;
  using Coeffs = std::array<int64_t, D>;

  CycNum() { c_.fill(0); }
  CycNum(int64_t v) : CycNum(Rational(v)) {}  // NOLINT
  CycNum(const Rational& r) {                 // NOLINT
    c_.fill(0);
    c_[0] = r.num();
    den_ = r.den();
  }

  static CycNum from_coeffs(const Coeffs& c, int64_t den = 1);
  static CycNum from_rationals(const std::array<Rational, D>& c);
  static CycNum zeta(int k);  // zeta_N^k for any integer k

  const Coeffs& raw() const { return c_; }
  int64_t den() const { return den_; }
  Rational coeff(int i) const { return Rational(c_[i], den_); }

  bool is_zero() const;
  bool is_rational() const;
  bool is_real() const { return conj() == *this; }
  Rational rational_value() const;  // throws unless is_rational()

  CycNum galois(int k) const;  // zeta -> zeta^k, gcd(k,N) = 1
  CycNum conj() const { return galois(N - 1); }
  CycNum scaled(const Rational& r) const;
  CycNum re() const { return (*this + conj()).scaled(Rational(1, 2)); }
  CycNum im() const;  // (x - conj x) / 2i
  Rational norm() const;
  CycNum inverse() const;

  std::complex<long double> to_complex() const;
  long double approx_real() const { return to_complex().real(); }

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b) { return add(a, b, 1); }
  friend CycNum operator-(const CycNum& a, const CycNum& b) { return add(a, b, -1); }
  friend CycNum operator*(const CycNum& a, const CycNum& b) { return mul(a, b); }
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }
  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
  CycNum& operator/=(const CycNum& o) { return *this = *this / o; }

  friend bool operator==(const CycNum& a, const CycNum& b) { return a.den_ == b.den_ && a.c_ == b.c_; }
  // Arbitrary but fixed total order, used for canonical sorting only.
  friend bool lex_less(const CycNum& a, const CycNum& b) {
    if (a.den_ != b.den_) return a.den_ < b.den_;
    return a.c_ < b.c_;
  }

  size_t hash() const;
  std::string str() const;

  nlohmann::json to_json() const;
  static CycNum from_json(const nlohmann::json& j);

 private:
  static CycNum add(const CycNum& a, const CycNum& b, int sgn);
  static CycNum mul(const CycNum& a, const CycNum& b);
  static CycNum normalize(const std::array<i128, D>& c, i128 den);

  Coeffs c_;
  int64_t den_ = 1;
};

using AlgebraicNum = CycNum<20>;  // pentagonal geometry
using HexNum = CycNum<12>;        // hexagonal geometry

// Sign of a real element: exact zero test, then a long double evaluation with
// a rigorous error bound, then MPFR at 128, 256, ... bits.
template <int N>
int real_sign(const CycNum<N>& x);
// Same, without checking x = conj(x). Callers guarantee realness.
template <int N>
int real_sign_unchecked(const CycNum<N>& x);
template <int N>
int64_t real_floor(const CycNum<N>& x);
template <int N>
int64_t real_ceil(const CycNum<N>& x) {
  return -real_floor(-x);
}
template <int N>
int compare_real(const CycNum<N>& a, const CycNum<N>& b) {
  return real_sign_unchecked(a - b);
}

// Named constants of Q(zeta_20).
namespace q20 {
AlgebraicNum zeta5(int k = 1);  // e^{2 pi i k / 5}
AlgebraicNum i();
AlgebraicNum sqrt5();
AlgebraicNum phi();
AlgebraicNum cos_deg(int deg);  // deg multiple of 18
AlgebraicNum sin_deg(int deg);
}  // namespace q20

namespace q12 {
HexNum sqrt3();
HexNum i();
HexNum cos_deg(int deg);  // deg multiple of 30
HexNum sin_deg(int deg);
}  // namespace q12

// Coordinates of x in the basis 1, z5, z5^2, z5^3 (z5 = zeta_20^4), if x lies in Q(zeta_5).
std::optional<std::array<Rational, 4>> zeta5_coords(const AlgebraicNum& x);
AlgebraicNum from_zeta5_coords(const std::array<Rational, 4>& d);
// Membership in the ideal (1 - zeta_5) of Z[zeta_5]. Throws std::domain_error on non-integral input.
bool ideal_member(const AlgebraicNum& x);

extern template class CycNum<20>;
extern template class CycNum<12>;

}  // namespace tessella

template <int N>
struct std::hash<tessella::CycNum<N>> {
  size_t operator()(const tessella::CycNum<N>& x) const noexcept { return x.hash(); }
};
