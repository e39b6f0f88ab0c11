#include "tessella/cyclotomic.hpp"

#include <mpfr.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tessella {

namespace {

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("cyclotomic arithmetic overflow");
  return r;
}

i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("cyclotomic arithmetic overflow");
  return r;
}

// x^k reduced modulo Phi_N, for 0 <= k < N.
template <int N>
const std::array<std::array<int64_t, CycloTraits<N>::D>, N>& power_table() {
  constexpr int D = CycloTraits<N>::D;
  static const auto table = [] {
    std::array<std::array<int64_t, D>, N> t{};
    std::array<int64_t, D> cur{};
    cur[0] = 1;
    for (int k = 0; k < N; ++k) {
      t[k] = cur;
      // multiply by x
      int64_t top = cur[D - 1];
      for (int i = D - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (int i = 0; i < D; ++i) cur[i] -= top * CycloTraits<N>::low[i];
    }
    return t;
  }();
  return table;
}

template <int N>
const std::array<long double, N>& cos_table() {
  static const auto table = [] {
    std::array<long double, N> t{};
    for (int k = 0; k < N; ++k) t[k] = cosl(2.0L * std::numbers::pi_v<long double> * k / N);
    return t;
  }();
  return table;
}

template <int N>
const std::array<long double, N>& sin_table() {
  static const auto table = [] {
    std::array<long double, N> t{};
    for (int k = 0; k < N; ++k) t[k] = sinl(2.0L * std::numbers::pi_v<long double> * k / N);
    return t;
  }();
  return table;
}

}  // namespace

template <int N>
CycNum<N> CycNum<N>::normalize(const std::array<i128, D>& c, i128 den) {
  if (den == 0) throw std::domain_error("zero denominator");
  u128 g = detail::uabs(den);
  for (i128 v : c) {
    if (g == 1) break;
    g = detail::gcd_u128(g, detail::uabs(v));
  }
  bool zero = true;
  for (i128 v : c) zero = zero && v == 0;
  CycNum r;
  if (zero) return r;
  i128 gs = den < 0 ? -i128(g) : i128(g);
  for (int i = 0; i < D; ++i) r.c_[i] = detail::narrow(c[i] / gs);
  r.den_ = detail::narrow(den / gs);
  return r;
}

template <int N>
CycNum<N> CycNum<N>::from_coeffs(const Coeffs& c, int64_t den) {
  std::array<i128, D> w{};
  for (int i = 0; i < D; ++i) w[i] = c[i];
  return normalize(w, den);
}

template <int N>
CycNum<N> CycNum<N>::from_rationals(const std::array<Rational, D>& c) {
  CycNum r;
  for (int i = 0; i < D; ++i) {
    CycNum term(c[i]);
    CycNum basis = zeta(i);
    r += term * basis;
  }
  return r;
}

template <int N>
CycNum<N> CycNum<N>::zeta(int k) {
  k %= N;
  if (k < 0) k += N;
  CycNum r;
  r.c_ = power_table<N>()[k];
  return r;
}

template <int N>
bool CycNum<N>::is_zero() const {
  for (auto v : c_)
    if (v != 0) return false;
  return true;
}

template <int N>
bool CycNum<N>::is_rational() const {
  for (int i = 1; i < D; ++i)
    if (c_[i] != 0) return false;
  return true;
}

template <int N>
Rational CycNum<N>::rational_value() const {
  if (!is_rational()) throw std::domain_error("not a rational element: " + str());
  return Rational(c_[0], den_);
}

template <int N>
CycNum<N> CycNum<N>::operator-() const {
  CycNum r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

template <int N>
CycNum<N> CycNum<N>::add(const CycNum& a, const CycNum& b, int sgn) {
  std::array<i128, D> w{};
  if (a.den_ == b.den_) {
    for (int i = 0; i < D; ++i) w[i] = i128(a.c_[i]) + sgn * i128(b.c_[i]);
    return normalize(w, a.den_);
  }
  i128 g = i128(detail::gcd_u128(u128(a.den_), u128(b.den_)));
  i128 fa = b.den_ / g, fb = a.den_ / g;
  for (int i = 0; i < D; ++i) w[i] = checked_add(checked_mul(a.c_[i], fa), sgn * checked_mul(b.c_[i], fb));
  return normalize(w, checked_mul(a.den_, fa));
}

template <int N>
CycNum<N> CycNum<N>::mul(const CycNum& a, const CycNum& b) {
  std::array<i128, 2 * D - 1> p{};
  for (int i = 0; i < D; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < D; ++j) {
      if (b.c_[j] == 0) continue;
      p[i + j] = checked_add(p[i + j], checked_mul(a.c_[i], b.c_[j]));
    }
  }
  for (int k = 2 * D - 2; k >= D; --k) {
    i128 top = p[k];
    if (top == 0) continue;
    p[k] = 0;
    for (int i = 0; i < D; ++i) {
      int l = CycloTraits<N>::low[i];
      if (l != 0) p[k - D + i] = checked_add(p[k - D + i], -l * top);
    }
  }
  std::array<i128, D> w{};
  for (int i = 0; i < D; ++i) w[i] = p[i];
  return normalize(w, checked_mul(a.den_, b.den_));
}

template <int N>
CycNum<N> CycNum<N>::scaled(const Rational& r) const {
  std::array<i128, D> w{};
  for (int i = 0; i < D; ++i) w[i] = checked_mul(c_[i], r.num());
  return normalize(w, checked_mul(den_, r.den()));
}

template <int N>
CycNum<N> CycNum<N>::galois(int k) const {
  k %= N;
  if (k < 0) k += N;
  const auto& table = power_table<N>();
  std::array<i128, D> w{};
  for (int i = 0; i < D; ++i) {
    if (c_[i] == 0) continue;
    const auto& row = table[(i * k) % N];
    for (int j = 0; j < D; ++j) w[j] = checked_add(w[j], checked_mul(c_[i], row[j]));
  }
  return normalize(w, den_);
}

template <int N>
CycNum<N> CycNum<N>::im() const {
  // (x - conj x) / 2i = -i (x - conj x) / 2
  static const CycNum minus_half_i = zeta(N / 4).scaled(Rational(-1, 2));
  return (*this - conj()) * minus_half_i;
}

template <int N>
Rational CycNum<N>::norm() const {
  CycNum p = *this;
  for (int k : CycloTraits<N>::units)
    if (k != 1) p = p * galois(k);
  return p.rational_value();
}

template <int N>
CycNum<N> CycNum<N>::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  CycNum p(1);
  for (int k : CycloTraits<N>::units)
    if (k != 1) p = p * galois(k);
  Rational n = (*this * p).rational_value();
  return p.scaled(Rational(1) / n);
}

template <int N>
std::complex<long double> CycNum<N>::to_complex() const {
  long double re = 0, im = 0;
  for (int i = 0; i < D; ++i) {
    re += static_cast<long double>(c_[i]) * cos_table<N>()[i];
    im += static_cast<long double>(c_[i]) * sin_table<N>()[i];
  }
  return {re / den_, im / den_};
}

template <int N>
size_t CycNum<N>::hash() const {
  uint64_t h = 1469598103934665603ull ^ uint64_t(den_);
  for (auto v : c_) {
    h ^= uint64_t(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return size_t(h);
}

template <int N>
std::string CycNum<N>::str() const {
  std::string s = "[";
  for (int i = 0; i < D; ++i) {
    if (i) s += ",";
    s += coeff(i).str();
  }
  return s + "]";
}

template <int N>
nlohmann::json CycNum<N>::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < D; ++i) j.push_back(coeff(i).str());
  return j;
}

template <int N>
CycNum<N> CycNum<N>::from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != size_t(D))
    throw std::invalid_argument("field element must be an array of " + std::to_string(D) + " rationals");
  std::array<Rational, D> c;
  for (int i = 0; i < D; ++i) {
    if (j[i].is_string()) c[i] = Rational::parse(j[i].get<std::string>());
    else if (j[i].is_number_integer()) c[i] = Rational(j[i].get<int64_t>());
    else throw std::invalid_argument("field coefficient must be a \"p/q\" string");
  }
  return from_rationals(c);
}

template <int N>
int real_sign_unchecked(const CycNum<N>& x) {
  if (x.is_zero()) return 0;
  constexpr int D = CycNum<N>::D;
  const auto& c = x.raw();
  long double s = 0, mag = 0;
  for (int i = 0; i < D; ++i) {
    s += static_cast<long double>(c[i]) * cos_table<N>()[i];
    mag += fabsl(static_cast<long double>(c[i]));
  }
  if (fabsl(s) > mag * 0x1p-58L) return s > 0 ? 1 : -1;

  for (mpfr_prec_t prec = 128; prec <= (1 << 16); prec *= 2) {
    mpfr_t acc, term, angle;
    mpfr_inits2(prec, acc, term, angle, (mpfr_ptr)nullptr);
    mpfr_set_zero(acc, 1);
    for (int i = 0; i < D; ++i) {
      if (c[i] == 0) continue;
      mpfr_const_pi(angle, MPFR_RNDN);
      mpfr_mul_si(angle, angle, 2 * i, MPFR_RNDN);
      mpfr_div_si(angle, angle, N, MPFR_RNDN);
      mpfr_cos(term, angle, MPFR_RNDN);
      mpfr_mul_si(term, term, static_cast<long>(c[i]), MPFR_RNDN);
      mpfr_add(acc, acc, term, MPFR_RNDN);
    }
    int sgn = mpfr_sgn(acc);
    mpfr_abs(acc, acc, MPFR_RNDN);
    // |error| <= mag * 2^{8 - prec}
    mpfr_set_ld(term, mag, MPFR_RNDU);
    mpfr_mul_2si(term, term, 8 - static_cast<long>(prec), MPFR_RNDU);
    bool certain = mpfr_cmp(acc, term) > 0;
    mpfr_clears(acc, term, angle, (mpfr_ptr)nullptr);
    if (certain) return sgn;
  }
  throw std::runtime_error("sign refinement did not terminate: " + x.str());
}

template <int N>
int real_sign(const CycNum<N>& x) {
  if (!x.is_real()) throw std::domain_error("real_sign of a non-real element: " + x.str());
  return real_sign_unchecked(x);
}

template <int N>
int64_t real_floor(const CycNum<N>& x) {
  if (!x.is_real()) throw std::domain_error("real_floor of a non-real element: " + x.str());
  if (x.is_rational()) return x.rational_value().floor();
  long double v = x.approx_real();
  if (!(fabsl(v) < 9.0e18L)) throw OverflowError("floor out of range");
  int64_t f = static_cast<int64_t>(floorl(v));
  while (real_sign_unchecked(x - CycNum<N>(f)) < 0) --f;
  while (real_sign_unchecked(x - CycNum<N>(f + 1)) >= 0) ++f;
  return f;
}

template class CycNum<20>;
template class CycNum<12>;
template int real_sign(const CycNum<20>&);
template int real_sign(const CycNum<12>&);
template int real_sign_unchecked(const CycNum<20>&);
template int real_sign_unchecked(const CycNum<12>&);
template int64_t real_floor(const CycNum<20>&);
template int64_t real_floor(const CycNum<12>&);

namespace q20 {

AlgebraicNum zeta5(int k) { return AlgebraicNum::zeta(4 * k); }
AlgebraicNum i() { return AlgebraicNum::zeta(5); }
AlgebraicNum sqrt5() {
  // 1 + 2 (z5 + z5^4) = sqrt 5
  static const AlgebraicNum v = AlgebraicNum(1) + (zeta5(1) + zeta5(4)) * AlgebraicNum(2);
  return v;
}
AlgebraicNum phi() {
  static const AlgebraicNum v = (AlgebraicNum(1) + sqrt5()).scaled(Rational(1, 2));
  return v;
}
AlgebraicNum cos_deg(int deg) {
  if (deg % 18 != 0) throw std::domain_error("angle not a multiple of 18 degrees");
  return AlgebraicNum::zeta(deg / 18).re();
}
AlgebraicNum sin_deg(int deg) {
  if (deg % 18 != 0) throw std::domain_error("angle not a multiple of 18 degrees");
  return AlgebraicNum::zeta(deg / 18).im();
}

}  // namespace q20

namespace q12 {

HexNum i() { return HexNum::zeta(3); }
HexNum sqrt3() {
  // zeta_12 + zeta_12^{-1} = 2 cos 30
  static const HexNum v = HexNum::zeta(1) + HexNum::zeta(11);
  return v;
}
HexNum cos_deg(int deg) {
  if (deg % 30 != 0) throw std::domain_error("angle not a multiple of 30 degrees");
  return HexNum::zeta(deg / 30).re();
}
HexNum sin_deg(int deg) {
  if (deg % 30 != 0) throw std::domain_error("angle not a multiple of 30 degrees");
  return HexNum::zeta(deg / 30).im();
}

}  // namespace q12

namespace {

// Solve x = sum d_j z5^j for j < 4 exactly; nullopt when x is outside Q(zeta_5).
struct Zeta5Solver {
  // rows of the 8x4 system, pivot rows chosen once
  std::array<std::array<Rational, 4>, 8> a;
  std::array<int, 4> pivots{};
  std::array<std::array<Rational, 8>, 4> inv;  // maps x-coords to d

  Zeta5Solver() {
    for (int j = 0; j < 4; ++j) {
      AlgebraicNum z = q20::zeta5(j);
      for (int r = 0; r < 8; ++r) a[r][j] = z.coeff(r);
    }
    // Gauss-Jordan on the augmented [A | I8] to find a left inverse.
    std::array<std::array<Rational, 12>, 8> m;
    for (int r = 0; r < 8; ++r) {
      for (int j = 0; j < 4; ++j) m[r][j] = a[r][j];
      for (int k = 0; k < 8; ++k) m[r][4 + k] = Rational(r == k ? 1 : 0);
    }
    int row = 0;
    for (int col = 0; col < 4; ++col) {
      int p = row;
      while (p < 8 && m[p][col].is_zero()) ++p;
      if (p == 8) throw std::logic_error("zeta5 basis degenerate");
      std::swap(m[p], m[row]);
      Rational piv = m[row][col];
      for (auto& v : m[row]) v /= piv;
      for (int r = 0; r < 8; ++r) {
        if (r == row || m[r][col].is_zero()) continue;
        Rational f = m[r][col];
        for (int k = 0; k < 12; ++k) m[r][k] -= f * m[row][k];
      }
      ++row;
    }
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 8; ++k) inv[j][k] = m[j][4 + k];
  }
};

}  // namespace

std::optional<std::array<Rational, 4>> zeta5_coords(const AlgebraicNum& x) {
  static const Zeta5Solver solver;
  std::array<Rational, 4> d;
  for (int j = 0; j < 4; ++j) {
    Rational s = 0;
    for (int k = 0; k < 8; ++k)
      if (!solver.inv[j][k].is_zero()) s += solver.inv[j][k] * x.coeff(k);
    d[j] = s;
  }
  if (from_zeta5_coords(d) != x) return std::nullopt;
  return d;
}

AlgebraicNum from_zeta5_coords(const std::array<Rational, 4>& d) {
  AlgebraicNum r;
  for (int j = 0; j < 4; ++j) r += q20::zeta5(j) * AlgebraicNum(d[j]);
  return r;
}

bool ideal_member(const AlgebraicNum& x) {
  auto d = zeta5_coords(x);
  if (!d) throw std::domain_error("ideal_member: element is not in Q(zeta_5)");
  int64_t sum = 0;
  for (const auto& v : *d) {
    if (!v.is_integer()) throw std::domain_error("ideal_member: element is not in Z[zeta_5]");
    sum = (sum + v.num() % 5) % 5;
  }
  return sum % 5 == 0;
}

}  // namespace tessella
