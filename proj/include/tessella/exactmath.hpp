#pragma once

#include <stdexcept>
#include <string>

#include "tessella/cyclotomic.hpp"
#include "tessella/geometry.hpp"
#include "tessella/rational.hpp"

namespace tessella {

// a + b sqrt5 with rational a, b. The real subfield Q(sqrt5) of Q(zeta_20),
// kept separately because its sign test needs no floating point at all.
class QSqrt5 {
 public:
  QSqrt5() = default;
  QSqrt5(const Rational& a) : a_(a) {}  // NOLINT
  QSqrt5(int64_t a) : a_(a) {}          // NOLINT
  QSqrt5(const Rational& a, const Rational& b) : a_(a), b_(b) {}

  static QSqrt5 parse(const std::string& s);  // "p/q", "p/q+r/s*sqrt5", "phi", ...
  static QSqrt5 phi() { return {Rational(1, 2), Rational(1, 2)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  bool is_integer() const { return b_.is_zero() && a_.is_integer(); }
  int sign() const;
  int64_t floor() const;
  int64_t ceil() const { return -(-*this).floor(); }
  long double approx() const;
  AlgebraicNum to_field() const { return AlgebraicNum(a_) + AlgebraicNum(b_) * q20::sqrt5(); }
  QSqrt5 conjugate() const { return {a_, -b_}; }
  std::string str() const;

  QSqrt5 operator-() const { return {-a_, -b_}; }
  friend QSqrt5 operator+(const QSqrt5& x, const QSqrt5& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QSqrt5 operator-(const QSqrt5& x, const QSqrt5& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QSqrt5 operator*(const QSqrt5& x, const QSqrt5& y) {
    return {x.a_ * y.a_ + Rational(5) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend QSqrt5 operator/(const QSqrt5& x, const QSqrt5& y) {
    Rational n = y.a_ * y.a_ - Rational(5) * y.b_ * y.b_;
    if (n.is_zero()) throw std::domain_error("division by zero");
    QSqrt5 t = x * y.conjugate();
    return {t.a_ / n, t.b_ / n};
  }
  QSqrt5& operator+=(const QSqrt5& o) { return *this = *this + o; }
  QSqrt5& operator-=(const QSqrt5& o) { return *this = *this - o; }
  QSqrt5& operator*=(const QSqrt5& o) { return *this = *this * o; }
  friend bool operator==(const QSqrt5& x, const QSqrt5& y) = default;
  friend bool operator<(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign() >= 0; }

 private:
  Rational a_, b_;
};

template <int N>
struct LatticeBasis {
  Vec2<CycNum<N>> v1, v2;

  CycNum<N> det() const { return cross(v1, v2); }
  void validate() const {
    if (det().is_zero()) throw std::domain_error("lattice basis vectors are linearly dependent");
  }
};

// True iff rotation by 2 pi / n maps the lattice Z v1 + Z v2 onto itself,
// decided by integrality of V^{-1} R V.
template <int N>
bool rotation_invariant(const LatticeBasis<N>& basis, int n);

// Necessary condition for n-fold lattice symmetry: 2 cos(2 pi / n) is an integer.
bool rotation_trace_is_integer(int n);

int euler_phi(int n);

extern template bool rotation_invariant(const LatticeBasis<20>&, int);
extern template bool rotation_invariant(const LatticeBasis<12>&, int);

}  // namespace tessella
