#include <mpfr.h>

#include <random>

#include "doctest.h"
#include "tessella/exactmath.hpp"

using namespace tessella;

namespace {

AlgebraicNum random_element(std::mt19937_64& rng, int range = 20) {
  std::uniform_int_distribution<int64_t> c(-range, range), d(1, 12);
  AlgebraicNum::Coeffs v;
  for (auto& x : v) x = c(rng);
  return AlgebraicNum::from_coeffs(v, d(rng));
}

// 100-digit evaluation of a real element, independent of the library's sign code:
// sum of c_k * cos(k * pi / 10) over the stored coefficients.
int mpfr_sign_oracle(const AlgebraicNum& x) {
  mpfr_t acc, t, ang;
  mpfr_inits2(400, acc, t, ang, (mpfr_ptr)nullptr);
  mpfr_set_zero(acc, 1);
  for (int k = 0; k < 8; ++k) {
    mpfr_const_pi(ang, MPFR_RNDN);
    mpfr_mul_si(ang, ang, k, MPFR_RNDN);
    mpfr_div_si(ang, ang, 10, MPFR_RNDN);
    mpfr_cos(t, ang, MPFR_RNDN);
    mpfr_mul_si(t, t, x.raw()[k], MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);
  }
  mpfr_set_d(t, 1e-100, MPFR_RNDN);
  int s = mpfr_cmpabs(acc, t) < 0 ? 0 : mpfr_sgn(acc);
  mpfr_clears(acc, t, ang, (mpfr_ptr)nullptr);
  return s;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational::parse(" 10/4 ") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational(-1, 2).floor() == -1);
  CHECK(Rational(-1, 2).ceil() == 0);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(3), OverflowError);
}

TEST_CASE("field identities") {
  AlgebraicNum z5 = q20::zeta5();
  AlgebraicNum p = AlgebraicNum(1);
  for (int k = 0; k < 5; ++k) p = p * z5;
  CHECK(p == AlgebraicNum(1));
  CHECK(z5 == AlgebraicNum::zeta(4));

  AlgebraicNum phi = q20::phi();
  CHECK(phi * phi == phi + AlgebraicNum(1));

  AlgebraicNum s;
  for (int k = 0; k < 5; ++k) s += q20::zeta5(k);
  CHECK(s.is_zero());

  CHECK(q20::i() * q20::i() == AlgebraicNum(-1));
  CHECK(q20::sqrt5() * q20::sqrt5() == AlgebraicNum(5));
  CHECK(q20::cos_deg(36) == phi.scaled(Rational(1, 2)));
  CHECK(q20::cos_deg(72) * AlgebraicNum(2) == phi - AlgebraicNum(1));
  CHECK(q20::sin_deg(18) * q20::sin_deg(18) + q20::cos_deg(18) * q20::cos_deg(18) == AlgebraicNum(1));
  CHECK(q12::sqrt3() * q12::sqrt3() == HexNum(3));
  CHECK(q12::cos_deg(60) == HexNum(Rational(1, 2)));
  CHECK(q12::sin_deg(60) == q12::sqrt3().scaled(Rational(1, 2)));
}

TEST_CASE("division") {
  AlgebraicNum phi = q20::phi();
  CHECK(AlgebraicNum(1) / phi == phi - AlgebraicNum(1));
  CHECK_THROWS_AS(phi / AlgebraicNum(0), std::domain_error);
  HexNum h = q12::sqrt3() + HexNum(2);
  CHECK(h * h.inverse() == HexNum(1));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("real_sign examples") {
  AlgebraicNum s5 = q20::sqrt5();
  CHECK(real_sign(s5 - AlgebraicNum(2)) == 1);
  CHECK(real_sign(q20::phi() - (AlgebraicNum(1) + s5).scaled(Rational(1, 2))) == 0);
  AlgebraicNum v = q20::cos_deg(72) * AlgebraicNum(2) - q20::phi() + AlgebraicNum(1);
  CHECK(real_sign(v) == 0);
  CHECK(mpfr_sign_oracle(v) == 0);
  CHECK(real_sign(AlgebraicNum(Rational(-1, 3))) == -1);
  CHECK_THROWS_AS(real_sign(q20::i()), std::domain_error);
  CHECK_THROWS_AS(real_floor(q20::zeta5()), std::domain_error);
}

TEST_CASE("real_sign near zero goes through the refinement path") {
  // F_{k+1} - F_k phi shrinks like phi^{-k}
  int64_t a = 1, b = 1;
  for (int k = 0; k < 80; ++k) {
    int64_t c = a + b;
    a = b;
    b = c;
    AlgebraicNum x = AlgebraicNum(b) - AlgebraicNum(a) * q20::phi();
    int expect = (k % 2 == 0) ? 1 : -1;
    CHECK(real_sign(x) == expect);
    CHECK(real_sign(x) == mpfr_sign_oracle(x));
    if (b > (int64_t(1) << 60)) break;
  }
}

TEST_CASE("real_sign agrees with 100-digit evaluation") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 1000; ++it) {
    auto x = random_element(rng, 1000);
    auto r = x + x.conj();
    REQUIRE(r.is_real());
    CHECK(real_sign(r) == mpfr_sign_oracle(r));
  }
}

TEST_CASE("real_floor") {
  CHECK(real_floor(AlgebraicNum(Rational(3, 2))) == 1);
  CHECK(real_floor(q20::phi()) == 1);
  CHECK(real_floor(AlgebraicNum(Rational(-1, 2))) == -1);
  CHECK(real_floor(AlgebraicNum(4)) == 4);
  CHECK(real_floor(-q20::phi()) == -2);
  CHECK(real_floor(q20::sqrt5() * AlgebraicNum(100)) == 223);
  CHECK(real_ceil(q20::phi()) == 2);
  CHECK(real_floor(q12::sqrt3()) == 1);
}

TEST_CASE("ideal membership") {
  AlgebraicNum one(1), z = q20::zeta5();
  CHECK(ideal_member(one - z));
  CHECK_FALSE(ideal_member(one));
  CHECK(ideal_member(AlgebraicNum(5)));
  CHECK_THROWS_AS(ideal_member(AlgebraicNum(Rational(1, 2))), std::domain_error);
  CHECK_THROWS_AS(ideal_member(q20::i()), std::domain_error);
}

TEST_CASE("5 = (1 - z5) w with w integral, by the 4x4 system") {
  // Multiplication by (1 - z) in the basis 1, z, z^2, z^3 with z^4 = -1 - z - z^2 - z^3.
  // Column j holds (1 - z) z^j.
  Rational m[4][4] = {{1, 0, 0, 1}, {-1, 1, 0, 1}, {0, -1, 1, 1}, {0, 0, -1, 2}};
  Rational rhs[4] = {5, 0, 0, 0};
  // Gaussian elimination
  for (int col = 0; col < 4; ++col) {
    int p = col;
    while (m[p][col].is_zero()) ++p;
    std::swap(m[p], m[col]);
    std::swap(rhs[p], rhs[col]);
    for (int r = 0; r < 4; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col] / m[col][col];
      for (int k = 0; k < 4; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  std::array<Rational, 4> w;
  for (int j = 0; j < 4; ++j) {
    w[j] = rhs[j] / m[j][j];
    CHECK(w[j].is_integer());
  }
  CHECK((AlgebraicNum(1) - q20::zeta5()) * from_zeta5_coords(w) == AlgebraicNum(5));
}

TEST_CASE("ideal predicate is closed under addition and ring multiplication") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int64_t> c(-9, 9);
  auto rand_int = [&] {
    std::array<Rational, 4> d;
    for (auto& v : d) v = Rational(c(rng));
    return from_zeta5_coords(d);
  };
  AlgebraicNum gen = AlgebraicNum(1) - q20::zeta5();
  for (int it = 0; it < 300; ++it) {
    AlgebraicNum a = rand_int(), b = rand_int();
    AlgebraicNum ia = gen * a, ib = gen * b;
    CHECK(ideal_member(ia));
    CHECK(ideal_member(ia + ib));
    CHECK(ideal_member(ia * b));
    // membership agrees with the quotient map z -> 1
    auto d = *zeta5_coords(a);
    int64_t s = 0;
    for (auto& v : d) s += v.num();
    CHECK(ideal_member(a) == (((s % 5) + 5) % 5 == 0));
  }
}

TEST_CASE("QSqrt5") {
  QSqrt5 phi = QSqrt5::phi();
  CHECK(phi * phi == phi + QSqrt5(1));
  CHECK((QSqrt5(0, 1) - QSqrt5(2)).sign() == 1);
  CHECK((QSqrt5(Rational(9, 4)) - QSqrt5(0, 1)).sign() == 1);
  CHECK((QSqrt5(Rational(-9, 4)) + QSqrt5(0, 1)).sign() == -1);
  CHECK(phi.floor() == 1);
  CHECK((-phi).floor() == -2);
  CHECK(QSqrt5::parse("1/2+1/2*sqrt5") == phi);
  CHECK(QSqrt5::parse("-3/7") == QSqrt5(Rational(-3, 7)));
  CHECK(QSqrt5::parse("1-sqrt5") == QSqrt5(1, -1));
  CHECK(QSqrt5::parse("1/phi") == phi - QSqrt5(1));
  CHECK(phi.to_field() == q20::phi());
  CHECK_THROWS(QSqrt5::parse("2x"));
}

TEST_CASE("QSqrt5 sign with wide denominators") {
  // convergents p/q of sqrt5: p/q - sqrt5 alternates in sign and shrinks like 1/q^2
  int64_t p = 2, q = 1;
  for (int i = 0; i < 12; ++i) {
    QSqrt5 d(Rational(p, q), Rational(-1));
    CHECK(d.sign() == (p * p > 5 * q * q ? 1 : -1));
    int64_t np = 2 * p + 5 * q, nq = p + 2 * q;  // (p + q sqrt5)(2 + sqrt5)
    p = np, q = nq;
  }
  // terms whose squares overflow 64 bits but whose sign is clear
  QSqrt5 big(Rational(3037000493LL, 2971215073LL), Rational(-1234567891LL, 3037000499LL));
  CHECK(big.sign() == 1);
  CHECK((-big).sign() == -1);
}

TEST_CASE("lattice rotation invariance") {
  using L20 = LatticeBasis<20>;
  using L12 = LatticeBasis<12>;
  L20 square{{AlgebraicNum(1), AlgebraicNum(0)}, {AlgebraicNum(0), AlgebraicNum(1)}};
  CHECK(rotation_invariant(square, 4));
  CHECK(rotation_invariant(square, 2));
  CHECK(rotation_invariant(square, 1));
  CHECK_FALSE(rotation_invariant(square, 3));
  CHECK_FALSE(rotation_invariant(square, 5));

  L12 hex{{HexNum(1), HexNum(0)}, {q12::cos_deg(60), q12::sin_deg(60)}};
  CHECK(rotation_invariant(hex, 6));
  CHECK(rotation_invariant(hex, 3));
  CHECK_FALSE(rotation_invariant(hex, 4));
  L12 square12{{HexNum(1), HexNum(0)}, {HexNum(0), HexNum(1)}};
  CHECK(rotation_invariant(square12, 4));
  CHECK_FALSE(rotation_invariant(square12, 3));
  CHECK_FALSE(rotation_invariant(square12, 12));

  L20 penta{{AlgebraicNum(1), AlgebraicNum(0)}, {q20::cos_deg(72), q20::sin_deg(72)}};
  CHECK_FALSE(rotation_invariant(penta, 5));
  CHECK_FALSE(rotation_invariant(penta, 10));

  L20 bad{{AlgebraicNum(1), AlgebraicNum(2)}, {AlgebraicNum(2), AlgebraicNum(4)}};
  CHECK_THROWS_AS(rotation_invariant(bad, 4), std::domain_error);
}

TEST_CASE("crystallographic restriction") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int64_t> c(-3, 3);
  auto r20 = [&] { return AlgebraicNum(c(rng)) + AlgebraicNum(c(rng)) * q20::sqrt5(); };
  auto r12 = [&] { return HexNum(c(rng)) + HexNum(c(rng)) * q12::sqrt3(); };
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    LatticeBasis<20> b20{{r20(), r20()}, {r20(), r20()}};
    LatticeBasis<12> b12{{r12(), r12()}, {r12(), r12()}};
    for (int n = 1; n <= 12; ++n) {
      bool allowed = n == 1 || n == 2 || n == 3 || n == 4 || n == 6;
      CHECK(rotation_trace_is_integer(n) == allowed);
      if (!b20.det().is_zero()) {
        bool inv = rotation_invariant(b20, n);
        if (!allowed) CHECK_FALSE(inv);
        if (inv) CHECK(rotation_trace_is_integer(n));
        ++checked;
      }
      if (!b12.det().is_zero()) {
        bool inv = rotation_invariant(b12, n);
        if (!allowed) CHECK_FALSE(inv);
        if (inv) CHECK(rotation_trace_is_integer(n));
      }
    }
  }
  CHECK(checked > 0);
  for (int n = 1; n <= 12; ++n) {
    long double t = 2 * cosl(2 * 3.14159265358979323846264338327950288L / n);
    bool near_int = fabsl(t - roundl(t)) < 1e-12L;
    CHECK(near_int == rotation_trace_is_integer(n));
  }
}

TEST_CASE("json round trip") {
  AlgebraicNum x = q20::phi().scaled(Rational(3, 7)) + q20::zeta5(2);
  auto j = x.to_json();
  CHECK(j.size() == 8);
  CHECK(j[0].is_string());
  CHECK(AlgebraicNum::from_json(j) == x);
  CHECK_THROWS(AlgebraicNum::from_json(nlohmann::json::array({"1/2"})));
}
