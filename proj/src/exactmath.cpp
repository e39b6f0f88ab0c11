#include "tessella/exactmath.hpp"

#include <cmath>

namespace tessella {

int QSqrt5::sign() const {
  int sa = a_.sign(), sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // float filter: each term carries relative error below 2^-60
  long double a = a_.to_ld(), b = b_.to_ld() * sqrtl(5.0L);
  long double bound = (fabsl(a) + fabsl(b)) * 0x1p-56L;
  if (fabsl(a + b) > bound) return a + b > 0 ? 1 : -1;
  // opposite signs: compare a^2 with 5 b^2
  auto lhs = a_ * a_;
  auto rhs = Rational(5) * b_ * b_;
  if (lhs == rhs) return 0;  // impossible for rational a, b unless both zero
  return lhs > rhs ? sa : sb;
}

long double QSqrt5::approx() const { return a_.to_ld() + b_.to_ld() * sqrtl(5.0L); }

int64_t QSqrt5::floor() const {
  if (b_.is_zero()) return a_.floor();
  int64_t f = static_cast<int64_t>(floorl(approx()));
  while ((*this - QSqrt5(f)).sign() < 0) --f;
  while ((*this - QSqrt5(f + 1)).sign() >= 0) ++f;
  return f;
}

std::string QSqrt5::str() const {
  if (b_.is_zero()) return a_.str();
  return a_.str() + (b_.sign() < 0 ? "-" : "+") + abs(b_).str() + "*sqrt5";
}

QSqrt5 QSqrt5::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s == "phi") return phi();
  if (s == "-phi") return -phi();
  if (s == "1/phi") return phi() - QSqrt5(1);
  if (s.empty()) throw std::invalid_argument("empty number");
  QSqrt5 total;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = i + 1;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    int sgn = 1;
    if (term[0] == '+' || term[0] == '-') {
      if (term[0] == '-') sgn = -1;
      term = term.substr(1);
    }
    const std::string root = "sqrt5";
    if (term == root) {
      total += QSqrt5(0, sgn);
    } else if (term.size() > root.size() + 1 && term.ends_with("*" + root)) {
      total += QSqrt5(0, Rational::parse(term.substr(0, term.size() - root.size() - 1)) * Rational(sgn));
    } else {
      if (term.find_first_not_of("0123456789/") != std::string::npos)
        throw std::invalid_argument("not a number in Q(sqrt5): \"" + text + "\"");
      total += QSqrt5(Rational::parse(term) * Rational(sgn));
    }
    i = j;
  }
  return total;
}

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

bool rotation_trace_is_integer(int n) {
  if (n < 1) throw std::domain_error("rotation order must be positive");
  // 2cos(2 pi/n) has degree phi(n)/2 over Q for n >= 3
  return n <= 2 || euler_phi(n) <= 2;
}

template <int N>
bool rotation_invariant(const LatticeBasis<N>& basis, int n) {
  if (n < 1) throw std::domain_error("rotation order must be positive");
  basis.validate();
  // Integral V^{-1} R V forces R = V A V^{-1} to have entries in the field,
  // and the field's roots of unity are exactly the N-th ones (N even).
  if (N % n != 0) return false;
  using F = CycNum<N>;
  F z = F::zeta(N / n);
  F c = z.re(), s = z.im();
  const auto& v1 = basis.v1;
  const auto& v2 = basis.v2;
  // R v
  Vec2<F> r1{c * v1.x - s * v1.y, s * v1.x + c * v1.y};
  Vec2<F> r2{c * v2.x - s * v2.y, s * v2.x + c * v2.y};
  F inv_det = basis.det().inverse();
  // V^{-1} w = (cross(w, v2), cross(v1, w)) / det
  F entries[4] = {cross(r1, v2) * inv_det, cross(v1, r1) * inv_det, cross(r2, v2) * inv_det,
                  cross(v1, r2) * inv_det};
  for (const F& e : entries) {
    if (!e.is_rational() || !e.rational_value().is_integer()) return false;
  }
  return true;
}

template bool rotation_invariant(const LatticeBasis<20>&, int);
template bool rotation_invariant(const LatticeBasis<12>&, int);

}  // namespace tessella
