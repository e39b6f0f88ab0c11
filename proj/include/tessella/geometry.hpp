#pragma once

#include <utility>
#include <vector>

#include "tessella/cyclotomic.hpp"

namespace tessella {

// Point or vector of the plane with real field coordinates.
template <class F>
struct Vec2 {
  F x, y;

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const F& s, const Vec2& a) { return {s * a.x, s * a.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

template <class F>
F cross(const Vec2<F>& a, const Vec2<F>& b) {
  return a.x * b.y - a.y * b.x;
}

template <class F>
F dot(const Vec2<F>& a, const Vec2<F>& b) {
  return a.x * b.x + a.y * b.y;
}

template <class F>
F norm2(const Vec2<F>& a) {
  return dot(a, a);
}

// +1 for a counter-clockwise turn a -> b -> c, -1 clockwise, 0 collinear.
template <class F>
int orient(const Vec2<F>& a, const Vec2<F>& b, const Vec2<F>& c) {
  return real_sign_unchecked(cross(b - a, c - a));
}

template <class F>
bool lex_less(const Vec2<F>& a, const Vec2<F>& b) {
  if (!(a.x == b.x)) return lex_less(a.x, b.x);
  return lex_less(a.y, b.y);
}

// Twice the signed area (shoelace).
template <class F>
F twice_area(const std::vector<Vec2<F>>& poly) {
  F s(0);
  for (size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
  return s;
}

// Closed-segment intersection test, exact.
template <class F>
bool segments_touch(const Vec2<F>& p1, const Vec2<F>& p2, const Vec2<F>& q1, const Vec2<F>& q2) {
  int d1 = orient(q1, q2, p1), d2 = orient(q1, q2, p2);
  int d3 = orient(p1, p2, q1), d4 = orient(p1, p2, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  auto on_seg = [](const Vec2<F>& a, const Vec2<F>& b, const Vec2<F>& p) {
    return real_sign_unchecked(dot(p - a, p - b)) <= 0;
  };
  if (d1 == 0 && on_seg(q1, q2, p1)) return true;
  if (d2 == 0 && on_seg(q1, q2, p2)) return true;
  if (d3 == 0 && on_seg(p1, p2, q1)) return true;
  if (d4 == 0 && on_seg(p1, p2, q2)) return true;
  return false;
}

// Simple polygon: at least three vertices, nonzero area, no two non-adjacent
// edges touch and adjacent edges meet only at their shared vertex.
template <class F>
bool is_simple_polygon(const std::vector<Vec2<F>>& poly) {
  size_t n = poly.size();
  if (n < 3) return false;
  if (twice_area(poly).is_zero()) return false;
  for (size_t i = 0; i < n; ++i) {
    if (poly[i] == poly[(i + 1) % n]) return false;
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const auto &a = poly[i], &b = poly[(i + 1) % n], &c = poly[j], &d = poly[(j + 1) % n];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (!adjacent) {
        if (segments_touch(a, b, c, d)) return false;
        continue;
      }
      // adjacent edges share one vertex; they must not fold back on each other
      const auto& shared = (j == i + 1) ? b : a;
      const auto& u = (j == i + 1) ? a : b;
      const auto& w = (j == i + 1) ? d : c;
      if (orient(shared, u, w) == 0 && real_sign_unchecked(dot(u - shared, w - shared)) > 0) return false;
    }
  }
  return true;
}

template <class F>
struct Vec2Hash {
  size_t operator()(const Vec2<F>& p) const noexcept { return p.x.hash() * 31u + p.y.hash(); }
};

template <class F>
std::pair<double, double> to_double(const Vec2<F>& p) {
  return {static_cast<double>(p.x.approx_real()), static_cast<double>(p.y.approx_real())};
}

using Point20 = Vec2<AlgebraicNum>;
using Point12 = Vec2<HexNum>;

}  // namespace tessella
