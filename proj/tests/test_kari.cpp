#include <set>

#include "doctest.h"
#include "tessella/kari.hpp"

using namespace tessella;

namespace {

using Quad = std::tuple<Rational, Rational, Rational, Rational>;

// Every (a, c, b, d) in the published ranges with r a + b = c + d.
std::set<Quad> range_oracle(const Rational& r) {
  std::set<Quad> out;
  bool t2 = r == Rational(2);
  std::vector<Rational> side = t2 ? std::vector<Rational>{-1, 0}
                                  : std::vector<Rational>{Rational(-1, 3), 0, Rational(1, 3), Rational(2, 3)};
  std::vector<int> north = t2 ? std::vector<int>{0, 1} : std::vector<int>{1, 2};
  std::vector<int> south = t2 ? std::vector<int>{1, 2} : std::vector<int>{0, 1, 2};
  for (int a : north)
    for (int c : south)
      for (const auto& b : side)
        for (const auto& d : side)
          if (r * Rational(a) + b == Rational(c) + d) out.insert({a, c, b, d});
  return out;
}

std::set<Quad> values(const std::vector<KariTile>& ts) {
  std::set<Quad> out;
  for (const auto& t : ts) out.insert({t.a.value, t.c.value, t.b.value, t.d.value});
  return out;
}

}  // namespace

TEST_CASE("Beatty sequences") {
  for (int k = -5; k < 6; ++k) CHECK(beatty_B(Rational(1), k) == 1);
  CHECK(beatty_B(Rational(1, 2), 1) == 0);
  CHECK(beatty_B(Rational(1, 2), 2) == 1);
  std::vector<int64_t> b;
  for (int k = 1; k <= 4; ++k) b.push_back(beatty_B(Rational(3, 2), k));
  CHECK(b == std::vector<int64_t>{1, 2, 1, 2});
  for (int k = -5; k < 6; ++k) CHECK(beatty_A(Rational(2), Rational(1), k) == Rational(0));
  CHECK(beatty_A(Rational(2, 3), Rational(3, 2), 1) == Rational(-1, 3));
  for (int j = 10; j <= 20; ++j)
    for (int k = -20; k < 20; ++k) {
      Rational a = beatty_A(Rational(2), Rational(j, 20), k);
      CHECK((a == Rational(-1) || a == Rational(0)));
      int64_t bk = beatty_B(Rational(j, 20), k);
      CHECK((bk == 0 || bk == 1));
    }
  CHECK_THROWS(beatty_A(Rational(0), Rational(1), 1));
}

TEST_CASE("tile_at") {
  for (int k = -4; k < 5; ++k) {
    KariTile t = tile_at({Rational(2), Rational(1)}, k);
    CHECK(t.a.value == Rational(1));
    CHECK(t.c.value == Rational(2));
    CHECK(t.b.value == Rational(0));
    CHECK(t.d.value == Rational(0));
    CHECK(t.b.prime);
    CHECK(t.d.prime);
    KariTile u = tile_at({Rational(2, 3), Rational(2)}, k);
    CHECK(u.a.value == Rational(2));
    CHECK((u.c.value == Rational(1) || u.c.value == Rational(2)));
    CHECK_FALSE(u.b.prime);
  }
  for (int j = 21; j <= 40; ++j)
    for (int k = -10; k < 10; ++k) {
      BeattyParams p{Rational(2, 3), Rational(j, 20)};
      CHECK(tile_at(p, k + 1).b == tile_at(p, k).d);
    }
  CHECK_THROWS(tile_at({Rational(2), Rational(3, 2)}, 0));
  CHECK_THROWS(tile_at({Rational(3), Rational(1)}, 0));
}

TEST_CASE("enumerated tile sets") {
  auto t2 = enumerate_T(Rational(2));
  auto t23 = enumerate_T(Rational(2, 3));
  CHECK(t2.size() == 4);
  CHECK(t23.size() == 10);
  CHECK(values(t2) == range_oracle(Rational(2)));
  CHECK(values(t23) == range_oracle(Rational(2, 3)));
  for (const auto& ts : {t2, t23})
    for (const auto& t : ts) CHECK(t.r * t.a.value + t.b.value == t.c.value + t.d.value);
  CHECK(kari_set().size() == 14);
  CHECK(kari_set().colors().size() == 8);
  for (int dens : {20, 30, 60}) {
    CHECK(enumerate_T(Rational(2), dens).size() == 4);
    CHECK(enumerate_T(Rational(2, 3), dens).size() == 10);
  }
  CHECK_THROWS(enumerate_T(Rational(3)));
}

TEST_CASE("tile_at stays inside the 14-tile set") {
  for (int j = 10; j <= 40; ++j) {
    Rational alpha(j, 20);
    Rational r = alpha <= Rational(1) ? Rational(2) : Rational(2, 3);
    for (int k = -30; k < 30; ++k) CHECK_NOTHROW(kari_index(tile_at({r, alpha}, k)));
  }
  for (int q = 1; q <= 13; ++q)
    for (int p = q; p <= 2 * q; ++p) {
      Rational alpha(p, q);
      if (alpha < Rational(1, 2)) continue;
      Rational r = alpha <= Rational(1) ? Rational(2) : Rational(2, 3);
      for (int k = 0; k < 3 * q; ++k) CHECK_NOTHROW(kari_index(tile_at({r, alpha}, k)));
    }
}

TEST_CASE("interval dynamics") {
  CHECK(dyn_f(Rational(1, 2)) == Rational(1));
  CHECK(dyn_f(Rational(1)) == Rational(2));
  CHECK(dyn_f(Rational(3, 2)) == Rational(1));
  CHECK(dyn_g(Rational(1)) == Rational(3, 2));
  CHECK(dyn_g(Rational(2)) == Rational(1));
  for (int q = 1; q <= 30; ++q)
    for (int p = 0; p <= 2 * q; ++p) {
      Rational a(p, q);
      if (a <= Rational(2, 3)) continue;
      Rational g = dyn_g(a);
      CHECK(dyn_f(g) == a);
      CHECK(g >= Rational(1, 2));
      CHECK(g <= Rational(2));
    }
  CHECK_THROWS(dyn_f(Rational(1, 3)));
  CHECK_THROWS(dyn_g(Rational(2, 3)));
  CHECK_THROWS(dyn_g(Rational(5, 2)));
}

TEST_CASE("patches") {
  auto g = build_patch(Rational(1), 6, 6);
  CHECK(validate_grid(kari_set(), g).empty());
  auto g2 = build_patch(Rational(3, 2), 20, 20);
  CHECK(validate_grid(kari_set(), g2).empty());
  for (int j = 0; j + 1 < g2.height; ++j)
    for (int i = 0; i < g2.width; ++i) CHECK(kari_set()[g2.at(i, j)].n == kari_set()[g2.at(i, j + 1)].s);
  for (Rational a0 : {Rational(1), Rational(3, 2), Rational(7, 9), Rational(2), Rational(5, 4), Rational(11, 7)})
    for (int w : {1, 7, 50})
      for (int h : {1, 8, 50}) CHECK(validate_grid(kari_set(), build_patch(a0, w, h)).empty());
  CHECK_THROWS(build_patch(Rational(1, 2), 4, 4));
  CHECK_THROWS(build_patch(Rational(2, 3), 4, 4));
  CHECK_NOTHROW(build_patch(Rational(2, 3), 4, 1));
}

TEST_CASE("multiplier audit") {
  auto rep = multiplier_audit(build_patch(Rational(1), 10, 4));
  CHECK(rep.rows.size() == 4);
  for (const auto& r : rep.rows) {
    CHECK((r.r == Rational(2) || r.r == Rational(2, 3)));
    CHECK(r.identity_holds);
  }
  // rows stack: south sum of a row is the north sum of the row below
  for (size_t j = 1; j < rep.rows.size(); ++j) CHECK(rep.rows[j].south_sum == rep.rows[j - 1].north_sum);

  WangGrid one_row{3, 1, {0, 0, 0}, Wrap::None};
  const auto& tiles = kari_set().tiles();
  for (size_t i = 0; i < 4; ++i) {
    one_row.cells = {int(i)};
    one_row.width = 1;
    CHECK(multiplier_audit(one_row).rows[0].r == Rational(2));
  }
  WangGrid mixed{2, 1, {0, 5}, Wrap::None};
  CHECK_THROWS(multiplier_audit(mixed));
  CHECK(tiles.size() == 14);

  // a cyclic audit would need the product of multipliers to be 1
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      if (a + b == 0) continue;
      Rational p(1);
      for (int i = 0; i < a; ++i) p *= Rational(2);
      for (int i = 0; i < b; ++i) p *= Rational(2, 3);
      CHECK(p != Rational(1));
    }
  auto tall = multiplier_audit(build_patch(Rational(3, 2), 30, 12));
  CHECK(tall.multiplier_product != Rational(1));
  for (const auto& r : tall.rows)
    if (r.full_period) CHECK(r.r * r.north_sum == r.south_sum);
}
