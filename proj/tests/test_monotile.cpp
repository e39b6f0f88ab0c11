#include <set>

#include "doctest.h"
#include "tessella/monotile.hpp"

using namespace tessella;

namespace {

HexNum s3() { return q12::sqrt3(); }
HexNum q(int64_t n, int64_t d = 1) { return HexNum(Rational(n, d)); }

// Hat vertices read off the three-hexagon drawing at hexagon side 1, clockwise.
Outline drawn_hat() {
  const HexNum h = s3();
  std::vector<Point12> p = {
      {q(0), h},           {q(0), h * q(1, 2)},      {q(1, 2), h * q(1, 2)}, {q(3, 4), h * q(1, 4)},
      {q(0), q(0)},        {q(-3, 4), h * q(1, 4)},  {q(-1), q(0)},          {q(-3, 2), q(0)},
      {q(-2), q(0)},       {q(-9, 4), h * q(1, 4)},  {q(-3, 2), h * q(1, 2)}, {q(-3, 2), h},
      {q(-1), h},          {q(-3, 4), h * q(5, 4)},
  };
  Outline o;
  for (auto it = p.rbegin(); it != p.rend(); ++it) o.vertices.push_back({it->x * q(2), it->y * q(2)});
  return o;
}

std::vector<Point12> edges(const Outline& o) {
  std::vector<Point12> e;
  for (size_t i = 0; i < o.vertices.size(); ++i) e.push_back(o.vertices[(i + 1) % o.vertices.size()] - o.vertices[i]);
  return e;
}

}  // namespace

TEST_CASE("kite lattice") {
  for (int s = 0; s < 6; ++s) {
    auto v = kite_vertices({2, -1, s});
    CHECK(twice_area(std::vector<Point12>(v.begin(), v.end())) == q(2) * s3());
    CHECK(norm2(v[1] - v[0]) == q(3));
    CHECK(norm2(v[2] - v[1]) == q(1));
    CHECK(norm2(v[3] - v[2]) == q(1));
    CHECK(norm2(v[2] - v[0]) == q(4));
  }
  CHECK_THROWS_AS(kite_vertices({0, 0, 6}), std::domain_error);
  // neighbouring hexagons share a full side
  CHECK(norm2(hex_center(1, 0) - hex_center(0, 0)) == q(12));
  CHECK(norm2(hex_center(0, 1) - hex_center(0, 0)) == q(12));
  CHECK(norm2(hex_center(-1, 1) - hex_center(0, 0)) == q(12));
}

TEST_CASE("hat outline") {
  Outline h = hat_outline();
  CHECK_FALSE(h.spectre);
  REQUIRE(h.vertices.size() == 14);
  CHECK(is_simple_polygon(h.vertices));
  CHECK(twice_area(h) == q(16) * s3());
  Point12 sum{q(0), q(0)};
  int unit = 0, long_ = 0, collinear = 0;
  auto e = edges(h);
  for (size_t i = 0; i < e.size(); ++i) {
    sum = sum + e[i];
    if (norm2(e[i]) == q(1)) ++unit;
    else if (norm2(e[i]) == q(3)) ++long_;
    if (cross(e[i], e[(i + 1) % e.size()]).is_zero()) {
      ++collinear;
      CHECK(norm2(e[i]) == q(1));
      CHECK(norm2(e[(i + 1) % e.size()]) == q(1));
    }
    // turning angles are multiples of 30 degrees: the unit direction lies in the 12-gon
    HexNum len2 = norm2(e[i]);
    Point12 d = e[i];
    if (len2 == q(3)) d = {d.x * s3() * q(1, 3), d.y * s3() * q(1, 3)};
    bool on12 = false;
    for (int k = 0; k < 12; ++k) on12 |= d == Point12{q12::cos_deg(30 * k), q12::sin_deg(30 * k)};
    CHECK(on12);
  }
  CHECK(unit + long_ == 14);
  CHECK(collinear == 1);
  CHECK(sum == Point12{q(0), q(0)});
  CHECK(congruent(h, drawn_hat()));
  CHECK(is_simple_polygon(drawn_hat().vertices));
  CHECK(twice_area(drawn_hat()) == twice_area(h));
}

TEST_CASE("tile_ab family") {
  auto [u, l] = closure_sums();
  CHECK(u == Point12{q(0), q(0)});
  CHECK(l == Point12{q(0), q(0)});
  Outline h = hat_outline();
  CHECK(congruent(tile_ab(q(1), s3()), h));
  for (int k : {2, 3}) {
    Outline t = tile_ab(q(k), q(k) * s3());
    CHECK(similar(t, h));
    CHECK_FALSE(congruent(t, h));
    CHECK(twice_area(t) == q(k * k) * twice_area(h));
  }
  CHECK(similar(tile_ab(q(2), q(6)), tile_ab(q(1), q(3))));
  CHECK_FALSE(similar(tile_ab(q(1), q(2)), tile_ab(q(1), q(3))));
  Outline sp = tile_ab(q(1), q(1));
  CHECK(sp.spectre);
  CHECK(is_simple_polygon(sp.vertices));
  for (const auto& e : edges(sp)) CHECK(norm2(e) == q(1));
  for (auto [a, b] : {std::pair{1, 5}, {7, 2}, {3, 3}}) {
    Outline t = tile_ab(q(a), q(b, 2));
    CHECK(t.vertices.size() == 14);
    CHECK(is_simple_polygon(t.vertices));
  }
  CHECK_THROWS_AS(tile_ab(q(0), q(1)), std::domain_error);
  CHECK_THROWS_AS(tile_ab(q(1), q(-1)), std::domain_error);
}

TEST_CASE("placements") {
  const std::set<KiteCell> home(hat_cells().begin(), hat_cells().end());
  CHECK(home.size() == 8);
  auto placed = place_hat({});
  CHECK(std::set<KiteCell>(placed.begin(), placed.end()) == home);
  for (int rot = 0; rot < 6; ++rot)
    for (bool ref : {false, true}) {
      HatPlacement p{3, -2, rot, ref};
      auto cells = place_hat(p);
      CHECK(std::set<KiteCell>(cells.begin(), cells.end()).size() == 8);
      // the footprint outline is the transformed hat outline
      Outline o = outline_of_cells(cells);
      Outline t = placement_outline(p);
      CHECK(std::set<Point12, bool (*)(const Point12&, const Point12&)>(o.vertices.begin(), o.vertices.end(),
                                                                        lex_less<HexNum>) ==
            std::set<Point12, bool (*)(const Point12&, const Point12&)>(t.vertices.begin(), t.vertices.end(),
                                                                        lex_less<HexNum>));
      CHECK(twice_area(t) == q(16) * s3());
      CHECK(ref != congruent(t, hat_outline()));
    }
  // six rotations give back the home footprint
  auto c = hat_cells();
  for (int i = 0; i < 6; ++i)
    for (auto& k : c) k = {-k.r, k.q + k.r, (k.sector + 1) % 6};
  CHECK(std::set<KiteCell>(c.begin(), c.end()) == home);
  // mirror twice is the identity
  auto m = place_hat({0, 0, 0, true});
  for (auto& k : m) k = {k.q, -k.q - k.r, (6 - k.sector) % 6};
  CHECK(std::set<KiteCell>(m.begin(), m.end()) == home);

  nlohmann::json j = HatPlacement{1, -2, 4, true}.to_json();
  CHECK(j.dump() == R"({"anchor":[1,-2],"ref":true,"rot":4})");
  HatPlacement back = HatPlacement::from_json(j);
  CHECK((back.q == 1 && back.r == -2 && back.rotation == 4 && back.reflected));
  CHECK_THROWS(HatPlacement::from_json(nlohmann::json::parse(R"({"anchor":[0,0],"rot":6})")));
}

TEST_CASE("patch check") {
  CHECK(patch_check({HatPlacement{}}).overlaps.empty());
  CHECK(patch_check({HatPlacement{}, HatPlacement{}}).overlaps.size() == 8);

  // three hats, pairwise disjoint and pairwise sharing boundary, around the home hat
  auto touches = [](const std::vector<KiteCell>& a, const std::vector<KiteCell>& b) {
    Outline oa = outline_of_cells(a);
    Outline ob = outline_of_cells(b);
    int shared = 0;
    for (size_t i = 0; i < oa.vertices.size(); ++i) {
      const Point12 &p = oa.vertices[i], &pn = oa.vertices[(i + 1) % oa.vertices.size()];
      for (size_t k = 0; k < ob.vertices.size(); ++k)
        if (ob.vertices[k] == pn && ob.vertices[(k + 1) % ob.vertices.size()] == p) ++shared;
    }
    return shared >= 2;
  };
  auto disjoint = [](const std::vector<KiteCell>& a, const std::vector<KiteCell>& b) {
    std::set<KiteCell> s(a.begin(), a.end());
    for (const auto& c : b)
      if (s.count(c)) return false;
    return true;
  };
  std::vector<HatPlacement> near;
  for (int dq = -2; dq <= 2; ++dq)
    for (int dr = -2; dr <= 2; ++dr)
      for (int rot = 0; rot < 6; ++rot)
        for (bool ref : {false, true}) near.push_back({dq, dr, rot, ref});
  auto home = place_hat({});
  std::vector<HatPlacement> cluster;
  for (size_t i = 0; i < near.size() && cluster.empty(); ++i) {
    auto a = place_hat(near[i]);
    if (!disjoint(home, a) || !touches(home, a)) continue;
    for (size_t k = i + 1; k < near.size(); ++k) {
      auto b = place_hat(near[k]);
      if (disjoint(home, b) && disjoint(a, b) && touches(home, b) && touches(a, b)) {
        cluster = {HatPlacement{}, near[i], near[k]};
        break;
      }
    }
  }
  REQUIRE(cluster.size() == 3);
  auto rep = patch_check(cluster);
  CHECK(rep.overlaps.empty());
  auto rep2 = patch_check({cluster[0], cluster[1], cluster[2], cluster[1]});
  CHECK(rep2.overlaps.size() == 8);

  auto w = patch_check({HatPlacement{}}, {{0, 0}});
  CHECK(w.uncovered == std::vector<KiteCell>{{0, 0, 0}, {0, 0, 3}, {0, 0, 4}, {0, 0, 5}});
}
