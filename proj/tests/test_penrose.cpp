#include <random>

#include "doctest.h"
#include "tessella/penrose.hpp"

using namespace tessella;

namespace {

AlgebraicNum phi_() { return q20::phi(); }

Point20 polar(const AlgebraicNum& r, int deg) { return {r * q20::cos_deg(deg), r * q20::sin_deg(deg)}; }

// The kite of two half-kites joined along the single-arrow axis.
Patch kite_pair() {
  Point20 a4{0, 0}, a2 = polar(1, 162), a3 = polar(1, 18), a1{0, phi_()};
  Patch p;
  p.triangles = {RTriangle::make(TriKind::HalfKite, 0, a1, a4, a2), RTriangle::make(TriKind::HalfKite, 0, a1, a4, a3)};
  return p;
}

Patch dart_pair() {
  Point20 a1{0, 0}, a3 = polar(1, -18), a2 = polar(1, 198), a4{0, 1};
  Patch p;
  p.triangles = {RTriangle::make(TriKind::HalfDart, 0, a1, a4, a2), RTriangle::make(TriKind::HalfDart, 0, a1, a4, a3)};
  return p;
}

std::pair<size_t, size_t> matrix_power(size_t k, size_t d, int n) {
  for (int i = 0; i < n; ++i) {
    size_t k2 = 2 * k + d, d2 = k + d;
    k = k2;
    d = d2;
  }
  return {k, d};
}

// cos of the angle at v, times |u - v| |w - v|, compared against side^2 cos(deg).
bool angle_is(const Point20& u, const Point20& v, const Point20& w, int deg) {
  AlgebraicNum s2 = norm2(u - v);
  if (!(s2 == norm2(w - v))) return false;
  return dot(u - v, w - v) == s2 * q20::cos_deg(deg);
}

}  // namespace

TEST_CASE("triangle shapes and arrows") {
  Patch k = kite_pair();
  for (const auto& t : k.triangles) CHECK_NOTHROW(t.validate());
  CHECK(k.triangles[0].chirality != k.triangles[1].chirality);
  CHECK(validate_matching(k).empty());
  CHECK(validate_matching(dart_pair()).empty());
  // same vertices, wrong scale
  RTriangle bad = k.triangles[0];
  bad.scale_exp = 1;
  CHECK_THROWS(bad.validate());
  RTriangle flipped = k.triangles[0];
  flipped.chirality = flipped.chirality == Chirality::Plain ? Chirality::Reflected : Chirality::Plain;
  CHECK_THROWS(flipped.validate());
  CHECK_THROWS(RTriangle::make(TriKind::HalfKite, 0, {0, 0}, {1, 0}, {2, 0}));

  // areas at equal scale: the half-kite is phi times the half-dart
  CHECK(k.triangles[0].twice_area() == phi_() * dart_pair().triangles[0].twice_area());
}

TEST_CASE("kite base against a dart leg") {
  const RTriangle& k = kite_pair().triangles[0];
  Point20 p = k.v[1], q = k.v[2];
  int built = 0;
  for (int deg : {108, -108}) {
    Point20 dir = q - p;
    Point20 rot{q20::cos_deg(deg) * dir.x - q20::sin_deg(deg) * dir.y, q20::sin_deg(deg) * dir.x + q20::cos_deg(deg) * dir.y};
    Point20 b1 = p + rot;
    if (orient(p, q, b1) == orient(p, q, k.v[0])) continue;
    Patch glued;
    // apex at the kite's b1: the double legs run opposite ways
    glued.triangles = {k, RTriangle::make(TriKind::HalfDart, 0, p, b1, q)};
    CHECK_NOTHROW(glued.triangles[1].validate());
    auto v = validate_matching(glued);
    REQUIRE(v.size() == 1);
    CHECK(v[0].reason.find("opposite") != std::string::npos);
    ++built;
  }
  CHECK(built == 1);
}

TEST_CASE("decomposition") {
  Patch d;
  d.triangles = {dart_pair().triangles[0]};
  Patch dk = decompose(d);
  CHECK(dk.triangles.size() == 2);
  CHECK(population(dk) == std::pair<size_t, size_t>{1, 1});
  CHECK(total_twice_area(dk) == total_twice_area(d));
  Patch k;
  k.triangles = {kite_pair().triangles[0]};
  Patch kk = decompose(k);
  CHECK(kk.triangles.size() == 3);
  CHECK(population(kk) == std::pair<size_t, size_t>{2, 1});
  CHECK(total_twice_area(kk) == total_twice_area(k));
  for (const auto& t : kk.triangles) {
    CHECK_NOTHROW(t.validate());
    CHECK(t.scale_exp == -1);
  }
  // children areas: at scale -1 a half-kite is 1/phi^2 of its parent, a half-dart 1/phi^3
  AlgebraicNum parent = k.triangles[0].twice_area();
  for (const auto& t : kk.triangles) {
    int p = t.kind == TriKind::HalfKite ? 2 : 3;
    CHECK(t.twice_area() * phi_pow(p) == parent);
  }
  CHECK(validate_matching(kk).empty());
  CHECK(validate_matching(dk).empty());

  Patch q = cartwheel(0);
  for (int n = 1; n <= 8; ++n) {
    q = decompose(q);
    CHECK(population(q) == matrix_power(2, 0, n));
  }
}

TEST_CASE("cartwheel") {
  CHECK(cartwheel(0).triangles.size() == 2);
  Patch c1 = cartwheel(1);
  CHECK(c1.triangles.size() == 6);
  CHECK(population(c1) == std::pair<size_t, size_t>{4, 2});
  CHECK_THROWS(cartwheel(-1));
  Patch prev2 = cartwheel(0), prev1 = c1;
  for (int n = 2; n <= 6; ++n) {
    Patch c = cartwheel(n);
    CHECK(contains_tiles(c, prev2));
    CHECK_FALSE(contains_tiles(c, prev1));
    CHECK(validate_matching(c).empty());
    CHECK(total_twice_area(c) == phi_pow(2 * n) * total_twice_area(cartwheel(0)));
    for (const auto& t : c.triangles) CHECK(t.scale_exp == 0);
    prev2 = prev1;
    prev1 = c;
  }
  CHECK(overlapping_pairs(cartwheel(4)).empty());
  // mirror symmetry in the vertical axis
  Patch c4 = cartwheel(4), mirror = c4;
  for (auto& t : mirror.triangles) {
    for (auto& v : t.v) v.x = -v.x;
    t = RTriangle::make(t.kind, t.scale_exp, t.v[0], t.v[1], t.v[2]);
  }
  CHECK(same_tiles(c4, mirror));
}

TEST_CASE("overlap detection") {
  Patch p = kite_pair();
  CHECK(overlapping_pairs(p).empty());
  p.triangles.push_back(p.triangles[0]);
  CHECK(overlapping_pairs(p).size() == 1);
}

TEST_CASE("composition") {
  for (int k = 0; k <= 4; ++k) {
    Patch c = cartwheel(k);
    Patch back = compose(decompose(c), BoundaryPolicy::Strict);
    CHECK(same_tiles(back, c));
  }
  // composing the cartwheel undoes one round of scaling and decomposition
  CHECK(same_tiles(compose(cartwheel(4), BoundaryPolicy::Strict), scale_phi(cartwheel(3), 1)));
  Patch lone;
  lone.triangles = {dart_pair().triangles[0]};
  CHECK_THROWS_WITH_AS(compose(lone, BoundaryPolicy::Strict), doctest::Contains("orphan half-dart #0"),
                       std::domain_error);
  CHECK(compose(lone, BoundaryPolicy::Trim).triangles.empty());
  Patch c1 = cartwheel(1);
  CHECK(same_tiles(compose(decompose(c1), BoundaryPolicy::Trim), c1));
  auto s1 = compose_pass1(cartwheel(3), BoundaryPolicy::Strict);
  CHECK(s1.patch.regime == Regime::SemiRhomb);
  CHECK(validate_matching(s1.patch).empty());
  for (const auto& t : s1.patch.triangles) CHECK_NOTHROW(t.validate());
  CHECK_THROWS(decompose(s1.patch));
  CHECK_THROWS(compose_pass1(s1.patch, BoundaryPolicy::Strict));
}

TEST_CASE("kites, darts and rhombs") {
  auto kd = merge_to_kites_darts(kite_pair());
  REQUIRE(kd.size() == 1);
  CHECK(kd[0].kind == "kite");
  CHECK(is_convex(kd[0].v));
  auto dd = merge_to_kites_darts(dart_pair());
  REQUIRE(dd.size() == 1);
  CHECK(dd[0].kind == "dart");
  CHECK_FALSE(is_convex(dd[0].v));

  Patch c1 = cartwheel(1);
  CHECK(merge_to_kites_darts(c1).size() == 3);
  Patch c2 = cartwheel(2);
  CHECK_THROWS(merge_to_kites_darts(c2));
  auto trimmed = merge_to_kites_darts(c2, BoundaryPolicy::Trim);
  size_t orphans = c2.triangles.size() - 2 * trimmed.size();
  CHECK(orphans == 4);
  for (int n = 3; n <= 6; ++n) {
    for (const auto& poly : merge_to_kites_darts(cartwheel(n), BoundaryPolicy::Trim)) {
      CHECK(is_convex(poly.v) == (poly.kind == "kite"));
      CHECK(real_sign(twice_area(poly.v)) > 0);
    }
  }

  // the two rhombs of the semi-rhomb picture
  AlgebraicNum f = phi_();
  Point20 t4{0, 0}, t2 = polar(f, 162), t3 = polar(f, 18), t1 = t2 + polar(f, 18);
  Point20 o1{0, 0}, o2 = polar(f, -36), o3 = polar(f, 36), o4 = o2 + polar(f, 36);
  Patch sr;
  sr.regime = Regime::SemiRhomb;
  sr.triangles = {RTriangle::make(TriKind::HalfKite, 0, t2, t4, t1), RTriangle::make(TriKind::HalfKite, 0, t3, t4, t1),
                  RTriangle::make(TriKind::HalfDart, 1, o2, o4, o1), RTriangle::make(TriKind::HalfDart, 1, o3, o4, o1)};
  for (const auto& t : sr.triangles) CHECK_NOTHROW(t.validate());
  CHECK(validate_matching(sr).empty());
  auto rh = merge_to_rhombs(sr);
  REQUIRE(rh.size() == 2);
  CHECK(rh[0].kind == "thin");
  CHECK(rh[1].kind == "thick");
  CHECK_THROWS(merge_to_rhombs(cartwheel(1)));

  Patch semi = compose_pass1(cartwheel(5), BoundaryPolicy::Strict).patch;
  auto rhombs = merge_to_rhombs(semi, BoundaryPolicy::Trim);
  CHECK(rhombs.size() > 20);
  for (const auto& r : rhombs) {
    REQUIRE(r.v.size() == 4);
    AlgebraicNum side = norm2(r.v[1] - r.v[0]);
    for (size_t i = 0; i < 4; ++i) CHECK(norm2(r.v[(i + 1) % 4] - r.v[i]) == side);
    int small = r.kind == "thin" ? 36 : 72;
    bool a0 = angle_is(r.v[3], r.v[0], r.v[1], small), a1 = angle_is(r.v[0], r.v[1], r.v[2], 180 - small);
    bool b0 = angle_is(r.v[3], r.v[0], r.v[1], 180 - small), b1 = angle_is(r.v[0], r.v[1], r.v[2], small);
    CHECK(((a0 && a1) || (b0 && b1)));
  }
}

TEST_CASE("index sequences") {
  Patch c6 = cartwheel(6);
  IndexTower tower(c6, 10);
  // points next to the origin on both sides of the axis
  for (int sx : {-1, 1}) {
    Point20 x{AlgebraicNum(Rational(sx, 1000)), AlgebraicNum(Rational(1, 1000))};
    IndexSeq s = tower.bits(x);
    CHECK(s.size() == 11);
    CHECK(std::count(s.begin(), s.end(), 1) == 0);
  }
  // a basepoint in a half-dart starts with 1
  size_t d = 0;
  while (c6.triangles[d].kind != TriKind::HalfDart) ++d;
  Point20 in_dart = interior_point(c6.triangles[d], Rational(1, 3), Rational(1, 3));
  CHECK(index_sequence({c6, in_dart}, 4).front() == 1);
  CHECK(*locate(c6, in_dart) == d);
  CHECK_THROWS(tower.bits({AlgebraicNum(1000), AlgebraicNum(0)}));
  CHECK_THROWS(locate(c6, c6.triangles[0].v[0]));

  std::mt19937 rng(11);
  std::uniform_int_distribution<size_t> pick(0, c6.triangles.size() - 1);
  int ok = 0;
  for (int it = 0; it < 200; ++it) {
    try {
      IndexSeq s = tower.bits_from(pick(rng));
      CHECK_FALSE(has_factor_11(s));
      ++ok;
    } catch (const std::domain_error&) {
    }
  }
  CHECK(ok > 100);
  // the larger prototile at each level is the one with bit 0
  for (int n = 0; n <= tower.steps(); ++n) {
    const Patch& lv = tower.level(n);
    AlgebraicNum big(0), small(0);
    for (const auto& t : lv.triangles) {
      AlgebraicNum a = t.twice_area();
      (index_bit(t, lv.regime) == 0 ? big : small) = a;
    }
    if (!big.is_zero() && !small.is_zero()) CHECK(compare_real(big, small) > 0);
  }
  CHECK(same_tail(to_epseq({}, {0}), to_epseq({1, 0}, {0})));
  CHECK_FALSE(same_tail(to_epseq({}, {0}), to_epseq({}, {0, 1, 0})));
}

TEST_CASE("translation shadow") {
  TranslationReport r = translation_symmetries(cartwheel(6), Rational(25));
  CHECK(r.window_tiles > 10);
  CHECK(r.candidates > 100);
  CHECK(r.periods.empty());
}

TEST_CASE("patch json") {
  Patch c = cartwheel(2);
  Patch back = Patch::from_json(nlohmann::json::parse(c.to_json().dump()));
  CHECK(same_tiles(back, c));
  auto j = c.to_json();
  j["triangles"][0]["scale_exp"] = 3;
  CHECK_THROWS(Patch::from_json(j));
}
