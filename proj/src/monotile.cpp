#include "tessella/monotile.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tessella/parallel.hpp"

namespace tessella {

namespace {

const HexNum& sqrt3() {
  static const HexNum s = q12::sqrt3();
  return s;
}

Point12 polar(const HexNum& len, int deg) { return {len * q12::cos_deg(deg), len * q12::sin_deg(deg)}; }

Point12 rotate60(const Point12& p, int times) {
  Point12 out = p;
  int t = ((times % 6) + 6) % 6;
  HexNum c = q12::cos_deg(60), s = q12::sin_deg(60);
  for (int i = 0; i < t; ++i) out = {c * out.x - s * out.y, s * out.x + c * out.y};
  return out;
}

Point12 apply(const HatPlacement& p, Point12 v) {
  if (p.reflected) v.y = -v.y;
  return rotate60(v, p.rotation) + hex_center(p.q, p.r);
}

struct PointLess {
  bool operator()(const Point12& a, const Point12& b) const { return lex_less(a, b); }
};

// Edge directions with their squared lengths, in traversal order.
std::vector<Point12> edge_vectors(const Outline& o) {
  std::vector<Point12> e;
  size_t n = o.vertices.size();
  for (size_t i = 0; i < n; ++i) e.push_back(o.vertices[(i + 1) % n] - o.vertices[i]);
  return e;
}

// a_i = lambda R b_{i+s} for some rotation R, lambda^2 = ratio.
bool matches_shifted(const std::vector<Point12>& a, const std::vector<Point12>& b, size_t s, bool fixed_scale) {
  size_t n = a.size();
  HexNum ratio = norm2(a[0]) / norm2(b[s]);
  if (fixed_scale && !(ratio == HexNum(1))) return false;
  for (size_t i = 0; i < n; ++i) {
    const Point12 &a0 = a[i], &a1 = a[(i + 1) % n];
    const Point12 &b0 = b[(i + s) % n], &b1 = b[(i + s + 1) % n];
    if (!(norm2(a0) == ratio * norm2(b0))) return false;
    if (!(dot(a0, a1) == ratio * dot(b0, b1)) || !(cross(a0, a1) == ratio * cross(b0, b1))) return false;
  }
  return true;
}

bool same_shape(const Outline& a, const Outline& b, bool fixed_scale) {
  if (a.vertices.size() != b.vertices.size() || a.vertices.empty()) return false;
  auto ea = edge_vectors(a), eb = edge_vectors(b);
  for (size_t s = 0; s < eb.size(); ++s)
    if (matches_shifted(ea, eb, s, fixed_scale)) return true;
  return false;
}

}  // namespace

nlohmann::json HatPlacement::to_json() const { return {{"anchor", {q, r}}, {"rot", rotation}, {"ref", reflected}}; }

HatPlacement HatPlacement::from_json(const nlohmann::json& j) {
  HatPlacement p;
  const auto& a = j.at("anchor");
  if (!a.is_array() || a.size() != 2) throw std::domain_error("anchor must be [q, r]");
  p.q = a[0].get<int>();
  p.r = a[1].get<int>();
  p.rotation = j.value("rot", 0);
  if (p.rotation < 0 || p.rotation > 5) throw std::domain_error("rot must lie in 0..5");
  p.reflected = j.value("ref", false);
  return p;
}

Point12 hex_center(int q, int r) {
  return {HexNum(3 * int64_t(q)), sqrt3() * HexNum(int64_t(q) + 2 * int64_t(r))};
}

std::array<Point12, 4> kite_vertices(const KiteCell& c) {
  if (c.sector < 0 || c.sector > 5) throw std::domain_error("sector must lie in 0..5");
  Point12 o = hex_center(c.q, c.r);
  int a = 60 * c.sector;
  return {o, o + polar(sqrt3(), a - 30), o + polar(HexNum(2), a), o + polar(sqrt3(), a + 30)};
}

const std::vector<KiteCell>& hat_cells() {
  static const std::vector<KiteCell> cells = {{0, 0, 1},  {0, 0, 2},  {-1, 1, 0}, {-1, 1, 1},
                                              {-1, 1, 4}, {-1, 1, 5}, {0, 1, 3},  {0, 1, 4}};
  return cells;
}

std::vector<KiteCell> place_hat(const HatPlacement& p) {
  std::vector<KiteCell> out;
  for (KiteCell c : hat_cells()) {
    if (p.reflected) c = {c.q, -c.q - c.r, (6 - c.sector) % 6};
    for (int i = 0; i < ((p.rotation % 6) + 6) % 6; ++i) c = {-c.r, c.q + c.r, (c.sector + 1) % 6};
    out.push_back({c.q + p.q, c.r + p.r, c.sector});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Outline outline_of_cells(const std::vector<KiteCell>& cells) {
  // directed kite edges; an edge seen in both directions is interior
  std::map<std::pair<Point12, Point12>, int, bool (*)(const std::pair<Point12, Point12>&,
                                                      const std::pair<Point12, Point12>&)>
      edges([](const std::pair<Point12, Point12>& a, const std::pair<Point12, Point12>& b) {
        if (!(a.first == b.first)) return lex_less(a.first, b.first);
        return lex_less(a.second, b.second);
      });
  for (const auto& c : cells) {
    auto v = kite_vertices(c);
    for (size_t i = 0; i < 4; ++i) edges[{v[i], v[(i + 1) % 4]}] += 1;  // kites are counter-clockwise
  }
  std::map<Point12, Point12, PointLess> next;
  for (const auto& [e, n] : edges) {
    if (edges.count({e.second, e.first})) continue;
    if (next.count(e.first)) throw std::domain_error("kite union is not a simple region");
    next[e.first] = e.second;
  }
  if (next.empty()) throw std::domain_error("no boundary");
  Outline o;
  Point12 start = next.begin()->first, cur = start;
  do {
    o.vertices.push_back(cur);
    cur = next.at(cur);
  } while (!(cur == start));
  if (o.vertices.size() != next.size()) throw std::domain_error("kite union boundary is not one loop");
  return o;
}

Outline hat_outline() { return outline_of_cells(hat_cells()); }

Outline tile_ab(const HexNum& a, const HexNum& b) {
  if (!a.is_real() || !b.is_real() || real_sign(a) <= 0 || real_sign(b) <= 0)
    throw std::domain_error("tile_ab needs positive real a and b");
  Outline h = hat_outline();
  Outline o;
  o.spectre = a == b;
  Point12 cur = h.vertices[0];
  HexNum inv3(Rational(1, 3));
  for (const Point12& e : edge_vectors(h)) {
    o.vertices.push_back(cur);
    if (norm2(e) == HexNum(1)) cur = cur + a * e;
    else cur = cur + (b * sqrt3() * inv3) * e;  // e / sqrt3 has unit length
  }
  if (!(cur == o.vertices[0])) throw std::logic_error("tile_ab does not close");
  return o;
}

Outline placement_outline(const HatPlacement& p) {
  Outline h = hat_outline(), o;
  for (const auto& v : h.vertices) o.vertices.push_back(apply(p, v));
  if (p.reflected) std::reverse(o.vertices.begin(), o.vertices.end());
  return o;
}

std::pair<Point12, Point12> closure_sums() {
  Point12 unit{HexNum(0), HexNum(0)}, long_{HexNum(0), HexNum(0)};
  for (const Point12& e : edge_vectors(hat_outline())) {
    if (norm2(e) == HexNum(1)) unit = unit + e;
    else long_ = long_ + e;
  }
  return {unit, long_};
}

HexNum twice_area(const Outline& o) { return twice_area(o.vertices); }

bool congruent(const Outline& a, const Outline& b) { return same_shape(a, b, true); }
bool similar(const Outline& a, const Outline& b) { return same_shape(a, b, false); }

PatchReport patch_check(const std::vector<HatPlacement>& ps, const std::vector<std::pair<int, int>>& window) {
  std::vector<std::vector<KiteCell>> placed(ps.size());
  parallel_for(ps.size(), [&](size_t i) { placed[i] = place_hat(ps[i]); });
  std::map<KiteCell, int> count;
  for (const auto& cs : placed)
    for (const auto& c : cs) ++count[c];
  PatchReport rep;
  for (const auto& [c, n] : count)
    for (int i = 1; i < n; ++i) rep.overlaps.push_back(c);
  for (const auto& [q, r] : window)
    for (int s = 0; s < 6; ++s)
      if (!count.count({q, r, s})) rep.uncovered.push_back({q, r, s});
  std::sort(rep.uncovered.begin(), rep.uncovered.end());
  rep.uncovered.erase(std::unique(rep.uncovered.begin(), rep.uncovered.end()), rep.uncovered.end());
  return rep;
}

}  // namespace tessella
