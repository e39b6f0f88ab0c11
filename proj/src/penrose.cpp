#include "tessella/penrose.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "tessella/parallel.hpp"

namespace tessella {

namespace {

const AlgebraicNum& phi() {
  static const AlgebraicNum p = q20::phi();
  return p;
}
const AlgebraicNum& inv_phi() {
  static const AlgebraicNum p = q20::phi() - AlgebraicNum(1);
  return p;
}
const AlgebraicNum& inv_phi2() {
  static const AlgebraicNum p = AlgebraicNum(2) - q20::phi();
  return p;
}

struct EdgeKey {
  Point20 p, q;
  EdgeKey(const Point20& a, const Point20& b) : p(a), q(b) {
    if (lex_less(q, p)) std::swap(p, q);
  }
  friend bool operator==(const EdgeKey& a, const EdgeKey& b) { return a.p == b.p && a.q == b.q; }
};

struct EdgeHash {
  size_t operator()(const EdgeKey& e) const noexcept {
    Vec2Hash<AlgebraicNum> h;
    return h(e.p) * 1000003u ^ h(e.q);
  }
};

using EdgeMap = std::unordered_map<EdgeKey, std::vector<size_t>, EdgeHash>;

EdgeMap edge_map(const Patch& p) {
  EdgeMap m;
  m.reserve(p.triangles.size() * 2);
  for (size_t i = 0; i < p.triangles.size(); ++i) {
    const auto& v = p.triangles[i].v;
    for (int k = 0; k < 3; ++k) m[EdgeKey(v[size_t(k)], v[size_t((k + 1) % 3)])].push_back(i);
  }
  return m;
}

// The other triangle across edge {a, b} of triangle `self`, if any.
std::optional<size_t> across(const EdgeMap& m, size_t self, const Point20& a, const Point20& b) {
  auto it = m.find(EdgeKey(a, b));
  if (it == m.end()) return std::nullopt;
  for (size_t j : it->second)
    if (j != self) return j;
  return std::nullopt;
}

bool same_edge(const Point20& a, const Point20& b, const Point20& c, const Point20& d) {
  return (a == c && b == d) || (a == d && b == c);
}

struct TriKey {
  TriKind kind;
  std::array<Point20, 3> v;
  friend bool operator==(const TriKey& a, const TriKey& b) { return a.kind == b.kind && a.v == b.v; }
};

struct TriHash {
  size_t operator()(const TriKey& t) const noexcept {
    Vec2Hash<AlgebraicNum> h;
    size_t s = size_t(t.kind);
    for (const auto& p : t.v) s = s * 1000003u ^ h(p);
    return s;
  }
};

using TriSet = std::unordered_set<TriKey, TriHash>;

TriSet tri_set(const Patch& p) {
  TriSet s;
  s.reserve(p.triangles.size());
  for (const auto& t : p.triangles) s.insert({t.kind, t.v});
  return s;
}

std::string kind_name(TriKind k) { return k == TriKind::HalfKite ? "half-kite" : "half-dart"; }

std::string tri_name(const Patch& p, size_t i) {
  return kind_name(p.triangles[i].kind) + " #" + std::to_string(i);
}

struct Box {
  double x0, y0, x1, y1;
};

Box box_of(const RTriangle& t) {
  Box b{1e300, 1e300, -1e300, -1e300};
  for (const auto& p : t.v) {
    auto [x, y] = to_double(p);
    b.x0 = std::min(b.x0, x);
    b.y0 = std::min(b.y0, y);
    b.x1 = std::max(b.x1, x);
    b.y1 = std::max(b.y1, y);
  }
  return b;
}

// Vertices in counter-clockwise order.
std::array<Point20, 3> ccw(const RTriangle& t) {
  if (t.chirality == Chirality::Plain) return t.v;
  return {t.v[0], t.v[2], t.v[1]};
}

bool separated_by_edges_of(const std::array<Point20, 3>& a, const std::array<Point20, 3>& b) {
  for (int k = 0; k < 3; ++k) {
    const Point20 &p = a[size_t(k)], &q = a[size_t((k + 1) % 3)];
    bool all_out = true;
    for (const auto& x : b) all_out = all_out && orient(p, q, x) <= 0;
    if (all_out) return true;
  }
  return false;
}

bool interiors_meet(const RTriangle& s, const RTriangle& t) {
  auto a = ccw(s), b = ccw(t);
  return !separated_by_edges_of(a, b) && !separated_by_edges_of(b, a);
}

void require_regime(const Patch& p, Regime r, const char* what) {
  if (p.regime != r)
    throw std::domain_error(std::string(what) + " needs a " +
                            (r == Regime::KiteDart ? "kite/dart" : "semi-rhomb") + " patch");
}

}  // namespace

AlgebraicNum phi_pow(int e) {
  AlgebraicNum r(1);
  const AlgebraicNum& b = e >= 0 ? phi() : inv_phi();
  for (int i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

RTriangle RTriangle::make(TriKind kind, int scale_exp, const Point20& apex, const Point20& b1, const Point20& b2) {
  RTriangle t;
  t.kind = kind;
  t.scale_exp = scale_exp;
  t.v = {apex, b1, b2};
  int o = orient(apex, b1, b2);
  if (o == 0) throw std::domain_error("degenerate triangle");
  t.chirality = o > 0 ? Chirality::Plain : Chirality::Reflected;
  return t;
}

void RTriangle::validate() const {
  for (const auto& p : v)
    if (!p.x.is_real() || !p.y.is_real()) throw std::domain_error("triangle coordinates must be real");
  int o = orient(v[0], v[1], v[2]);
  if (o == 0 || (o > 0) != (chirality == Chirality::Plain))
    throw std::domain_error("chirality does not match the vertex order");
  AlgebraicNum s2 = phi_pow(2 * scale_exp);
  AlgebraicNum l2 = s2 * phi() * phi();
  AlgebraicNum leg = kind == TriKind::HalfKite ? l2 : s2;
  AlgebraicNum base = kind == TriKind::HalfKite ? s2 : l2;
  if (!(norm2(v[1] - v[0]) == leg && norm2(v[2] - v[0]) == leg && norm2(v[2] - v[1]) == base))
    throw std::domain_error(kind_name(kind) + " side lengths do not match scale " + std::to_string(scale_exp));
}

AlgebraicNum RTriangle::twice_area() const {
  AlgebraicNum a = cross(v[1] - v[0], v[2] - v[0]);
  return chirality == Chirality::Plain ? a : -a;
}

nlohmann::json RTriangle::to_json() const {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& p : v) verts.push_back({p.x.to_json(), p.y.to_json()});
  return {{"kind", kind_name(kind)},
          {"chirality", chirality == Chirality::Plain ? "plain" : "reflected"},
          {"scale_exp", scale_exp},
          {"vertices", verts}};
}

RTriangle RTriangle::from_json(const nlohmann::json& j) {
  std::string k = j.at("kind").get<std::string>();
  if (k != "half-kite" && k != "half-dart") throw std::domain_error("unknown triangle kind " + k);
  const auto& vs = j.at("vertices");
  if (!vs.is_array() || vs.size() != 3) throw std::domain_error("a triangle needs three vertices");
  std::array<Point20, 3> p;
  for (size_t i = 0; i < 3; ++i) p[i] = {AlgebraicNum::from_json(vs[i].at(0)), AlgebraicNum::from_json(vs[i].at(1))};
  RTriangle t = make(k == "half-kite" ? TriKind::HalfKite : TriKind::HalfDart, j.at("scale_exp").get<int>(), p[0], p[1],
                     p[2]);
  if (j.contains("chirality")) {
    std::string c = j["chirality"].get<std::string>();
    if (c != (t.chirality == Chirality::Plain ? "plain" : "reflected"))
      throw std::domain_error("chirality does not match the vertex order");
  }
  t.validate();
  return t;
}

std::array<Arrow, 3> arrows(const RTriangle& t) {
  const auto& [a, b1, b2] = t.v;
  if (t.kind == TriKind::HalfKite) return {Arrow{b1, a, 1}, Arrow{a, b2, 2}, Arrow{b2, b1, 2}};
  return {Arrow{a, b1, 1}, Arrow{a, b2, 2}, Arrow{b2, b1, 2}};
}

nlohmann::json Patch::to_json() const {
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& t : triangles) ts.push_back(t.to_json());
  return {{"regime", regime == Regime::KiteDart ? "kite-dart" : "semi-rhomb"}, {"triangles", ts}};
}

Patch Patch::from_json(const nlohmann::json& j) {
  Patch p;
  std::string r = j.value("regime", "kite-dart");
  if (r == "kite-dart") p.regime = Regime::KiteDart;
  else if (r == "semi-rhomb") p.regime = Regime::SemiRhomb;
  else throw std::domain_error("unknown regime " + r);
  for (const auto& t : j.at("triangles")) p.triangles.push_back(RTriangle::from_json(t));
  return p;
}

std::vector<MatchViolation> validate_matching(const Patch& p) {
  std::vector<MatchViolation> out;
  EdgeMap m = edge_map(p);
  std::vector<std::pair<EdgeKey, std::vector<size_t>>> shared;
  for (auto& [k, ts] : m)
    if (ts.size() > 1) shared.emplace_back(k, ts);
  std::sort(shared.begin(), shared.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  auto arrow_on = [&](size_t t, const EdgeKey& e) {
    for (const Arrow& a : arrows(p.triangles[t]))
      if (same_edge(a.from, a.to, e.p, e.q)) return a;
    throw std::logic_error("edge not found on its triangle");
  };
  for (const auto& [e, ts] : shared) {
    if (ts.size() > 2) {
      out.push_back({ts[0], ts[1], "edge shared by " + std::to_string(ts.size()) + " triangles"});
      continue;
    }
    Arrow a = arrow_on(ts[0], e), b = arrow_on(ts[1], e);
    if (a.heads != b.heads) out.push_back({ts[0], ts[1], "single and double arrows meet"});
    else if (!(a.from == b.from)) out.push_back({ts[0], ts[1], "arrows point in opposite directions"});
  }
  return out;
}

std::vector<std::pair<size_t, size_t>> overlapping_pairs(const Patch& p) {
  size_t n = p.triangles.size();
  std::vector<Box> boxes(n);
  double cell = 1e300;
  for (size_t i = 0; i < n; ++i) {
    boxes[i] = box_of(p.triangles[i]);
    cell = std::min(cell, std::max(boxes[i].x1 - boxes[i].x0, boxes[i].y1 - boxes[i].y0));
  }
  std::map<std::pair<long, long>, std::vector<size_t>> grid;
  for (size_t i = 0; i < n; ++i)
    for (long gx = long(std::floor(boxes[i].x0 / cell)); gx <= long(std::floor(boxes[i].x1 / cell)); ++gx)
      for (long gy = long(std::floor(boxes[i].y0 / cell)); gy <= long(std::floor(boxes[i].y1 / cell)); ++gy)
        grid[{gx, gy}].push_back(i);
  std::set<std::pair<size_t, size_t>> found;
  const double eps = 1e-9;
  for (const auto& [c, ids] : grid)
    for (size_t a = 0; a < ids.size(); ++a)
      for (size_t b = a + 1; b < ids.size(); ++b) {
        size_t i = ids[a], j = ids[b];
        const Box &x = boxes[i], &y = boxes[j];
        if (x.x1 < y.x0 - eps || y.x1 < x.x0 - eps || x.y1 < y.y0 - eps || y.y1 < x.y0 - eps) continue;
        if (found.count({i, j})) continue;
        if (interiors_meet(p.triangles[i], p.triangles[j])) found.insert({i, j});
      }
  return {found.begin(), found.end()};
}

std::pair<size_t, size_t> population(const Patch& p) {
  size_t k = 0;
  for (const auto& t : p.triangles) k += t.kind == TriKind::HalfKite;
  return {k, p.triangles.size() - k};
}

AlgebraicNum total_twice_area(const Patch& p) {
  AlgebraicNum s(0);
  for (const auto& t : p.triangles) s += t.twice_area();
  return s;
}

Patch scale_phi(const Patch& p, int k) {
  AlgebraicNum f = phi_pow(k);
  Patch out;
  out.regime = p.regime;
  out.triangles.resize(p.triangles.size());
  parallel_for(p.triangles.size(), [&](size_t i) {
    RTriangle t = p.triangles[i];
    for (auto& v : t.v) v = f * v;
    t.scale_exp += k;
    out.triangles[i] = t;
  });
  return out;
}

Patch decompose(const Patch& p) {
  require_regime(p, Regime::KiteDart, "decompose");
  auto bad = validate_matching(p);
  if (!bad.empty()) throw std::domain_error("decompose needs a valid patch: " + bad[0].reason);
  std::vector<std::vector<RTriangle>> kids(p.triangles.size());
  parallel_for(p.triangles.size(), [&](size_t i) {
    const RTriangle& t = p.triangles[i];
    int e = t.scale_exp - 1;
    if (t.kind == TriKind::HalfKite) {
      const auto& [a, b, c] = t.v;
      Point20 x = a + inv_phi() * (b - a);
      Point20 y = a + inv_phi2() * (c - a);
      kids[i] = {RTriangle::make(TriKind::HalfDart, e, y, a, x), RTriangle::make(TriKind::HalfKite, e, c, x, y),
                 RTriangle::make(TriKind::HalfKite, e, c, x, b)};
    } else {
      const auto& [d, e1, f] = t.v;
      Point20 z = f + inv_phi2() * (e1 - f);
      kids[i] = {RTriangle::make(TriKind::HalfKite, e, e1, d, z), RTriangle::make(TriKind::HalfDart, e, z, f, d)};
    }
  });
  Patch out;
  for (auto& k : kids) out.triangles.insert(out.triangles.end(), k.begin(), k.end());
  return out;
}

CompositionStep compose_pass1(const Patch& p, BoundaryPolicy policy) {
  require_regime(p, Regime::KiteDart, "the first composition pass");
  EdgeMap m = edge_map(p);
  size_t n = p.triangles.size();
  std::vector<long> partner(n, -1);  // dart -> kite
  std::vector<char> claimed(n, 0);
  for (size_t i = 0; i < n; ++i) {
    const RTriangle& d = p.triangles[i];
    if (d.kind != TriKind::HalfDart) continue;
    auto j = across(m, i, d.v[0], d.v[2]);
    if (j) {
      const RTriangle& k = p.triangles[*j];
      if (k.kind == TriKind::HalfKite && same_edge(k.v[1], k.v[2], d.v[0], d.v[2]) && !claimed[*j]) {
        partner[i] = long(*j);
        claimed[*j] = 1;
        continue;
      }
    }
    if (policy == BoundaryPolicy::Strict) throw std::domain_error("orphan " + tri_name(p, i) + ": no half-kite partner");
  }
  CompositionStep st;
  st.patch.regime = Regime::SemiRhomb;
  st.parent.assign(n, -1);
  for (size_t i = 0; i < n; ++i) {
    const RTriangle& t = p.triangles[i];
    if (t.kind == TriKind::HalfDart) {
      if (partner[i] < 0) continue;
      const RTriangle& k = p.triangles[size_t(partner[i])];
      st.parent[i] = st.parent[size_t(partner[i])] = int(st.patch.triangles.size());
      st.patch.triangles.push_back(RTriangle::make(TriKind::HalfDart, t.scale_exp + 1, t.v[2], k.v[0], t.v[1]));
    } else if (!claimed[i]) {
      st.parent[i] = int(st.patch.triangles.size());
      st.patch.triangles.push_back(t);
    }
  }
  return st;
}

CompositionStep compose_pass2(const Patch& p, BoundaryPolicy policy) {
  require_regime(p, Regime::SemiRhomb, "the second composition pass");
  EdgeMap m = edge_map(p);
  size_t n = p.triangles.size();
  std::vector<long> partner(n, -1);  // acute -> obtuse
  std::vector<char> claimed(n, 0);
  for (size_t i = 0; i < n; ++i) {
    const RTriangle& a = p.triangles[i];
    if (a.kind != TriKind::HalfKite) continue;
    auto j = across(m, i, a.v[0], a.v[1]);
    if (j) {
      const RTriangle& o = p.triangles[*j];
      if (o.kind == TriKind::HalfDart && same_edge(o.v[0], o.v[1], a.v[1], a.v[0]) && !claimed[*j]) {
        partner[i] = long(*j);
        claimed[*j] = 1;
        continue;
      }
    }
    if (policy == BoundaryPolicy::Strict)
      throw std::domain_error("orphan acute semi-rhomb #" + std::to_string(i) + ": no obtuse partner");
  }
  CompositionStep st;
  st.patch.regime = Regime::KiteDart;
  st.parent.assign(n, -1);
  for (size_t i = 0; i < n; ++i) {
    const RTriangle& t = p.triangles[i];
    if (t.kind == TriKind::HalfKite) {
      if (partner[i] < 0) continue;
      const RTriangle& o = p.triangles[size_t(partner[i])];
      st.parent[i] = st.parent[size_t(partner[i])] = int(st.patch.triangles.size());
      st.patch.triangles.push_back(RTriangle::make(TriKind::HalfKite, t.scale_exp + 1, o.v[2], t.v[2], t.v[0]));
    } else if (!claimed[i]) {
      st.parent[i] = int(st.patch.triangles.size());
      st.patch.triangles.push_back(t);
    }
  }
  return st;
}

Patch compose(const Patch& p, BoundaryPolicy policy) {
  return compose_pass2(compose_pass1(p, policy).patch, policy).patch;
}

Patch cartwheel(int n) {
  if (n < 0) throw std::domain_error("cartwheel level must be nonnegative");
  AlgebraicNum c18 = q20::cos_deg(18);
  AlgebraicNum half_inv = inv_phi().scaled(Rational(1, 2));
  Point20 a1{AlgebraicNum(0), AlgebraicNum(1)};
  Point20 a4{AlgebraicNum(0), -inv_phi()};
  Point20 a2{-c18, -half_inv};
  Point20 a3{c18, -half_inv};
  Patch c;
  c.triangles = {RTriangle::make(TriKind::HalfKite, 0, a1, a2, a4), RTriangle::make(TriKind::HalfKite, 0, a1, a3, a4)};
  for (int i = 0; i < n; ++i) c = decompose(scale_phi(c, 1));
  return c;
}

bool contains_tiles(const Patch& big, const Patch& small) {
  TriSet s = tri_set(big);
  for (const auto& t : small.triangles)
    if (!s.count({t.kind, t.v})) return false;
  return true;
}

bool same_tiles(const Patch& a, const Patch& b) {
  return a.triangles.size() == b.triangles.size() && tri_set(a).size() == a.triangles.size() && contains_tiles(a, b);
}

namespace {

std::vector<Point20> make_ccw(std::vector<Point20> v) {
  if (real_sign_unchecked(twice_area(v)) < 0) std::reverse(v.begin(), v.end());
  return v;
}

// Pairs triangles of equal kind across the edge (v[i0], v[i1]) with matching roles.
template <class Build>
std::vector<Polygon> merge_pairs(const Patch& p, int i0, int i1, BoundaryPolicy policy, const char* what, Build build) {
  EdgeMap m = edge_map(p);
  std::vector<char> used(p.triangles.size(), 0);
  std::vector<Polygon> out;
  for (size_t i = 0; i < p.triangles.size(); ++i) {
    if (used[i]) continue;
    const RTriangle& t = p.triangles[i];
    auto j = across(m, i, t.v[size_t(i0)], t.v[size_t(i1)]);
    if (j && !used[*j]) {
      const RTriangle& u = p.triangles[*j];
      if (u.kind == t.kind && u.v[size_t(i0)] == t.v[size_t(i0)] && u.v[size_t(i1)] == t.v[size_t(i1)]) {
        used[i] = used[*j] = 1;
        out.push_back(build(t, u));
        continue;
      }
    }
    if (policy == BoundaryPolicy::Strict) throw std::domain_error("orphan " + tri_name(p, i) + ": no partner across its " + what);
  }
  return out;
}

}  // namespace

std::vector<Polygon> merge_to_kites_darts(const Patch& p, BoundaryPolicy policy) {
  require_regime(p, Regime::KiteDart, "merging into kites and darts");
  return merge_pairs(p, 0, 1, policy, "single-arrow leg", [](const RTriangle& t, const RTriangle& u) {
    if (t.kind == TriKind::HalfKite) return Polygon{"kite", make_ccw({t.v[0], t.v[2], t.v[1], u.v[2]})};
    return Polygon{"dart", make_ccw({t.v[1], t.v[2], t.v[0], u.v[2]})};
  });
}

std::vector<Polygon> merge_to_rhombs(const Patch& p, BoundaryPolicy policy) {
  require_regime(p, Regime::SemiRhomb, "merging into rhombs");
  return merge_pairs(p, 1, 2, policy, "base", [](const RTriangle& t, const RTriangle& u) {
    return Polygon{t.kind == TriKind::HalfDart ? "thick" : "thin", make_ccw({t.v[0], t.v[1], u.v[0], t.v[2]})};
  });
}

bool is_convex(const std::vector<Point20>& poly) {
  size_t n = poly.size();
  int sign = 0;
  for (size_t i = 0; i < n; ++i) {
    int o = orient(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]);
    if (o == 0) continue;
    if (sign == 0) sign = o;
    else if (o != sign) return false;
  }
  return sign != 0;
}

Point20 interior_point(const RTriangle& t, const Rational& w0, const Rational& w1) {
  Rational w2 = Rational(1) - w0 - w1;
  if (w0.sign() <= 0 || w1.sign() <= 0 || w2.sign() <= 0) throw std::domain_error("barycentric weights must be positive");
  return AlgebraicNum(w0) * t.v[0] + AlgebraicNum(w1) * t.v[1] + AlgebraicNum(w2) * t.v[2];
}

std::optional<size_t> locate(const Patch& p, const Point20& x) {
  auto [px, py] = to_double(x);
  for (size_t i = 0; i < p.triangles.size(); ++i) {
    Box b = box_of(p.triangles[i]);
    if (px < b.x0 - 1e-9 || px > b.x1 + 1e-9 || py < b.y0 - 1e-9 || py > b.y1 + 1e-9) continue;
    auto v = ccw(p.triangles[i]);
    int o0 = orient(v[0], v[1], x), o1 = orient(v[1], v[2], x), o2 = orient(v[2], v[0], x);
    if (o0 > 0 && o1 > 0 && o2 > 0) return i;
    if (o0 >= 0 && o1 >= 0 && o2 >= 0) throw std::domain_error("basepoint lies on a triangle edge");
  }
  return std::nullopt;
}

int index_bit(const RTriangle& t, Regime regime) {
  bool kite = t.kind == TriKind::HalfKite;
  return regime == Regime::KiteDart ? (kite ? 0 : 1) : (kite ? 1 : 0);
}

IndexTower::IndexTower(const Patch& p, int steps, BoundaryPolicy policy) {
  if (steps < 0) throw std::domain_error("steps must be nonnegative");
  levels_.push_back(p);
  for (int n = 0; n < steps; ++n) {
    const Patch& cur = levels_.back();
    CompositionStep st = cur.regime == Regime::KiteDart ? compose_pass1(cur, policy) : compose_pass2(cur, policy);
    parent_.push_back(std::move(st.parent));
    levels_.push_back(std::move(st.patch));
  }
}

IndexSeq IndexTower::bits_from(size_t start) const {
  IndexSeq out;
  size_t idx = start;
  if (idx >= levels_[0].triangles.size()) throw std::domain_error("no such triangle");
  for (size_t n = 0; n < levels_.size(); ++n) {
    out.push_back(index_bit(levels_[n].triangles[idx], levels_[n].regime));
    if (n + 1 == levels_.size()) break;
    int up = parent_[n][idx];
    if (up < 0)
      throw std::domain_error("basepoint leaves the patch after " + std::to_string(n + 1) +
                              " composition steps; use a larger patch");
    idx = size_t(up);
  }
  return out;
}

IndexSeq IndexTower::bits(const Point20& basepoint) const {
  auto i = locate(levels_[0], basepoint);
  if (!i) throw std::domain_error("basepoint is outside the patch");
  return bits_from(*i);
}

IndexSeq index_sequence(const MarkedPatch& mp, int steps, BoundaryPolicy policy) {
  return IndexTower(mp.patch, steps, policy).bits(mp.basepoint);
}

bool has_factor_11(const IndexSeq& s) {
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i] == 1 && s[i - 1] == 1) return true;
  return false;
}

EPSeq to_epseq(const IndexSeq& prefix, const IndexSeq& period) { return EPSeq::make(prefix, period); }

TranslationReport translation_symmetries(const Patch& p, const Rational& r2) {
  AlgebraicNum bound(r2);
  TriSet all = tri_set(p);
  std::vector<const RTriangle*> window;
  std::vector<Point20> verts;
  std::unordered_set<Point20, Vec2Hash<AlgebraicNum>> seen;
  for (const auto& t : p.triangles) {
    bool inside = true;
    for (const auto& v : t.v) inside = inside && compare_real(norm2(v), bound) <= 0;
    if (!inside) continue;
    window.push_back(&t);
    for (const auto& v : t.v)
      if (seen.insert(v).second) verts.push_back(v);
  }
  TranslationReport rep;
  rep.window_tiles = window.size();
  std::unordered_set<Point20, Vec2Hash<AlgebraicNum>> tried;
  for (const auto& a : verts)
    for (const auto& b : verts) {
      if (a == b) continue;
      Point20 d = a - b;
      if (!tried.insert(d).second) continue;
      ++rep.candidates;
      bool maps = true;
      for (const RTriangle* t : window) {
        TriKey k{t->kind, {t->v[0] + d, t->v[1] + d, t->v[2] + d}};
        if (!all.count(k)) {
          maps = false;
          break;
        }
      }
      if (maps) rep.periods.push_back(d);
    }
  return rep;
}

}  // namespace tessella
