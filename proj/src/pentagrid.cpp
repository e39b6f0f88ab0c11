#include "tessella/pentagrid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tessella/parallel.hpp"

namespace tessella {

namespace {

const QSqrt5& inv_phi() {
  static const QSqrt5 v = QSqrt5::phi() - QSqrt5(1);
  return v;
}

// zeta^l = alpha_l + beta_l zeta as plane vectors, so <z, zeta^l> = alpha_l u0 + beta_l u1.
const std::array<QSqrt5, 5>& alpha() {
  static const std::array<QSqrt5, 5> a = {QSqrt5(1), QSqrt5(0), QSqrt5(-1), -inv_phi(), inv_phi()};
  return a;
}
const std::array<QSqrt5, 5>& beta() {
  static const std::array<QSqrt5, 5> b = {QSqrt5(0), QSqrt5(1), inv_phi(), -inv_phi(), QSqrt5(-1)};
  return b;
}

const QSqrt5& cos72() {
  static const QSqrt5 c(Rational(-1, 4), Rational(1, 4));
  return c;
}

// Constraint alpha u0 + beta u1 (<, =, >) c for family l.
struct Half {
  int l;
  QSqrt5 c;
  int side;  // +1: u_l > c, -1: u_l < c
};

std::optional<GridPoint> solve(int l1, const QSqrt5& c1, int l2, const QSqrt5& c2) {
  const QSqrt5 &a1 = alpha()[size_t(l1)], &b1 = beta()[size_t(l1)];
  const QSqrt5 &a2 = alpha()[size_t(l2)], &b2 = beta()[size_t(l2)];
  QSqrt5 det = a1 * b2 - a2 * b1;
  if (det.is_zero()) return std::nullopt;
  return GridPoint{(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
}

std::array<Half, 10> cell_constraints(const Z5& n, const GammaParams& g) {
  std::array<Half, 10> h;
  for (int l = 0; l < 5; ++l) {
    QSqrt5 lo = QSqrt5(n[size_t(l)] - 1) - g.gamma[size_t(l)];
    h[size_t(2 * l)] = {l, lo, +1};
    h[size_t(2 * l + 1)] = {l, lo + QSqrt5(1), -1};
  }
  return h;
}

int slack_sign(const Half& h, const GridPoint& p) { return (p.u(h.l) - h.c).sign() * h.side; }

std::string line_str(const GridLine& l) { return "(" + std::to_string(l.j) + "," + std::to_string(l.k) + ")"; }

}  // namespace

void GammaParams::validate() const {
  QSqrt5 s;
  for (const auto& x : gamma) s += x;
  if (!s.is_zero()) throw std::domain_error("gamma entries must sum to zero, got " + s.str());
}

bool GammaParams::is_rational() const {
  return std::all_of(gamma.begin(), gamma.end(), [](const QSqrt5& x) { return x.is_rational(); });
}

GammaParams GammaParams::parse(const std::string& csv) {
  GammaParams g;
  std::stringstream ss(csv);
  std::string item;
  size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i == 5) throw std::domain_error("gamma needs exactly five entries");
    g.gamma[i++] = QSqrt5::parse(item);
  }
  if (i != 5) throw std::domain_error("gamma needs exactly five entries");
  g.validate();
  return g;
}

std::string GammaParams::str() const {
  std::string s;
  for (size_t i = 0; i < 5; ++i) s += (i ? "," : "") + gamma[i].str();
  return s;
}

nlohmann::json GammaParams::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : gamma) j.push_back(x.str());
  return j;
}

QSqrt5 GridPoint::u(int l) const { return alpha()[size_t(l)] * u0 + beta()[size_t(l)] * u1; }

QSqrt5 GridPoint::norm2() const {
  QSqrt5 y = u1 - cos72() * u0;
  QSqrt5 s2 = QSqrt5(1) - cos72() * cos72();
  return u0 * u0 + y * y / s2;
}

Point20 GridPoint::to_point() const {
  AlgebraicNum y = (u1 - cos72() * u0).to_field() / q20::sin_deg(72);
  return {u0.to_field(), y};
}

AlgebraicNum omega(const GammaParams& g) {
  AlgebraicNum w(0);
  for (int j = 0; j < 5; ++j) w += g.gamma[size_t(j)].to_field() * q20::zeta5(2 * j);
  return w;
}

bool omega_equal(const GammaParams& a, const GammaParams& b) { return omega(a) == omega(b); }

Equivalence equivalent(const GammaParams& a, const GammaParams& b) {
  Equivalence e;
  AlgebraicNum wa = omega(a), wb = omega(b);
  for (int k = 0; k < 5; ++k) {
    AlgebraicNum d = wa - q20::zeta5(2 * k) * wb;
    auto c = zeta5_coords(d);
    if (!c || !std::all_of(c->begin(), c->end(), [](const Rational& r) { return r.is_integer(); })) continue;
    e.in_scope = true;
    if (ideal_member(d)) {
      e.k = k;
      return e;
    }
  }
  return e;
}

GammaParams gamma_realizing(const AlgebraicNum& w) {
  auto target = zeta5_coords(w);
  if (!target) throw std::domain_error("omega must lie in Q(zeta_5)");
  // unknowns gamma_1..gamma_4 with gamma_0 = -(gamma_1 + ... + gamma_4)
  std::array<std::array<Rational, 5>, 4> m;
  for (int j = 1; j <= 4; ++j) {
    auto col = *zeta5_coords(q20::zeta5(2 * j) - AlgebraicNum(1));
    for (int r = 0; r < 4; ++r) m[size_t(r)][size_t(j - 1)] = col[size_t(r)];
  }
  for (int r = 0; r < 4; ++r) m[size_t(r)][4] = (*target)[size_t(r)];
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    while (m[size_t(piv)][size_t(c)].is_zero()) ++piv;
    std::swap(m[size_t(piv)], m[size_t(c)]);
    for (int r = 0; r < 4; ++r) {
      if (r == c || m[size_t(r)][size_t(c)].is_zero()) continue;
      Rational f = m[size_t(r)][size_t(c)] / m[size_t(c)][size_t(c)];
      for (int k = c; k < 5; ++k) m[size_t(r)][size_t(k)] = m[size_t(r)][size_t(k)] - f * m[size_t(c)][size_t(k)];
    }
  }
  GammaParams g;
  Rational sum(0);
  for (int j = 1; j <= 4; ++j) {
    Rational v = m[size_t(j - 1)][4] / m[size_t(j - 1)][size_t(j - 1)];
    g.gamma[size_t(j)] = v;
    sum = sum + v;
  }
  g.gamma[0] = -sum;
  return g;
}

std::vector<GridLine> lines_in_disk(const GammaParams& g, const Rational& radius) {
  if (radius.sign() < 0) throw std::domain_error("radius must be nonnegative");
  g.validate();
  std::vector<GridLine> out;
  QSqrt5 r(radius);
  for (int j = 0; j < 5; ++j) {
    const QSqrt5& gj = g.gamma[size_t(j)];
    for (int64_t k = (gj - r).ceil(); k <= (gj + r).floor(); ++k) out.push_back({j, k});
  }
  return out;
}

GridPoint intersect_u(const GridLine& a, const GridLine& b, const GammaParams& g) {
  if (a.j == b.j) throw std::domain_error("lines of one family are parallel");
  return *solve(a.j, QSqrt5(a.k) - g.gamma[size_t(a.j)], b.j, QSqrt5(b.k) - g.gamma[size_t(b.j)]);
}

Point20 intersect(const GridLine& a, const GridLine& b, const GammaParams& g) { return intersect_u(a, b, g).to_point(); }

namespace {

// Lines through p other than the two given families.
std::vector<GridLine> lines_through(const GridPoint& p, const GammaParams& g) {
  std::vector<GridLine> out;
  for (int l = 0; l < 5; ++l) {
    QSqrt5 v = p.u(l) + g.gamma[size_t(l)];
    if (v.is_integer()) out.push_back({l, v.a().num()});
  }
  return out;
}

struct Crossing {
  GridLine a, b;
  GridPoint p;
  bool in_disk;
  std::vector<GridLine> through;
};

std::vector<Crossing> crossings(const GammaParams& g, const Rational& radius) {
  auto lines = lines_in_disk(g, radius);
  std::vector<std::pair<GridLine, GridLine>> pairs;
  for (size_t x = 0; x < lines.size(); ++x)
    for (size_t y = x + 1; y < lines.size(); ++y)
      if (lines[x].j != lines[y].j) pairs.push_back({lines[x], lines[y]});
  std::vector<Crossing> out(pairs.size());
  QSqrt5 r2(radius * radius);
  parallel_for(pairs.size(), [&](size_t i) {
    auto [a, b] = pairs[i];
    GridPoint p = intersect_u(a, b, g);
    bool in = p.norm2() <= r2;
    out[i] = {a, b, p, in, in ? lines_through(p, g) : std::vector<GridLine>{}};
  });
  std::erase_if(out, [](const Crossing& c) { return !c.in_disk; });
  return out;
}

}  // namespace

std::vector<TriplePoint> regularity_check(const GammaParams& g, const Rational& radius) {
  std::vector<TriplePoint> out;
  std::set<std::vector<GridLine>> seen;
  for (const auto& c : crossings(g, radius)) {
    if (c.through.size() < 3) continue;
    if (seen.insert(c.through).second) out.push_back({c.p, c.through});
  }
  return out;
}

std::vector<GridPoint> cell_corners(const Z5& n, const GammaParams& g) {
  auto h = cell_constraints(n, g);
  std::vector<GridPoint> pts;
  for (size_t x = 0; x < h.size(); ++x)
    for (size_t y = x + 1; y < h.size(); ++y) {
      if (h[x].l == h[y].l) continue;
      auto p = solve(h[x].l, h[x].c, h[y].l, h[y].c);
      if (!p) continue;
      bool ok = std::all_of(h.begin(), h.end(), [&](const Half& c) { return slack_sign(c, *p) >= 0; });
      if (ok && std::find(pts.begin(), pts.end(), *p) == pts.end()) pts.push_back(*p);
    }
  return pts;
}

std::optional<GridPoint> hypercube_witness(const Z5& n, const GammaParams& g) {
  auto pts = cell_corners(n, g);
  if (pts.size() < 3) return std::nullopt;
  QSqrt5 s0, s1;
  for (const auto& p : pts) {
    s0 += p.u0;
    s1 += p.u1;
  }
  QSqrt5 inv(Rational(1, int64_t(pts.size())));
  GridPoint c{s0 * inv, s1 * inv};
  auto h = cell_constraints(n, g);
  if (std::all_of(h.begin(), h.end(), [&](const Half& x) { return slack_sign(x, c) > 0; })) return c;
  return std::nullopt;
}

bool hypercube_meets_plane(const Z5& n, const GammaParams& g) { return hypercube_witness(n, g).has_value(); }

std::vector<Z5> hypercube_vertices_in_disk(const GammaParams& g, const Rational& radius) {
  g.validate();
  QSqrt5 r(radius), r2(radius * radius);
  std::vector<std::pair<int64_t, int64_t>> base;
  for (int64_t n0 = (g.gamma[0] - r).ceil(); n0 <= (g.gamma[0] + r).floor() + 1; ++n0)
    for (int64_t n1 = (g.gamma[1] - r).ceil(); n1 <= (g.gamma[1] + r).floor() + 1; ++n1) base.push_back({n0, n1});
  std::vector<std::vector<Z5>> found(base.size());
  parallel_for(base.size(), [&](size_t i) {
    auto [n0, n1] = base[i];
    QSqrt5 lo0 = QSqrt5(n0 - 1) - g.gamma[0], lo1 = QSqrt5(n1 - 1) - g.gamma[1];
    std::array<GridPoint, 4> box = {GridPoint{lo0, lo1}, GridPoint{lo0 + 1, lo1}, GridPoint{lo0, lo1 + 1},
                                    GridPoint{lo0 + 1, lo1 + 1}};
    std::array<std::pair<int64_t, int64_t>, 5> range;
    for (int l = 2; l < 5; ++l) {
      QSqrt5 mn = box[0].u(l), mx = mn;
      for (const auto& p : box) {
        QSqrt5 v = p.u(l);
        if (v < mn) mn = v;
        if (v > mx) mx = v;
      }
      range[size_t(l)] = {(mn + g.gamma[size_t(l)]).ceil(), (mx + g.gamma[size_t(l)]).floor() + 1};
    }
    Z5 n{n0, n1, 0, 0, 0};
    for (n[2] = range[2].first; n[2] <= range[2].second; ++n[2])
      for (n[3] = range[3].first; n[3] <= range[3].second; ++n[3])
        for (n[4] = range[4].first; n[4] <= range[4].second; ++n[4]) {
          int64_t s = n[0] + n[1] + n[2] + n[3] + n[4];
          if (s < 1 || s > 4) continue;  // the n_l - (u_l + gamma_l) lie in (0, 1) and sum to s
          if (!hypercube_meets_plane(n, g)) continue;
          auto corners = cell_corners(n, g);
          if (std::any_of(corners.begin(), corners.end(), [&](const GridPoint& p) { return p.norm2() <= r2; }))
            found[i].push_back(n);
        }
  });
  std::vector<Z5> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

Point20 embed(const Z5& n) {
  Point20 p{AlgebraicNum(0), AlgebraicNum(0)};
  for (int j = 0; j < 5; ++j) {
    AlgebraicNum c(n[size_t(j)]);
    p = p + Point20{c * q20::cos_deg(72 * j), c * q20::sin_deg(72 * j)};
  }
  return p;
}

std::vector<Z5> RhombTiling::vertices() const {
  std::vector<Z5> v;
  for (const auto& r : rhombs) v.insert(v.end(), r.labels.begin(), r.labels.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

nlohmann::json RhombTiling::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : rhombs) {
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& n : r.labels) labels.push_back(n);
    rs.push_back({{"lines", {{r.a.j, r.a.k}, {r.b.j, r.b.k}}}, {"kind", r.thick ? "thick" : "thin"}, {"labels", labels}});
  }
  return {{"gamma", gamma.to_json()},
          {"radius", radius.str()},
          {"embedding", "sum n_j zeta^j, unit edges"},
          {"projected_edge_length", projected_edge_length},
          {"rhombs", rs}};
}

RhombTiling generate_tiling(const GammaParams& g, const Rational& radius) {
  auto cs = crossings(g, radius);
  std::vector<std::string> bad;
  for (const auto& c : cs)
    if (c.through.size() > 2) {
      std::string s;
      for (const auto& l : c.through) s += line_str(l);
      bad.push_back(s);
    }
  if (!bad.empty()) {
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    std::string msg = "singular pentagrid inside the disk; concurrent lines:";
    for (const auto& b : bad) msg += " " + b;
    throw std::domain_error(msg);
  }
  RhombTiling t;
  t.gamma = g;
  t.radius = radius;
  t.rhombs.resize(cs.size());
  parallel_for(cs.size(), [&](size_t i) {
    const Crossing& c = cs[i];
    Z5 n;
    for (int l = 0; l < 5; ++l) n[size_t(l)] = (c.p.u(l) + g.gamma[size_t(l)]).ceil();
    int j = c.a.j, jp = c.b.j;
    auto label = [&](int64_t dj, int64_t djp) {
      Z5 m = n;
      m[size_t(j)] = c.a.k + dj;
      m[size_t(jp)] = c.b.k + djp;
      return m;
    };
    int d = jp - j;
    t.rhombs[i] = {c.a, c.b, c.p, {label(0, 0), label(1, 0), label(1, 1), label(0, 1)}, d == 1 || d == 4};
  });
  std::sort(t.rhombs.begin(), t.rhombs.end(),
            [](const Rhomb& x, const Rhomb& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return t;
}

EdgeReport edge_check(const RhombTiling& t) {
  EdgeReport rep;
  std::map<std::pair<Z5, Z5>, std::vector<std::pair<size_t, Z5>>> edges;  // edge -> (rhomb, opposite vertex)
  for (size_t i = 0; i < t.rhombs.size(); ++i) {
    const auto& L = t.rhombs[i].labels;
    for (size_t s = 0; s < 4; ++s) {
      Z5 p = L[s], q = L[(s + 1) % 4], other = L[(s + 2) % 4];
      if (q < p) std::swap(p, q);
      edges[{p, q}].push_back({i, other});
    }
  }
  rep.vertices = t.vertices().size();
  rep.edges = edges.size();
  rep.faces = t.rhombs.size();
  for (const auto& [e, users] : edges) {
    if (users.size() > 2) {
      rep.violations.push_back("edge on " + std::to_string(users.size()) + " rhombs");
      continue;
    }
    if (users.size() < 2) continue;
    Point20 p = embed(e.first), q = embed(e.second);
    if (orient(p, q, embed(users[0].second)) == orient(p, q, embed(users[1].second)))
      rep.violations.push_back("rhombs " + std::to_string(users[0].first) + " and " + std::to_string(users[1].first) +
                               " overlap along an edge");
  }
  return rep;
}

}  // namespace tessella
