#include "tessella/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

namespace tessella {

namespace {

std::string num(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

Point12 pt(int64_t x, int64_t y, int64_t den = 1) { return {HexNum(Rational(x, den)), HexNum(Rational(y, den))}; }

std::string slot(const StyleConfig& st, int i) { return st.palette[static_cast<size_t>(i)]; }

Scene finish(Scene s, const StyleConfig& st) {
  s.stroke = st.stroke;
  s.stroke_width = st.stroke_width;
  s.fit();
  return s;
}

// Four triangles of the unit cell with lower-left corner (4x, 4y) / 4.
void add_wang_tile(Scene& s, const WangSet& set, const WangTile& t, int64_t x4, int64_t y4, const StyleConfig& st) {
  Point12 sw = pt(x4, y4, 4), se = pt(x4 + 4, y4, 4), ne = pt(x4 + 4, y4 + 4, 4), nw = pt(x4, y4 + 4, 4);
  Point12 c = pt(2 * x4 + 4, 2 * y4 + 4, 8);
  s.shapes.push_back(exact_polygon(std::vector<Point12>{c, ne, nw}, wang_fill(set, t.n, st)));
  s.shapes.push_back(exact_polygon(std::vector<Point12>{c, nw, sw}, wang_fill(set, t.w, st)));
  s.shapes.push_back(exact_polygon(std::vector<Point12>{c, sw, se}, wang_fill(set, t.s, st)));
  s.shapes.push_back(exact_polygon(std::vector<Point12>{c, se, ne}, wang_fill(set, t.e, st)));
}

}  // namespace

StyleConfig StyleConfig::from_json(const nlohmann::json& j) {
  StyleConfig st;
  auto check_color = [](const std::string& c) {
    if (c.size() != 7 || c[0] != '#' || c.find_first_not_of("0123456789abcdefABCDEF", 1) != std::string::npos)
      throw std::domain_error("bad color " + c);
    return c;
  };
  if (j.contains("palette")) {
    const auto& p = j.at("palette");
    if (p.is_array()) {
      if (p.size() != kPaletteSize) throw std::domain_error("palette array needs 12 entries");
      for (size_t i = 0; i < kPaletteSize; ++i) st.palette[i] = check_color(p[i].get<std::string>());
    } else {
      for (const auto& [k, v] : p.items()) {
        int i = std::stoi(k);
        if (i < 0 || i >= kPaletteSize) throw std::domain_error("palette slot out of range: " + k);
        st.palette[size_t(i)] = check_color(v.get<std::string>());
      }
    }
  }
  if (j.contains("stroke")) st.stroke = check_color(j.at("stroke").get<std::string>());
  st.stroke_width = j.value("stroke_width", 0.0);
  if (!(st.stroke_width >= 0)) throw std::domain_error("stroke_width must be non-negative");
  st.spectre_arcs = j.value("spectre_arcs", false);
  return st;
}

void Scene::fit() {
  bool any = false;
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (const auto& sh : shapes)
    for (auto [x, y] : sh.pts) {
      if (!std::isfinite(x) || !std::isfinite(y)) throw std::domain_error("non-finite coordinate in scene");
      if (!any) {
        x0 = x1 = x;
        y0 = y1 = y;
        any = true;
      }
      x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
  if (!any) {
    viewbox = {-1, -1, 2, 2};
    return;
  }
  double m = 0.05 * std::max({x1 - x0, y1 - y0, 1e-9});
  viewbox = {x0 - m, -(y1 + m), x1 - x0 + 2 * m, y1 - y0 + 2 * m};
}

std::string wang_fill(const WangSet& set, int color, const StyleConfig& st) {
  const auto& c = set.colors().at(static_cast<size_t>(color));
  if (!c.rgb.empty()) return c.rgb;
  static const std::map<std::string, int> kari = {{"-1", 0},  {"-1/3", 1}, {"0", 2}, {"0'", 3},
                                                   {"1/3", 4}, {"2/3", 5},  {"1", 6}, {"2", 7}};
  auto it = kari.find(c.name);
  int k = it != kari.end() ? it->second : color % 8;
  return slot(st, kWangFirst + k);
}

Scene scene_wang(const WangSet& set, const WangGrid& g, const StyleConfig& st) {
  Scene s;
  for (int j = 0; j < g.height; ++j)
    for (int i = 0; i < g.width; ++i) {
      int t = g.at(i, j);
      if (t < 0 || size_t(t) >= set.size()) throw std::domain_error("grid cell is not a tile of the set");
      add_wang_tile(s, set, set[size_t(t)], 4 * i, 4 * j, st);
    }
  return finish(std::move(s), st);
}

Scene scene_wang_strip(const WangSet& set, const StyleConfig& st) {
  Scene s;
  for (size_t i = 0; i < set.size(); ++i) add_wang_tile(s, set, set[i], 5 * int64_t(i), 0, st);
  return finish(std::move(s), st);
}

Scene scene_penrose(const Patch& p, const StyleConfig& st) {
  Scene s;
  for (const auto& t : p.triangles)
    s.shapes.push_back(exact_polygon(std::vector<Point20>(t.v.begin(), t.v.end()),
                                     slot(st, t.chirality == Chirality::Plain ? kWhite : kGrey)));
  return finish(std::move(s), st);
}

Scene scene_polygons(const std::vector<Polygon>& ps, const StyleConfig& st) {
  Scene s;
  for (const auto& p : ps) {
    bool light = p.kind == "kite" || p.kind == "thin";
    s.shapes.push_back(exact_polygon(p.v, slot(st, light ? kWhite : kGrey)));
  }
  return finish(std::move(s), st);
}

Scene scene_rhombs(const RhombTiling& t, const StyleConfig& st) {
  Scene s;
  for (const auto& r : t.rhombs) {
    std::vector<Point20> v;
    for (const auto& l : r.labels) v.push_back(embed(l));
    if (real_sign(twice_area(v)) < 0) std::reverse(v.begin(), v.end());
    s.shapes.push_back(exact_polygon(v, slot(st, r.thick ? kGrey : kWhite)));
  }
  return finish(std::move(s), st);
}

Scene scene_pentagrid(const GammaParams& g, const Rational& radius, const StyleConfig& st) {
  Scene s;
  double R = radius.to_double();
  for (const auto& l : lines_in_disk(g, radius)) {
    // points z with <z, zeta^j> = k - gamma_j
    double a = 2 * M_PI * l.j / 5, d = double(l.k) - double(g.gamma[l.j].approx());
    double h = std::sqrt(std::max(0.0, R * R - d * d));
    double cx = d * std::cos(a), cy = d * std::sin(a), ux = -std::sin(a), uy = std::cos(a);
    Shape sh;
    sh.kind = Shape::Kind::Polyline;
    sh.fill = "none";
    sh.stroke_class = "line";
    sh.pts = {{cx - h * ux, cy - h * uy}, {cx + h * ux, cy + h * uy}};
    s.shapes.push_back(std::move(sh));
  }
  s = finish(std::move(s), st);
  if (s.shapes.empty()) return s;
  double m = 0.05 * 2 * R;
  s.viewbox = {-R - m, -R - m, 2 * R + 2 * m, 2 * R + 2 * m};
  return s;
}

Scene scene_staircase(const StairWord& w, const StyleConfig& st) {
  Scene s;
  int64_t x = 0, y = 0;
  for (char c : w.letters) {
    Shape sh;
    sh.kind = Shape::Kind::Polyline;
    sh.fill = "none";
    sh.stroke_class = c == 'L' ? "path" : "line";
    sh.pts.push_back({double(x), double(y)});
    (c == 'L' ? x : y) += 1;
    sh.pts.push_back({double(x), double(y)});
    s.shapes.push_back(std::move(sh));
  }
  return finish(std::move(s), st);
}

Scene scene_outline(const Outline& o, const StyleConfig& st) {
  Scene s;
  Shape sh = exact_polygon(o.vertices, slot(st, kHat));
  if (o.spectre && st.spectre_arcs) sh.kind = Shape::Kind::ArcPolygon;
  s.shapes.push_back(std::move(sh));
  return finish(std::move(s), st);
}

Scene scene_hats(const std::vector<HatPlacement>& ps, const StyleConfig& st) {
  Scene s;
  for (const auto& p : ps)
    s.shapes.push_back(exact_polygon(placement_outline(p).vertices, slot(st, p.reflected ? kHatReflected : kHat)));
  return finish(std::move(s), st);
}

std::string write_svg(const Scene& s) {
  const auto& vb = s.viewbox;
  double sw = s.stroke_width > 0 ? s.stroke_width : 0.005 * std::max(vb[2], vb[3]);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(vb[0], 4) + " " + num(vb[1], 4) +
         " " + num(vb[2], 4) + " " + num(vb[3], 4) + "\" width=\"800\" height=\"" +
         num(800 * vb[3] / std::max(vb[2], 1e-9), 0) + "\">\n";
  out += "<style>.edge{stroke:" + s.stroke + ";stroke-width:" + num(sw, 6) +
         ";stroke-linejoin:round}.line{stroke:" + s.stroke + ";stroke-width:" + num(sw, 6) +
         ";fill:none}.path{stroke:#e41a1c;stroke-width:" + num(2 * sw, 6) + ";fill:none}</style>\n";
  auto xy = [](std::pair<double, double> p) { return num(p.first, 6) + "," + num(-p.second, 6); };
  for (const auto& sh : s.shapes) {
    switch (sh.kind) {
      case Shape::Kind::Polygon: {
        out += "<polygon class=\"" + sh.stroke_class + "\" fill=\"" + sh.fill + "\" points=\"";
        for (size_t i = 0; i < sh.pts.size(); ++i) out += (i ? " " : "") + xy(sh.pts[i]);
        out += "\"/>\n";
        break;
      }
      case Shape::Kind::Polyline: {
        out += "<polyline class=\"" + sh.stroke_class + "\" points=\"";
        for (size_t i = 0; i < sh.pts.size(); ++i) out += (i ? " " : "") + xy(sh.pts[i]);
        out += "\"/>\n";
        break;
      }
      case Shape::Kind::ArcPolygon: {
        // each edge becomes a shallow arc, alternating sides
        out += "<path class=\"" + sh.stroke_class + "\" fill=\"" + sh.fill + "\" d=\"M" + xy(sh.pts[0]);
        for (size_t i = 0; i < sh.pts.size(); ++i) {
          auto a = sh.pts[i], b = sh.pts[(i + 1) % sh.pts.size()];
          std::string r = num(std::hypot(b.first - a.first, b.second - a.second), 6);
          out += " A" + r + "," + r + " 0 0," + (i % 2 ? "1 " : "0 ") + xy(b);
        }
        out += " Z\"/>\n";
        break;
      }
    }
  }
  out += "</svg>\n";
  return out;
}

void save_svg(const Scene& s, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << write_svg(s);
  f.close();
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

const std::vector<std::string>& golden_names() {
  static const std::vector<std::string> names = {"kari-strip", "cartwheel-2", "pentagrid-r4"};
  return names;
}

Scene golden_scene(const std::string& name) {
  if (name == "kari-strip") return scene_wang_strip(kari_set());
  if (name == "cartwheel-2") return scene_penrose(cartwheel(2));
  if (name == "pentagrid-r4") {
    GammaParams g = GammaParams::parse("1/7,2/7,-3/7,3/7,-3/7");
    return scene_rhombs(generate_tiling(g, Rational(4)));
  }
  throw std::domain_error("unknown snapshot " + name);
}

}  // namespace tessella
