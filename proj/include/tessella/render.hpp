#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tessella/cutproject.hpp"
#include "tessella/geometry.hpp"
#include "tessella/kari.hpp"
#include "tessella/monotile.hpp"
#include "tessella/pentagrid.hpp"
#include "tessella/penrose.hpp"
#include "tessella/wang.hpp"

namespace tessella {

// Palette slots.
enum PaletteSlot : int {
  kWhite = 0,
  kGrey = 1,
  kHat = 2,
  kHatReflected = 3,
  kWangFirst = 4,  // 4..11: Wang colors, Kari colors keyed by value
};
constexpr int kPaletteSize = 12;

struct StyleConfig {
  std::array<std::string, kPaletteSize> palette = {"#ffffff", "#a6a6a6", "#cfcfcf", "#1f3a7a", "#e41a1c", "#377eb8",
                                                   "#4daf4a", "#984ea3", "#ff7f00", "#ffd92f", "#a65628", "#f781bf"};
  std::string stroke = "#000000";
  double stroke_width = 0;  // 0: 0.5% of the larger viewbox side
  bool spectre_arcs = false;

  // {"palette": {"3": "#123456"} or a 12-array, "stroke": "#rrggbb", "stroke_width": w, "spectre_arcs": b}
  static StyleConfig from_json(const nlohmann::json& j);
};

struct Shape {
  enum class Kind { Polygon, Polyline, ArcPolygon } kind = Kind::Polygon;
  std::vector<std::pair<double, double>> pts;  // y axis up
  std::string fill;                            // "#rrggbb" or "none"
  std::string stroke_class;                    // edge, line, path
};

struct Scene {
  std::vector<Shape> shapes;
  std::array<double, 4> viewbox = {-1, -1, 2, 2};  // min x, min y (SVG orientation), width, height
  std::string stroke = "#000000";
  double stroke_width = 0;

  // Fits the viewbox to the shapes with a 5% margin.
  void fit();
};

// Throws std::domain_error unless the polygon is simple; converts after the check.
template <class F>
Shape exact_polygon(const std::vector<Vec2<F>>& poly, std::string fill, std::string stroke_class = "edge") {
  if (!is_simple_polygon(poly)) throw std::domain_error("refusing to render a non-simple polygon");
  Shape s;
  s.fill = std::move(fill);
  s.stroke_class = std::move(stroke_class);
  for (const auto& p : poly) s.pts.push_back(to_double(p));
  return s;
}

std::string wang_fill(const WangSet& set, int color, const StyleConfig& st);

Scene scene_wang(const WangSet& set, const WangGrid& g, const StyleConfig& st = {});
// The tiles of the set side by side with a gap of 1/4.
Scene scene_wang_strip(const WangSet& set, const StyleConfig& st = {});
Scene scene_penrose(const Patch& p, const StyleConfig& st = {});
Scene scene_polygons(const std::vector<Polygon>& ps, const StyleConfig& st = {});
Scene scene_rhombs(const RhombTiling& t, const StyleConfig& st = {});
// Grid lines clipped to the disk of the given radius.
Scene scene_pentagrid(const GammaParams& g, const Rational& radius, const StyleConfig& st = {});
// Lattice staircase with L steps horizontal and S steps vertical.
Scene scene_staircase(const StairWord& w, const StyleConfig& st = {});
Scene scene_outline(const Outline& o, const StyleConfig& st = {});
Scene scene_hats(const std::vector<HatPlacement>& ps, const StyleConfig& st = {});

std::string write_svg(const Scene& s);
void save_svg(const Scene& s, const std::string& path);  // throws std::runtime_error on I/O failure

// Snapshot scenes: "kari-strip", "cartwheel-2", "pentagrid-r4".
const std::vector<std::string>& golden_names();
Scene golden_scene(const std::string& name);

}  // namespace tessella
