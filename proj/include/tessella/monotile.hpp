#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tessella/geometry.hpp"

namespace tessella {

// Flat-top hexagons of side 2; axial (q, r) has center q (3, sqrt3) + r (0, 2 sqrt3).
// Sector s is the kite holding the hexagon vertex at angle 60 s degrees.
struct KiteCell {
  int q = 0, r = 0, sector = 0;
  friend auto operator<=>(const KiteCell&, const KiteCell&) = default;
};

struct HatPlacement {
  int q = 0, r = 0;
  int rotation = 0;  // multiples of 60 degrees, counter-clockwise
  bool reflected = false;  // mirror in the x-axis, applied before the rotation

  nlohmann::json to_json() const;
  static HatPlacement from_json(const nlohmann::json& j);
};

struct Outline {
  std::vector<Point12> vertices;  // counter-clockwise
  bool spectre = false;           // Tile(a, a): the equal-sided member of the family
};

Point12 hex_center(int q, int r);
std::array<Point12, 4> kite_vertices(const KiteCell& c);  // center, edge midpoint, hex vertex, edge midpoint

// The eight kites of the hat in its home placement.
const std::vector<KiteCell>& hat_cells();
std::vector<KiteCell> place_hat(const HatPlacement& p);  // sorted

// Boundary of a union of kites; collinear unit edges are kept as separate edges.
Outline outline_of_cells(const std::vector<KiteCell>& cells);
Outline hat_outline();
// Edges of length 1 scaled to a, edges of length sqrt3 scaled to b.
Outline tile_ab(const HexNum& a, const HexNum& b);
Outline placement_outline(const HatPlacement& p);
// Sums of the hat's unit edges and of its sqrt3 edges; tile_ab closes for every (a, b) iff both vanish.
std::pair<Point12, Point12> closure_sums();

HexNum twice_area(const Outline& o);
// Same shape up to a rotation and translation, and optionally a uniform scale.
bool congruent(const Outline& a, const Outline& b);
bool similar(const Outline& a, const Outline& b);

struct PatchReport {
  std::vector<KiteCell> overlaps;   // cells claimed more than once
  std::vector<KiteCell> uncovered;  // cells of the window hexagons claimed by nobody
};
PatchReport patch_check(const std::vector<HatPlacement>& ps, const std::vector<std::pair<int, int>>& window = {});

}  // namespace tessella
