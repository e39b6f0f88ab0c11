#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tessella {

// Colors are indices into the owning set's color table. JSON order is [n, s, w, e].
struct WangTile {
  int n = 0, s = 0, w = 0, e = 0;
  friend bool operator==(const WangTile&, const WangTile&) = default;
  friend auto operator<=>(const WangTile&, const WangTile&) = default;
};

struct WangColor {
  std::string name;
  std::string rgb;  // "#rrggbb" or empty
};

class WangSet {
 public:
  WangSet() = default;
  explicit WangSet(std::vector<WangColor> colors) : colors_(std::move(colors)) {}

  int add_color(const std::string& name, const std::string& rgb = "");
  int color_id(const std::string& name) const;  // throws if unknown
  // Returns the tile index; an existing identical tile is reused.
  int add_tile(const WangTile& t);

  const std::vector<WangColor>& colors() const { return colors_; }
  const std::vector<WangTile>& tiles() const { return tiles_; }
  size_t size() const { return tiles_.size(); }
  const WangTile& operator[](size_t i) const { return tiles_[i]; }

  nlohmann::json to_json() const;
  static WangSet from_json(const nlohmann::json& j);

 private:
  std::vector<WangColor> colors_;
  std::vector<WangTile> tiles_;
};

enum class Wrap { None, Torus };

// Cell (i, j): column i from the west, row j from the south; north is j+1.
struct WangGrid {
  int width = 0, height = 0;
  std::vector<int> cells;  // row-major, index j * width + i
  Wrap wrap = Wrap::None;

  int at(int i, int j) const { return cells[static_cast<size_t>(j) * width + i]; }
  int& at(int i, int j) { return cells[static_cast<size_t>(j) * width + i]; }

  nlohmann::json to_json() const;
  friend bool operator==(const WangGrid&, const WangGrid&) = default;
};

struct GridViolation {
  int i, j;
  char side;  // 'E': (i,j).e vs (i+1,j).w ; 'N': (i,j).n vs (i,j+1).s ; 'X': bad tile index
  friend bool operator==(const GridViolation&, const GridViolation&) = default;
};

std::vector<GridViolation> validate_grid(const WangSet& set, const WangGrid& g);

// Torus repeated rx times horizontally and ry times vertically, without wrap.
WangGrid unroll(const WangGrid& torus, int rx, int ry);

struct SearchOptions {
  bool first_fail = false;  // pick the most constrained open cell instead of row-major order
  int64_t node_limit = -1;  // abort (throw) after this many placements; -1 = unlimited
};

std::optional<WangGrid> fill_rectangle(const WangSet& set, int w, int h, const SearchOptions& opt = {});
std::optional<WangGrid> torus_search(const WangSet& set, int m, int n, const SearchOptions& opt = {});

struct Verdict {
  enum class Kind { NoTiling, BiPeriodic, Unknown } kind = Kind::Unknown;
  int a = 0, b = 0;  // NoTiling: a = square side; BiPeriodic: a x b torus
  std::optional<WangGrid> witness;
  std::string str() const;
};

// Dovetails square filling and torus search by increasing area up to `budget` cells.
Verdict decide(const WangSet& set, int budget);

// Domino strips as walks in a directed graph on pip counts.
struct DominoSet {
  std::vector<std::pair<int, int>> edges;  // (left, right)
};

using Digraph = std::map<int, std::vector<int>>;  // sorted, deduplicated successors

Digraph domino_graph(const DominoSet& d);
// A closed walk v0 -> ... -> vk = v0, found by DFS over vertices and successors in increasing order.
std::optional<std::vector<int>> find_cycle(const Digraph& g);

struct Strip {
  std::vector<std::pair<int, int>> period;  // repeated forever in both directions
};

// Minimal period of the strip traced by a closed walk.
Strip cycle_to_strip(const DominoSet& d, const std::vector<int>& cycle);

// Vertices: vertically cyclic columns of height b. Edges: horizontally compatible pairs.
// A cycle of length m gives an m x b torus.
std::optional<WangGrid> column_graph_biperiodic(const WangSet& set, int b);

// All vertically cyclic columns of height b, in lexicographic order of tile indices.
std::vector<std::vector<int>> cyclic_columns(const WangSet& set, int b);

}  // namespace tessella
