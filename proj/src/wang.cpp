#include "tessella/wang.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tessella {

int WangSet::add_color(const std::string& name, const std::string& rgb) {
  for (size_t i = 0; i < colors_.size(); ++i)
    if (colors_[i].name == name) return static_cast<int>(i);
  colors_.push_back({name, rgb});
  return static_cast<int>(colors_.size() - 1);
}

int WangSet::color_id(const std::string& name) const {
  for (size_t i = 0; i < colors_.size(); ++i)
    if (colors_[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown color \"" + name + "\"");
}

int WangSet::add_tile(const WangTile& t) {
  int nc = static_cast<int>(colors_.size());
  for (int c : {t.n, t.s, t.w, t.e})
    if (c < 0 || c >= nc) throw std::invalid_argument("tile color id out of range");
  auto it = std::find(tiles_.begin(), tiles_.end(), t);
  if (it != tiles_.end()) return static_cast<int>(it - tiles_.begin());
  tiles_.push_back(t);
  return static_cast<int>(tiles_.size() - 1);
}

nlohmann::json WangSet::to_json() const {
  nlohmann::json colors = nlohmann::json::array(), tiles = nlohmann::json::array();
  for (const auto& c : colors_) {
    if (c.rgb.empty()) colors.push_back(c.name);
    else colors.push_back({{"name", c.name}, {"rgb", c.rgb}});
  }
  for (const auto& t : tiles_) tiles.push_back({t.n, t.s, t.w, t.e});
  return {{"colors", colors}, {"tiles", tiles}};
}

WangSet WangSet::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("colors") || !j.contains("tiles"))
    throw std::invalid_argument("Wang set JSON needs \"colors\" and \"tiles\"");
  WangSet s;
  for (const auto& c : j.at("colors")) {
    if (c.is_string()) s.colors_.push_back({c.get<std::string>(), ""});
    else if (c.is_object()) s.colors_.push_back({c.at("name").get<std::string>(), c.value("rgb", "")});
    else throw std::invalid_argument("color entry must be a string or {name, rgb}");
  }
  for (const auto& t : j.at("tiles")) {
    if (!t.is_array() || t.size() != 4) throw std::invalid_argument("tile must be [n, s, w, e]");
    int c[4];
    for (int k = 0; k < 4; ++k) c[k] = t[k].is_string() ? s.color_id(t[k].get<std::string>()) : t[k].get<int>();
    s.add_tile({c[0], c[1], c[2], c[3]});
  }
  return s;
}

nlohmann::json WangGrid::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int j = height - 1; j >= 0; --j) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < width; ++i) row.push_back(at(i, j));
    rows.push_back(row);
  }
  return {{"width", width}, {"height", height}, {"wrap", wrap == Wrap::Torus ? "torus" : "none"},
          {"rows_north_to_south", rows}};
}

std::vector<GridViolation> validate_grid(const WangSet& set, const WangGrid& g) {
  std::vector<GridViolation> out;
  int nt = static_cast<int>(set.size());
  if (g.width <= 0 || g.height <= 0 || g.cells.size() != size_t(g.width) * size_t(g.height)) {
    out.push_back({0, 0, 'X'});
    return out;
  }
  for (int j = 0; j < g.height; ++j)
    for (int i = 0; i < g.width; ++i)
      if (g.at(i, j) < 0 || g.at(i, j) >= nt) out.push_back({i, j, 'X'});
  if (!out.empty()) return out;
  bool torus = g.wrap == Wrap::Torus;
  for (int j = 0; j < g.height; ++j) {
    for (int i = 0; i < g.width; ++i) {
      const WangTile& t = set[g.at(i, j)];
      if (i + 1 < g.width || torus) {
        const WangTile& r = set[g.at((i + 1) % g.width, j)];
        if (t.e != r.w) out.push_back({i, j, 'E'});
      }
      if (j + 1 < g.height || torus) {
        const WangTile& u = set[g.at(i, (j + 1) % g.height)];
        if (t.n != u.s) out.push_back({i, j, 'N'});
      }
    }
  }
  return out;
}

WangGrid unroll(const WangGrid& torus, int rx, int ry) {
  WangGrid g;
  g.width = torus.width * rx;
  g.height = torus.height * ry;
  g.cells.resize(size_t(g.width) * g.height);
  for (int j = 0; j < g.height; ++j)
    for (int i = 0; i < g.width; ++i) g.at(i, j) = torus.at(i % torus.width, j % torus.height);
  return g;
}

namespace {

class GridSolver {
 public:
  GridSolver(const WangSet& set, int w, int h, bool torus, const SearchOptions& opt)
      : set_(set), w_(w), h_(h), torus_(torus), opt_(opt), cells_(size_t(w) * h, -1) {}

  std::optional<WangGrid> run() {
    if (set_.size() == 0) return std::nullopt;
    if (!solve(0)) return std::nullopt;
    WangGrid g;
    g.width = w_;
    g.height = h_;
    g.cells = cells_;
    g.wrap = torus_ ? Wrap::Torus : Wrap::None;
    return g;
  }

 private:
  int idx(int i, int j) const { return j * w_ + i; }

  // Neighbor cell index in direction d (0 W, 1 E, 2 S, 3 N) or -1 at a non-wrapping border.
  int neighbor(int c, int d) const {
    int i = c % w_, j = c / w_;
    switch (d) {
      case 0: return i > 0 ? idx(i - 1, j) : (torus_ ? idx(w_ - 1, j) : -1);
      case 1: return i + 1 < w_ ? idx(i + 1, j) : (torus_ ? idx(0, j) : -1);
      case 2: return j > 0 ? idx(i, j - 1) : (torus_ ? idx(i, h_ - 1) : -1);
      default: return j + 1 < h_ ? idx(i, j + 1) : (torus_ ? idx(i, 0) : -1);
    }
  }

  bool fits(int c, int t) const {
    const WangTile& tile = set_[t];
    for (int d = 0; d < 4; ++d) {
      int nb = neighbor(c, d);
      if (nb < 0) continue;
      int other = nb == c ? t : cells_[nb];
      if (other < 0) continue;
      const WangTile& o = set_[other];
      bool ok = d == 0 ? o.e == tile.w : d == 1 ? o.w == tile.e : d == 2 ? o.n == tile.s : o.s == tile.n;
      if (!ok) return false;
    }
    return true;
  }

  int count_fits(int c) const {
    int k = 0;
    for (size_t t = 0; t < set_.size(); ++t) k += fits(c, int(t));
    return k;
  }

  int next_cell(int placed) const {
    if (!opt_.first_fail) return placed;
    int best = -1, best_count = 0;
    for (int c = 0; c < int(cells_.size()); ++c) {
      if (cells_[c] >= 0) continue;
      int k = count_fits(c);
      if (best < 0 || k < best_count) {
        best = c;
        best_count = k;
        if (k == 0) break;
      }
    }
    return best;
  }

  bool solve(int placed) {
    if (placed == int(cells_.size())) return true;
    int c = next_cell(placed);
    for (size_t t = 0; t < set_.size(); ++t) {
      if (!fits(c, int(t))) continue;
      if (opt_.node_limit >= 0 && ++nodes_ > opt_.node_limit) throw std::runtime_error("search node limit reached");
      cells_[c] = int(t);
      bool alive = true;
      for (int d = 0; d < 4 && alive; ++d) {
        int nb = neighbor(c, d);
        if (nb >= 0 && cells_[nb] < 0) alive = count_fits(nb) > 0;
      }
      if (alive && solve(placed + 1)) return true;
      cells_[c] = -1;
    }
    return false;
  }

  const WangSet& set_;
  int w_, h_;
  bool torus_;
  SearchOptions opt_;
  std::vector<int> cells_;
  int64_t nodes_ = 0;
};

}  // namespace

std::optional<WangGrid> fill_rectangle(const WangSet& set, int w, int h, const SearchOptions& opt) {
  if (w < 1 || h < 1) throw std::domain_error("rectangle sides must be positive");
  return GridSolver(set, w, h, false, opt).run();
}

std::optional<WangGrid> torus_search(const WangSet& set, int m, int n, const SearchOptions& opt) {
  if (m < 1 || n < 1) throw std::domain_error("torus periods must be positive");
  return GridSolver(set, m, n, true, opt).run();
}

std::string Verdict::str() const {
  switch (kind) {
    case Kind::NoTiling: return "NoTiling(" + std::to_string(a) + ")";
    case Kind::BiPeriodic: return "BiPeriodic(" + std::to_string(a) + "," + std::to_string(b) + ")";
    default: return "Unknown";
  }
}

Verdict decide(const WangSet& set, int budget) {
  if (budget < 1) throw std::domain_error("budget must be at least 1");
  Verdict v;
  for (int area = 1; area <= budget; ++area) {
    int n = 1;
    while ((n + 1) * (n + 1) <= area) ++n;
    if (n * n == area && !fill_rectangle(set, n, n)) {
      v.kind = Verdict::Kind::NoTiling;
      v.a = n;
      return v;
    }
    for (int m = 1; m <= area; ++m) {
      if (area % m != 0) continue;
      if (auto g = torus_search(set, m, area / m)) {
        v.kind = Verdict::Kind::BiPeriodic;
        v.a = m;
        v.b = area / m;
        v.witness = std::move(g);
        return v;
      }
    }
  }
  return v;
}

Digraph domino_graph(const DominoSet& d) {
  Digraph g;
  for (auto [l, r] : d.edges) {
    g[l].push_back(r);
    g[r];
  }
  for (auto& [v, succ] : g) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  return g;
}

std::optional<std::vector<int>> find_cycle(const Digraph& g) {
  std::map<int, int> state;  // 0 new, 1 on stack, 2 done
  std::vector<int> stack;
  std::optional<std::vector<int>> found;
  std::function<bool(int)> dfs = [&](int u) {
    state[u] = 1;
    stack.push_back(u);
    auto it = g.find(u);
    if (it != g.end()) {
      for (int v : it->second) {
        int sv = state[v];
        if (sv == 1) {
          auto pos = std::find(stack.begin(), stack.end(), v);
          std::vector<int> cyc(pos, stack.end());
          cyc.push_back(v);
          found = cyc;
          return true;
        }
        if (sv == 0 && dfs(v)) return true;
      }
    }
    stack.pop_back();
    state[u] = 2;
    return false;
  };
  for (const auto& [v, succ] : g)
    if (state[v] == 0 && dfs(v)) return found;
  return std::nullopt;
}

Strip cycle_to_strip(const DominoSet& d, const std::vector<int>& cycle) {
  if (cycle.size() < 2 || cycle.front() != cycle.back()) throw std::invalid_argument("not a closed walk");
  std::vector<std::pair<int, int>> seq;
  for (size_t k = 1; k < cycle.size(); ++k) {
    std::pair<int, int> e{cycle[k - 1], cycle[k]};
    if (std::find(d.edges.begin(), d.edges.end(), e) == d.edges.end())
      throw std::invalid_argument("walk uses a missing domino (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ")");
    seq.push_back(e);
  }
  size_t n = seq.size();
  for (size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (size_t i = 0; i + p < n && ok; ++i) ok = seq[i] == seq[i + p];
    if (ok) return {std::vector<std::pair<int, int>>(seq.begin(), seq.begin() + p)};
  }
  return {seq};
}

std::vector<std::vector<int>> cyclic_columns(const WangSet& set, int b) {
  if (b < 1) throw std::domain_error("column height must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> col;
  std::function<void()> rec = [&] {
    if (int(col.size()) == b) {
      if (set[col.back()].n == set[col.front()].s) out.push_back(col);
      return;
    }
    for (size_t t = 0; t < set.size(); ++t) {
      if (!col.empty() && set[col.back()].n != set[t].s) continue;
      col.push_back(int(t));
      rec();
      col.pop_back();
    }
  };
  rec();
  return out;
}

std::optional<WangGrid> column_graph_biperiodic(const WangSet& set, int b) {
  auto cols = cyclic_columns(set, b);
  Digraph g;
  for (size_t h = 0; h < cols.size(); ++h) {
    auto& succ = g[int(h)];
    for (size_t k = 0; k < cols.size(); ++k) {
      bool ok = true;
      for (int j = 0; j < b && ok; ++j) ok = set[cols[h][j]].e == set[cols[k][j]].w;
      if (ok) succ.push_back(int(k));
    }
  }
  auto cyc = find_cycle(g);
  if (!cyc) return std::nullopt;
  WangGrid grid;
  grid.width = int(cyc->size()) - 1;
  grid.height = b;
  grid.wrap = Wrap::Torus;
  grid.cells.resize(size_t(grid.width) * b);
  for (int i = 0; i < grid.width; ++i)
    for (int j = 0; j < b; ++j) grid.at(i, j) = cols[(*cyc)[i]][j];
  return grid;
}

}  // namespace tessella
