#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "tessella/cutproject.hpp"
#include "tessella/kari.hpp"
#include "tessella/monotile.hpp"
#include "tessella/parallel.hpp"
#include "tessella/penrose.hpp"
#include "tessella/pentagrid.hpp"
#include "tessella/render.hpp"
#include "tessella/subshift.hpp"
#include "tessella/wang.hpp"

using nlohmann::json;
using namespace tessella;

namespace {

// Input that parses but is unusable; reported as a usage error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json_out = false;
  std::string svg;
  std::string style;
  uint64_t seed = 1;
  int budget = 12;
  int threads = 0;
};

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  return json::parse(f);
}

std::pair<int, int> parse_size(const std::string& s) {
  int w = 0, h = 0;
  char x = 0, extra = 0;
  if (std::sscanf(s.c_str(), "%d%c%d%c", &w, &x, &h, &extra) != 3 || x != 'x' || w < 1 || h < 1)
    throw UsageError("size must look like WxH with positive W and H, got " + s);
  return {w, h};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

// "p/q", "sqrt3", "p/q*sqrt3"
HexNum parse_hexreal(const std::string& s) {
  const std::string tag = "sqrt3";
  if (s.size() >= tag.size() && s.compare(s.size() - tag.size(), tag.size(), tag) == 0) {
    std::string head = s.substr(0, s.size() - tag.size());
    if (head.empty()) return q12::sqrt3();
    if (head.back() != '*') throw UsageError("cannot parse length " + s);
    head.pop_back();
    return HexNum(Rational::parse(head)) * q12::sqrt3();
  }
  return HexNum(Rational::parse(s));
}

template <class F>
json point_json(const Vec2<F>& p) {
  return json::array({p.x.to_json(), p.y.to_json()});
}

json polygons_json(const std::vector<Polygon>& ps) {
  json a = json::array();
  for (const auto& p : ps) {
    json v = json::array();
    for (const auto& q : p.v) v.push_back(point_json(q));
    a.push_back({{"kind", p.kind}, {"vertices", v}});
  }
  return a;
}

json outline_json(const Outline& o) {
  json v = json::array();
  for (const auto& p : o.vertices) v.push_back(point_json(p));
  return {{"vertices", v}, {"edges", o.vertices.size()}, {"twice_area", twice_area(o).to_json()}, {"spectre", o.spectre}};
}

json cells_json(const std::vector<KiteCell>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back({c.q, c.r, c.sector});
  return a;
}

json violations_json(const std::vector<GridViolation>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back({{"i", v.i}, {"j", v.j}, {"side", std::string(1, v.side)}});
  return a;
}

json word_json(const Word& w) {
  json a = json::array();
  for (int x : w) a.push_back(x);
  return a;
}

// Human-readable form: scalars verbatim, containers summarized.
void print_human(const json& j, std::ostream& os) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_array()) os << k << ": [" << v.size() << " items]\n";
    else if (v.is_object()) os << k << ": {" << v.size() << " fields}\n";
    else if (v.is_string()) os << k << ": " << v.get<std::string>() << "\n";
    else os << k << ": " << v.dump() << "\n";
  }
}

std::string out_path(const std::string& p) {
  const char* dir = std::getenv("TESSELLA_OUT_DIR");
  if (!dir || !*dir || std::filesystem::path(p).is_absolute()) return p;
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / p).string();
}

struct Runner {
  Globals g;
  StyleConfig style;
  json result;
  std::optional<Scene> scene;

  void emit() {
    if (g.svg.size()) {
      if (!scene) throw UsageError("this command has no SVG rendering");
      std::string path = out_path(g.svg);
      save_svg(*scene, path);
      result["svg"] = path;
    }
    if (g.json_out) std::cout << result.dump(2) << "\n";
    else print_human(result, std::cout);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aperiodic tiling toolkit: cut-and-project, Wang tiles, Kari, Penrose, pentagrids, SFTs, hats"};
  app.require_subcommand(1, 1);
  Runner run;
  Globals& g = run.g;
  auto add_globals = [&](CLI::App* a) {
    a->fallthrough();
  };
  app.add_flag("--json", g.json_out, "JSON on stdout");
  app.add_option("--svg", g.svg, "write an SVG rendering (relative paths go under TESSELLA_OUT_DIR)");
  app.add_option("--style", g.style, "StyleConfig JSON file");
  app.add_option("--seed", g.seed, "seed for randomized demos");
  app.add_option("--budget", g.budget, "search budget in cells")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::NonNegativeNumber);

  std::function<void()> action;

  // cutproject
  std::string m_expr, window = "0,20";
  auto* cp = app.add_subcommand("cutproject", "staircase word of a cutting line");
  add_globals(cp);
  cp->add_option("--m", m_expr, "slope: p/q or 1/phi")->required();
  cp->add_option("--window", window, "k0,k1");
  cp->callback([&] {
    action = [&] {
      auto parts = split(window, ',');
      if (parts.size() != 2) throw UsageError("window must be k0,k1");
      int64_t k0 = std::stoll(parts[0]), k1 = std::stoll(parts[1]);
      if (k1 <= k0) throw UsageError("window needs k0 < k1");
      Slope s = Slope::parse(m_expr);
      StairWord w = staircase_word(s, k0, k1);
      auto p = detect_period(w);
      run.result = {{"slope", s.value().to_json()}, {"m", m_expr}, {"k0", k0},      {"k1", k1},
                    {"word", w.letters},            {"length", w.letters.size()},
                    {"period", p ? json(*p) : json(nullptr)}};
      if (w.letters.find('S') != std::string::npos) run.result["ls_ratio"] = frequency_ratio(w).str();
      run.scene = scene_staircase(w, run.style);
    };
  });

  // wang
  std::string set_path, size = "4x4";
  auto* wang = app.add_subcommand("wang", "Wang tile searches");
  add_globals(wang);
  wang->require_subcommand(1, 1);
  for (const char* name : {"fill", "torus", "decide"}) {
    auto* sub = wang->add_subcommand(name);
    add_globals(sub);
    sub->add_option("--set", set_path, "WangSet JSON")->required();
    sub->add_option("--size", size, "WxH");
    std::string mode = name;
    sub->callback([&, mode] {
      action = [&, mode] {
        auto [w, h] = mode == "decide" ? std::pair{1, 1} : parse_size(size);
        WangSet set = WangSet::from_json(read_json(set_path));
        if (mode == "decide") {
          Verdict v = decide(set, g.budget);
          const char* kind = v.kind == Verdict::Kind::NoTiling     ? "no-tiling"
                             : v.kind == Verdict::Kind::BiPeriodic ? "biperiodic"
                                                                   : "unknown";
          run.result = {{"verdict", kind}, {"summary", v.str()}, {"budget", g.budget}};
          if (v.kind != Verdict::Kind::Unknown) run.result["size"] = {v.a, v.b};
          if (v.witness) {
            run.result["witness"] = v.witness->to_json();
            run.scene = scene_wang(set, *v.witness, run.style);
          }
          return;
        }
        auto grid = mode == "fill" ? fill_rectangle(set, w, h, {true, -1}) : torus_search(set, w, h, {true, -1});
        run.result = {{"size", {w, h}}, {"verdict", grid ? "found" : "none"}};
        if (grid) {
          run.result["grid"] = grid->to_json();
          run.scene = scene_wang(set, *grid, run.style);
        }
      };
    });
  }

  // kari
  std::string alpha = "1";
  std::string kari_size = "14x6";
  auto* kari = app.add_subcommand("kari", "the 14-tile set");
  add_globals(kari);
  kari->require_subcommand(1, 1);
  for (const char* name : {"set", "patch", "audit"}) {
    auto* sub = kari->add_subcommand(name);
    add_globals(sub);
    if (std::string(name) != "set") {
      sub->add_option("--alpha", alpha, "middle row alpha, p/q in [2/3, 2]");
      sub->add_option("--size", kari_size, "WxH");
    }
    std::string mode = name;
    sub->callback([&, mode] {
      action = [&, mode] {
        auto [w, h] = mode == "set" ? std::pair{1, 1} : parse_size(kari_size);
        const WangSet& set = kari_set();
        if (mode == "set") {
          run.result = set.to_json();
          run.result["count"] = set.size();
          run.scene = scene_wang_strip(set, run.style);
          return;
        }
        WangGrid grid = build_patch(Rational::parse(alpha), w, h);
        if (mode == "patch") {
          auto vs = validate_grid(set, grid);
          run.result = {{"alpha", Rational::parse(alpha).str()}, {"grid", grid.to_json()},
                        {"violations", violations_json(vs)}};
          run.scene = scene_wang(set, grid, run.style);
          return;
        }
        AuditReport rep = multiplier_audit(grid);
        json rows = json::array();
        for (const auto& r : rep.rows)
          rows.push_back({{"row", r.row},
                          {"r", r.r.str()},
                          {"north_sum", r.north_sum.str()},
                          {"south_sum", r.south_sum.str()},
                          {"west", r.west_edge.str()},
                          {"east", r.east_edge.str()},
                          {"identity_holds", r.identity_holds},
                          {"full_period", r.full_period}});
        run.result = {{"alpha", Rational::parse(alpha).str()}, {"rows", rows},
                      {"multiplier_product", rep.multiplier_product.str()}};
      };
    });
  }

  // penrose
  std::string patch_path, policy = "strict", point;
  int cart_n = 0, times = 1, steps = 10, samples = 0;
  auto* pen = app.add_subcommand("penrose", "Robinson triangle patches");
  add_globals(pen);
  pen->require_subcommand(1, 1);
  auto load_patch = [&]() -> Patch {
    if (!patch_path.empty()) return Patch::from_json(read_json(patch_path));
    return cartwheel(cart_n);
  };
  auto parse_policy = [&] {
    if (policy == "strict") return BoundaryPolicy::Strict;
    if (policy == "trim") return BoundaryPolicy::Trim;
    throw UsageError("policy must be strict or trim");
  };
  {
    auto* sub = pen->add_subcommand("cartwheel", "the cartwheel patch C_N");
    add_globals(sub);
    sub->add_option("N", cart_n)->required()->check(CLI::Range(0, 12));
    sub->callback([&] {
      action = [&] {
        Patch p = cartwheel(cart_n);
        auto [k, d] = population(p);
        run.result = {{"n", cart_n}, {"half_kites", k}, {"half_darts", d}, {"patch", p.to_json()}};
        run.scene = scene_penrose(p, run.style);
      };
    });
  }
  for (const char* name : {"decompose", "compose", "index", "kites", "rhombs"}) {
    auto* sub = pen->add_subcommand(name);
    add_globals(sub);
    sub->add_option("--patch", patch_path, "Patch JSON");
    sub->add_option("--cartwheel", cart_n, "use C_N when no patch is given")->check(CLI::Range(0, 12));
    std::string mode = name;
    if (mode == "decompose") sub->add_option("--times", times)->check(CLI::Range(0, 10));
    if (mode != "decompose") sub->add_option("--policy", policy, "strict or trim");
    if (mode == "index") {
      sub->add_option("--point", point, "basepoint x,y as rationals");
      sub->add_option("--steps", steps)->check(CLI::Range(0, 40));
      sub->add_option("--samples", samples, "random basepoints drawn with --seed")->check(CLI::Range(0, 100000));
    }
    sub->callback([&, mode] {
      action = [&, mode] {
        Patch p = load_patch();
        if (mode == "decompose") {
          for (int i = 0; i < times; ++i) p = decompose(p);
          auto [k, d] = population(p);
          run.result = {{"half_kites", k}, {"half_darts", d}, {"patch", p.to_json()}};
          run.scene = scene_penrose(p, run.style);
        } else if (mode == "compose") {
          Patch c = compose(p, parse_policy());
          auto [k, d] = population(c);
          run.result = {{"half_kites", k}, {"half_darts", d}, {"patch", c.to_json()}};
          run.scene = scene_penrose(c, run.style);
        } else if (mode == "kites" || mode == "rhombs") {
          // a kite/dart patch is first taken to its semi-rhomb level
          if (mode == "rhombs" && p.regime == Regime::KiteDart) p = compose_pass1(p, parse_policy()).patch;
          auto ps = mode == "kites" ? merge_to_kites_darts(p, parse_policy()) : merge_to_rhombs(p, parse_policy());
          run.result = {{"count", ps.size()}, {"polygons", polygons_json(ps)}};
          run.scene = scene_polygons(ps, run.style);
        } else {
          if (point.empty() == (samples == 0)) throw UsageError("index needs exactly one of --point and --samples");
          IndexTower tower(p, steps, parse_policy());
          auto bits_str = [](const IndexSeq& s) {
            std::string b;
            for (int x : s) b += char('0' + x);
            return b;
          };
          if (!point.empty()) {
            auto xy = split(point, ',');
            if (xy.size() != 2) throw UsageError("point must be x,y");
            Point20 x{AlgebraicNum(Rational::parse(xy[0])), AlgebraicNum(Rational::parse(xy[1]))};
            IndexSeq s = tower.bits(x);
            run.result = {{"bits", bits_str(s)}, {"has_11", has_factor_11(s)}};
          } else {
            std::mt19937_64 rng(g.seed);
            std::uniform_int_distribution<size_t> pick(0, p.triangles.size() - 1);
            json seqs = json::array();
            bool any11 = false;
            for (int i = 0; i < samples; ++i) {
              size_t t = pick(rng);
              IndexSeq s = tower.bits_from(t);
              any11 |= has_factor_11(s);
              seqs.push_back({{"triangle", t}, {"bits", bits_str(s)}});
            }
            run.result = {{"seed", g.seed}, {"sequences", seqs}, {"has_11", any11}};
          }
        }
      };
    });
  }

  // pentagrid
  std::string gamma = "1/7,2/7,-3/7,3/7,-3/7", gamma2, radius = "3";
  auto* pg = app.add_subcommand("pentagrid", "de Bruijn pentagrids");
  add_globals(pg);
  pg->require_subcommand(1, 1);
  for (const char* name : {"tiling", "grid", "omega", "equiv"}) {
    auto* sub = pg->add_subcommand(name);
    add_globals(sub);
    sub->add_option("--gamma", gamma, "a0,a1,a2,a3,a4 with zero sum");
    if (std::string(name) == "tiling" || std::string(name) == "grid") sub->add_option("--radius", radius);
    if (std::string(name) == "equiv") sub->add_option("--gamma2", gamma2)->required();
    std::string mode = name;
    sub->callback([&, mode] {
      action = [&, mode] {
        GammaParams gp = GammaParams::parse(gamma);
        if (mode == "omega") {
          run.result = {{"gamma", gp.to_json()}, {"omega", omega(gp).to_json()}, {"omega_str", omega(gp).str()}};
          return;
        }
        if (mode == "equiv") {
          GammaParams gq = GammaParams::parse(gamma2);
          Equivalence e = equivalent(gp, gq);
          run.result = {{"omega_equal", omega_equal(gp, gq)},
                        {"equivalent", e.k ? json(*e.k) : json(nullptr)},
                        {"in_scope", e.in_scope}};
          return;
        }
        Rational r = Rational::parse(radius);
        if (r.sign() < 0) throw UsageError("radius must be non-negative");
        if (mode == "tiling") {
          RhombTiling t = generate_tiling(gp, r);
          run.result = t.to_json();
          run.scene = scene_rhombs(t, run.style);
          return;
        }
        auto lines = lines_in_disk(gp, r);
        auto triples = regularity_check(gp, r);
        json ls = json::array();
        for (const auto& l : lines) ls.push_back({l.j, l.k});
        json ts = json::array();
        for (const auto& t : triples) {
          json fam = json::array();
          for (const auto& l : t.lines) fam.push_back({l.j, l.k});
          ts.push_back(fam);
        }
        run.result = {{"lines", ls}, {"regular", triples.empty()}, {"concurrent", ts}};
        run.scene = scene_pentagrid(gp, r, run.style);
      };
    });
  }

  // sft
  std::string spec_path;
  auto* sft = app.add_subcommand("sft", "one-dimensional subshifts of finite type");
  add_globals(sft);
  sft->require_subcommand(1, 1);
  for (const char* name : {"empty", "periodic"}) {
    auto* sub = sft->add_subcommand(name);
    add_globals(sub);
    sub->add_option("--spec", spec_path, "SFT JSON")->required();
    std::string mode = name;
    sub->callback([&, mode] {
      action = [&, mode] {
        SFTSpec s = SFTSpec::from_json(read_json(spec_path));
        if (mode == "empty") {
          run.result = {{"empty", is_empty(s)}};
          return;
        }
        auto x = find_periodic(s);
        run.result = {{"found", x.has_value()}};
        if (x) run.result.update({{"point", x->str()}, {"period", word_json(x->period)}});
      };
    });
  }

  // hat
  std::string a_len = "1", b_len = "sqrt3", hat_patch;
  auto* hat = app.add_subcommand("hat", "hat monotile geometry");
  add_globals(hat);
  hat->require_subcommand(1, 1);
  {
    auto* sub = hat->add_subcommand("outline", "the hat on the side-2 kite lattice");
    add_globals(sub);
    sub->callback([&] {
      action = [&] {
        run.result = outline_json(hat_outline());
        run.result["cells"] = cells_json(hat_cells());
        run.scene = scene_outline(hat_outline(), run.style);
      };
    });
    auto* tile = hat->add_subcommand("tile", "Tile(a, b)");
    add_globals(tile);
    tile->add_option("--a", a_len, "p/q, sqrt3 or p/q*sqrt3");
    tile->add_option("--b", b_len, "p/q, sqrt3 or p/q*sqrt3");
    tile->callback([&] {
      action = [&] {
        Outline o = tile_ab(parse_hexreal(a_len), parse_hexreal(b_len));
        run.result = outline_json(o);
        run.result["similar_to_hat"] = similar(o, hat_outline());
        run.scene = scene_outline(o, run.style);
      };
    });
    auto* check = hat->add_subcommand("check", "kite-level legality of a placement list");
    add_globals(check);
    check->add_option("--patch", hat_patch, "[placement, ...] or {\"placements\": [...], \"window\": [[q,r], ...]}")
        ->required();
    check->callback([&] {
      action = [&] {
        json j = read_json(hat_patch);
        const json& pl = j.is_array() ? j : j.at("placements");
        std::vector<HatPlacement> ps;
        for (const auto& x : pl) ps.push_back(HatPlacement::from_json(x));
        std::vector<std::pair<int, int>> win;
        if (j.is_object() && j.contains("window"))
          for (const auto& h : j.at("window")) win.push_back({h.at(0).get<int>(), h.at(1).get<int>()});
        PatchReport rep = patch_check(ps, win);
        run.result = {{"placements", ps.size()},
                      {"legal", rep.overlaps.empty()},
                      {"overlaps", cells_json(rep.overlaps)},
                      {"uncovered", cells_json(rep.uncovered)}};
        run.scene = scene_hats(ps, run.style);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto fail = [](const char* kind, const std::string& msg, int code) {
    std::cerr << json{{"error", {{"kind", kind}, {"message", msg}}}}.dump() << "\n";
    return code;
  };
  try {
    if (g.threads > 0) set_thread_count(g.threads);
    if (!g.style.empty()) run.style = StyleConfig::from_json(read_json(g.style));
    if (!action) return fail("usage", "no command given", 2);
    action();
    run.emit();
  } catch (const UsageError& e) {
    return fail("usage", e.what(), 2);
  } catch (const json::exception& e) {
    return fail("input", e.what(), 1);
  } catch (const std::invalid_argument& e) {
    return fail("input", e.what(), 1);
  } catch (const std::out_of_range& e) {
    return fail("input", e.what(), 1);
  } catch (const std::domain_error& e) {
    return fail("domain", e.what(), 1);
  } catch (const std::exception& e) {
    return fail("runtime", e.what(), 1);
  }
  return 0;
}
