#include "tessella/kari.hpp"

#include <algorithm>
#include <stdexcept>

namespace tessella {

namespace {

const Rational kTwo(2);
const Rational kTwoThirds(2, 3);

bool is_t2(const Rational& r) { return r == kTwo; }

void check_r(const Rational& r) {
  if (r != kTwo && r != kTwoThirds) throw std::domain_error("r must be 2 or 2/3, got " + r.str());
}

int64_t floor_mul(int64_t k, const Rational& a) { return (Rational(k) * a).floor(); }

auto tile_key(const KariTile& t) {
  return std::make_tuple(t.a.value, t.c.value, t.b.value, t.b.prime, t.d.value, t.d.prime);
}

struct KariData {
  WangSet set;
  std::vector<KariTile> tiles;
};

const KariData& data() {
  static const KariData d = [] {
    KariData k;
    for (const char* name : {"-1", "-1/3", "0", "0'", "1/3", "2/3", "1", "2"}) k.set.add_color(name);
    for (const Rational& r : {kTwo, kTwoThirds}) {
      for (const KariTile& t : enumerate_T(r, 20)) {
        WangTile w{k.set.color_id(t.a.name()), k.set.color_id(t.c.name()), k.set.color_id(t.b.name()),
                   k.set.color_id(t.d.name())};
        k.set.add_tile(w);
        k.tiles.push_back(t);
      }
    }
    return k;
  }();
  return d;
}

}  // namespace

std::string KariColor::name() const {
  std::string s = value.is_integer() ? std::to_string(value.num()) : value.str();
  return prime ? s + "'" : s;
}

void BeattyParams::validate() const {
  check_r(r);
  if (is_t2(r)) {
    if (alpha < Rational(1, 2) || alpha > Rational(1)) throw std::domain_error("T_2 needs alpha in [1/2, 1]");
  } else if (alpha <= Rational(1) || alpha > Rational(2)) {
    throw std::domain_error("T_2/3 needs alpha in (1, 2]");
  }
}

int64_t beatty_B(const Rational& alpha, int64_t k) { return floor_mul(k, alpha) - floor_mul(k - 1, alpha); }

Rational beatty_A(const Rational& r, const Rational& alpha, int64_t k) {
  if (r.sign() <= 0) throw std::domain_error("r must be positive");
  return r * Rational(floor_mul(k, alpha)) - Rational((r * Rational(k) * alpha).floor());
}

KariTile tile_at(const BeattyParams& p, int64_t k) {
  p.validate();
  bool t2 = is_t2(p.r);
  KariTile t;
  t.r = p.r;
  t.a = {Rational(beatty_B(p.alpha, k)), false};
  t.c = {Rational(beatty_B(p.r * p.alpha, k)), false};
  t.b = {beatty_A(p.r, p.alpha, k - 1), false};
  t.d = {beatty_A(p.r, p.alpha, k), false};
  if (t2) {
    t.b.prime = t.b.value.is_zero();
    t.d.prime = t.d.value.is_zero();
  }
  return t;
}

std::vector<KariTile> enumerate_T(const Rational& r, int sample_density) {
  check_r(r);
  if (sample_density < 1) throw std::domain_error("sample density must be positive");
  std::vector<KariTile> out;
  int lo = is_t2(r) ? (sample_density + 1) / 2 : sample_density + 1;
  int hi = is_t2(r) ? sample_density : 2 * sample_density;
  for (int j = lo; j <= hi; ++j) {
    Rational alpha(j, sample_density);
    // A_k and B_k are periodic in k with period dividing 3 * den(alpha)
    int64_t period = 3 * alpha.den();
    for (int64_t k = 0; k < period; ++k) {
      KariTile t = tile_at({r, alpha}, k);
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end(), [](const KariTile& x, const KariTile& y) { return tile_key(x) < tile_key(y); });
  return out;
}

const WangSet& kari_set() { return data().set; }

int kari_index(const KariTile& t) {
  const auto& tiles = data().tiles;
  auto it = std::find(tiles.begin(), tiles.end(), t);
  if (it == tiles.end())
    throw std::domain_error("tile (" + t.a.name() + "," + t.c.name() + "," + t.b.name() + "," + t.d.name() +
                            ") is not in the 14-tile set");
  return static_cast<int>(it - tiles.begin());
}

WangTile to_wang(const KariTile& t) { return kari_set()[kari_index(t)]; }

Rational dyn_f(const Rational& alpha) {
  if (alpha < Rational(1, 2) || alpha > Rational(2)) throw std::domain_error("f is defined on [1/2, 2]");
  return alpha <= Rational(1) ? kTwo * alpha : kTwoThirds * alpha;
}

Rational dyn_g(const Rational& alpha) {
  // right inverse of f; 2/3 has no preimage under f
  if (alpha <= kTwoThirds || alpha > Rational(2)) throw std::domain_error("g is defined on (2/3, 2]");
  return alpha <= Rational(4, 3) ? Rational(3, 2) * alpha : alpha / kTwo;
}

Rational row_multiplier(const Rational& alpha) { return dyn_f(alpha) / alpha; }

std::vector<Rational> row_alphas(const Rational& alpha0, int height) {
  if (height < 1) throw std::domain_error("height must be positive");
  if (alpha0 < kTwoThirds || alpha0 > Rational(2)) throw std::domain_error("alpha0 must lie in [2/3, 2]");
  std::vector<Rational> a(static_cast<size_t>(height));
  int mid = height / 2;
  a[mid] = alpha0;
  for (int j = mid + 1; j < height; ++j) a[j] = dyn_g(a[j - 1]);
  for (int j = mid - 1; j >= 0; --j) a[j] = dyn_f(a[j + 1]);
  return a;
}

WangGrid build_patch(const Rational& alpha0, int width, int height) {
  if (width < 1) throw std::domain_error("width must be positive");
  auto alphas = row_alphas(alpha0, height);
  WangGrid g;
  g.width = width;
  g.height = height;
  g.cells.resize(size_t(width) * height);
  for (int j = 0; j < height; ++j) {
    Rational r = row_multiplier(alphas[j]);
    for (int i = 0; i < width; ++i) g.at(i, j) = kari_index(tile_at({r, alphas[j]}, i - width / 2));
  }
  return g;
}

AuditReport multiplier_audit(const WangGrid& g) {
  const auto& tiles = data().tiles;
  AuditReport rep;
  rep.multiplier_product = Rational(1);
  for (int j = 0; j < g.height; ++j) {
    RowAudit ra{};
    ra.row = j;
    for (int i = 0; i < g.width; ++i) {
      int idx = g.at(i, j);
      if (idx < 0 || idx >= int(tiles.size())) throw std::domain_error("cell is not a Kari tile");
      const KariTile& t = tiles[idx];
      if (i == 0) ra.r = t.r;
      else if (ra.r != t.r) throw std::domain_error("row " + std::to_string(j) + " mixes T_2 and T_2/3 tiles");
      ra.north_sum += t.a.value;
      ra.south_sum += t.c.value;
    }
    ra.west_edge = tiles[g.at(0, j)].b.value;
    ra.east_edge = tiles[g.at(g.width - 1, j)].d.value;
    ra.identity_holds = ra.r * ra.north_sum + ra.west_edge == ra.south_sum + ra.east_edge;
    ra.full_period = ra.west_edge == ra.east_edge;
    rep.multiplier_product *= ra.r;
    rep.rows.push_back(ra);
  }
  return rep;
}

}  // namespace tessella
