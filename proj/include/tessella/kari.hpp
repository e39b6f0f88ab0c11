#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tessella/rational.hpp"
#include "tessella/wang.hpp"

namespace tessella {

// A color of the 14-tile set. Vertical (west/east) zeros of T_2 carry the prime.
struct KariColor {
  Rational value;
  bool prime = false;

  std::string name() const;  // "-1/3", "0'", "2", ...
  friend bool operator==(const KariColor&, const KariColor&) = default;
};

struct KariTile {
  KariColor a, c;  // north, south (integers)
  KariColor b, d;  // west, east
  Rational r;      // 2 or 2/3; r a + b = c + d

  friend bool operator==(const KariTile&, const KariTile&) = default;
};

struct BeattyParams {
  Rational r;
  Rational alpha;
  void validate() const;
};

// floor(k a) - floor((k-1) a)
int64_t beatty_B(const Rational& alpha, int64_t k);
// r floor(k a) - floor(r k a)
Rational beatty_A(const Rational& r, const Rational& alpha, int64_t k);

KariTile tile_at(const BeattyParams& p, int64_t k);

// Tiles of T_r collected over alpha = j / density in the admissible interval and k in one full period.
std::vector<KariTile> enumerate_T(const Rational& r, int sample_density = 20);

// The 14 tiles, T_2 first, as a Wang set with the 8-color table.
const WangSet& kari_set();
// Index of t inside kari_set(); throws if absent.
int kari_index(const KariTile& t);
WangTile to_wang(const KariTile& t);

Rational dyn_f(const Rational& alpha);
Rational dyn_g(const Rational& alpha);

// Multiplier used by the row R(alpha): f(alpha) / alpha.
Rational row_multiplier(const Rational& alpha);
// Alphas of rows 0..height-1 (south to north); row height/2 carries alpha0.
std::vector<Rational> row_alphas(const Rational& alpha0, int height);

// Column i uses k = i - width/2; row j uses row_alphas(alpha0, height)[j].
WangGrid build_patch(const Rational& alpha0, int width, int height);

struct RowAudit {
  int row;
  Rational r;
  Rational north_sum, south_sum;
  Rational west_edge, east_edge;  // colors on the row's outer vertical sides
  bool identity_holds;            // r N + west = S + east
  bool full_period;               // west == east, so r N = S on this window
};

struct AuditReport {
  std::vector<RowAudit> rows;
  Rational multiplier_product;  // product of r over all rows
};

AuditReport multiplier_audit(const WangGrid& g);

}  // namespace tessella
