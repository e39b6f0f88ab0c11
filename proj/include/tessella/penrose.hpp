#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tessella/geometry.hpp"
#include "tessella/subshift.hpp"

namespace tessella {

enum class TriKind { HalfKite, HalfDart };
// Plain: double arrows run clockwise, i.e. (apex, b1, b2) is counter-clockwise.
enum class Chirality { Plain, Reflected };
// KiteDart: half-kites and half-darts. SemiRhomb: acute (HalfKite at scale e)
// and obtuse (HalfDart at scale e+1) halves of the rhombs.
enum class Regime { KiteDart, SemiRhomb };
enum class BoundaryPolicy { Strict, Trim };

// Vertices are (apex, b1, b2); b1 ends the single-arrow leg.
// HalfKite at scale e: legs phi^(e+1), base phi^e. HalfDart: legs phi^e, base phi^(e+1).
struct RTriangle {
  TriKind kind = TriKind::HalfKite;
  Chirality chirality = Chirality::Plain;
  int scale_exp = 0;
  std::array<Point20, 3> v;

  // Chirality follows from the vertex order.
  static RTriangle make(TriKind kind, int scale_exp, const Point20& apex, const Point20& b1, const Point20& b2);
  void validate() const;  // golden shape at its scale, chirality consistent
  AlgebraicNum twice_area() const;  // positive

  nlohmann::json to_json() const;
  static RTriangle from_json(const nlohmann::json& j);
  friend bool operator==(const RTriangle&, const RTriangle&) = default;
};

AlgebraicNum phi_pow(int e);

struct Arrow {
  Point20 from, to;
  int heads;  // 1 single, 2 double
};
std::array<Arrow, 3> arrows(const RTriangle& t);

struct Patch {
  std::vector<RTriangle> triangles;
  Regime regime = Regime::KiteDart;

  nlohmann::json to_json() const;
  static Patch from_json(const nlohmann::json& j);
};

struct MatchViolation {
  size_t t1, t2;
  std::string reason;
};

// Shared edges must carry equal arrows pointing the same way; an edge may be shared by two triangles at most.
std::vector<MatchViolation> validate_matching(const Patch& p);
// Pairs of triangles whose interiors meet.
std::vector<std::pair<size_t, size_t>> overlapping_pairs(const Patch& p);

// Counts of (HalfKite, HalfDart).
std::pair<size_t, size_t> population(const Patch& p);
AlgebraicNum total_twice_area(const Patch& p);

// Coordinates times phi^k, scale exponents + k.
Patch scale_phi(const Patch& p, int k);

// Substitution without rescaling: children have scale_exp one less than their parent.
Patch decompose(const Patch& p);

struct CompositionStep {
  Patch patch;
  std::vector<int> parent;  // input triangle -> output triangle, -1 if trimmed
};
// KiteDart -> SemiRhomb: each half-dart joins the half-kite across its double leg.
CompositionStep compose_pass1(const Patch& p, BoundaryPolicy policy);
// SemiRhomb -> KiteDart: each acute half joins the obtuse half across its single leg.
CompositionStep compose_pass2(const Patch& p, BoundaryPolicy policy);
Patch compose(const Patch& p, BoundaryPolicy policy);

Patch cartwheel(int n);

// Every triangle of `small` appears in `big` with identical kind and vertices.
bool contains_tiles(const Patch& big, const Patch& small);
bool same_tiles(const Patch& a, const Patch& b);

struct Polygon {
  std::string kind;  // kite, dart, thick, thin
  std::vector<Point20> v;  // counter-clockwise
};

// Join half-kites and half-darts across single-arrow legs. Trim drops unpaired triangles.
std::vector<Polygon> merge_to_kites_darts(const Patch& p, BoundaryPolicy policy = BoundaryPolicy::Strict);
// Join semi-rhombs across their bases.
std::vector<Polygon> merge_to_rhombs(const Patch& p, BoundaryPolicy policy = BoundaryPolicy::Strict);
bool is_convex(const std::vector<Point20>& poly);

// Interior point with barycentric weights (w0, w1, 1 - w0 - w1), all positive.
Point20 interior_point(const RTriangle& t, const Rational& w0, const Rational& w1);
// Triangle containing x in its interior.
std::optional<size_t> locate(const Patch& p, const Point20& x);

// 0 for the prototile of larger area at the patch's level, 1 for the smaller.
int index_bit(const RTriangle& t, Regime regime);

struct MarkedPatch {
  Patch patch;
  Point20 basepoint;
};

using IndexSeq = std::vector<int>;

// The composition tower of a patch, built once and queried per basepoint.
class IndexTower {
 public:
  IndexTower(const Patch& p, int steps, BoundaryPolicy policy = BoundaryPolicy::Trim);
  int steps() const { return int(levels_.size()) - 1; }
  const Patch& level(int n) const { return levels_[size_t(n)]; }
  // Bits a_0 .. a_steps for the basepoint in triangle `start` of level 0.
  IndexSeq bits_from(size_t start) const;
  IndexSeq bits(const Point20& basepoint) const;

 private:
  std::vector<Patch> levels_;
  std::vector<std::vector<int>> parent_;
};

// Bits a_0 .. a_steps, one per half step of composition.
IndexSeq index_sequence(const MarkedPatch& mp, int steps, BoundaryPolicy policy = BoundaryPolicy::Trim);
bool has_factor_11(const IndexSeq& s);
EPSeq to_epseq(const IndexSeq& prefix, const IndexSeq& period);

struct TranslationReport {
  size_t window_tiles = 0;
  size_t candidates = 0;
  std::vector<Point20> periods;  // nonzero translations mapping the window into the patch
};

// Window: triangles with every vertex within squared radius r2 of the origin.
// Candidates: differences of window vertices.
TranslationReport translation_symmetries(const Patch& p, const Rational& r2);

}  // namespace tessella
