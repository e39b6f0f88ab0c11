#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tessella/exactmath.hpp"
#include "tessella/geometry.hpp"

namespace tessella {

// Grid shifts; entries may lie in Q(sqrt5), the sum must vanish.
struct GammaParams {
  std::array<QSqrt5, 5> gamma;

  void validate() const;
  bool is_rational() const;
  static GammaParams parse(const std::string& csv);  // "a0,a1,a2,a3,a4"
  std::string str() const;
  nlohmann::json to_json() const;
};

// Family j, index k: the line <z, zeta^j> + gamma_j = k.
struct GridLine {
  int j;
  int64_t k;
  friend auto operator<=>(const GridLine&, const GridLine&) = default;
};

using Z5 = std::array<int64_t, 5>;

// A point z of the plane in the coordinates u0 = <z, 1>, u1 = <z, zeta>.
struct GridPoint {
  QSqrt5 u0, u1;

  QSqrt5 u(int l) const;  // <z, zeta^l>
  QSqrt5 norm2() const;   // |z|^2
  Point20 to_point() const;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

AlgebraicNum omega(const GammaParams& g);
bool omega_equal(const GammaParams& a, const GammaParams& b);

struct Equivalence {
  std::optional<int> k;       // omega_a - zeta^(2k) omega_b lies in the ideal (1 - zeta)
  bool in_scope = false;      // some difference was integral, so the ideal test ran
};
Equivalence equivalent(const GammaParams& a, const GammaParams& b);

// The unique rational gamma with the given omega (omega must lie in Q(zeta_5)).
GammaParams gamma_realizing(const AlgebraicNum& w);

std::vector<GridLine> lines_in_disk(const GammaParams& g, const Rational& radius);
GridPoint intersect_u(const GridLine& a, const GridLine& b, const GammaParams& g);
Point20 intersect(const GridLine& a, const GridLine& b, const GammaParams& g);

struct TriplePoint {
  GridPoint at;
  std::vector<GridLine> lines;
};
// Points within the disk where three or more grid lines meet.
std::vector<TriplePoint> regularity_check(const GammaParams& g, const Rational& radius);

// The open cell { z : n_l - 1 < <z, zeta^l> + gamma_l < n_l } is nonempty. It is the image of
// { z : n_l - 1 - gamma_l < (2/sqrt5) Re(z zeta^l) < n_l - gamma_l } under z -> (2/sqrt5) conj(z).
bool hypercube_meets_plane(const Z5& n, const GammaParams& g);
std::optional<GridPoint> hypercube_witness(const Z5& n, const GammaParams& g);
// Vertices of the closed cell, empty when the closed cell is empty.
std::vector<GridPoint> cell_corners(const Z5& n, const GammaParams& g);

// Labels n whose open cell is nonempty and has a corner in the closed disk, enumerated over Z^5.
std::vector<Z5> hypercube_vertices_in_disk(const GammaParams& g, const Rational& radius);

Point20 embed(const Z5& n);  // sum n_j zeta^j

struct Rhomb {
  GridLine a, b;                // a.j < b.j
  GridPoint at;                 // the intersection
  std::array<Z5, 4> labels;     // cyclic: (k,k'), (k+1,k'), (k+1,k'+1), (k,k'+1) in families a.j, b.j
  bool thick;
};

struct RhombTiling {
  GammaParams gamma;
  Rational radius;
  std::vector<Rhomb> rhombs;  // sorted by (a, b)
  // v(n) = sum n_j zeta^j has unit edges; the orthonormal 5D projection has edges sqrt(2).
  std::string projected_edge_length = "sqrt(2)";

  std::vector<Z5> vertices() const;  // sorted, distinct
  nlohmann::json to_json() const;
};

// One rhomb per intersection inside the closed disk; throws on a triple point there.
RhombTiling generate_tiling(const GammaParams& g, const Rational& radius);

struct EdgeReport {
  size_t vertices = 0, edges = 0, faces = 0;
  std::vector<std::string> violations;  // edges on more than two rhombs or two rhombs on one side
  int64_t euler() const { return int64_t(vertices) - int64_t(edges) + int64_t(faces); }
};
EdgeReport edge_check(const RhombTiling& t);

}  // namespace tessella
