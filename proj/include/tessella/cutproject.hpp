#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tessella/cyclotomic.hpp"

namespace tessella {

// Slope of the cutting line, a real field element with 0 < m <= 1.
class Slope {
 public:
  explicit Slope(const AlgebraicNum& m);
  // "p/q", "1/phi", or any a+b*sqrt5 form accepted by QSqrt5::parse.
  static Slope parse(const std::string& expr);
  const AlgebraicNum& value() const { return m_; }

 private:
  AlgebraicNum m_;
};

struct StairWord {
  std::string letters;  // over {L, S}
  int64_t k_start = 0;
};

// x + m y: the orthogonal projection onto the line without the common factor 1/sqrt(1+m^2).
AlgebraicNum project_coord(int64_t x, int64_t y, const Slope& m);

// For k in (k0, k1]: one L for the horizontal step, followed by S when floor(k m) > floor((k-1) m).
StairWord staircase_word(const Slope& m, int64_t k0, int64_t k1);

// Smallest p <= max_period with w[i] = w[i+p] wherever both exist.
// max_period < 0 selects the default bound floor(|w| / 3).
std::optional<int64_t> detect_period(const StairWord& w, int64_t max_period = -1);

Rational frequency_ratio(const StairWord& w);

}  // namespace tessella
