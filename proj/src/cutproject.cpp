#include "tessella/cutproject.hpp"

#include <algorithm>
#include <stdexcept>

#include "tessella/exactmath.hpp"

namespace tessella {

Slope::Slope(const AlgebraicNum& m) : m_(m) {
  if (!m.is_real()) throw std::domain_error("slope must be real");
  if (real_sign(m) <= 0 || real_sign(AlgebraicNum(1) - m) < 0)
    throw std::domain_error("slope must satisfy 0 < m <= 1");
}

Slope Slope::parse(const std::string& expr) { return Slope(QSqrt5::parse(expr).to_field()); }

AlgebraicNum project_coord(int64_t x, int64_t y, const Slope& m) {
  return AlgebraicNum(x) + AlgebraicNum(y) * m.value();
}

StairWord staircase_word(const Slope& m, int64_t k0, int64_t k1) {
  if (k0 > k1) throw std::domain_error("window must satisfy k0 <= k1");
  StairWord w;
  w.k_start = k0;
  w.letters.reserve(static_cast<size_t>(2 * (k1 - k0)));
  int64_t prev = real_floor(AlgebraicNum(k0) * m.value());
  for (int64_t k = k0 + 1; k <= k1; ++k) {
    int64_t cur = real_floor(AlgebraicNum(k) * m.value());
    w.letters += 'L';
    // m <= 1, so the floor grows by at most one per step
    if (cur > prev) w.letters += 'S';
    prev = cur;
  }
  return w;
}

std::optional<int64_t> detect_period(const StairWord& w, int64_t max_period) {
  const std::string& s = w.letters;
  int64_t n = static_cast<int64_t>(s.size());
  if (max_period < 0) max_period = n / 3;
  max_period = std::min(max_period, n);
  for (int64_t p = 1; p <= max_period; ++p) {
    bool ok = true;
    for (int64_t i = 0; i + p < n && ok; ++i) ok = s[i] == s[i + p];
    if (ok) return p;
  }
  return std::nullopt;
}

Rational frequency_ratio(const StairWord& w) {
  int64_t l = std::count(w.letters.begin(), w.letters.end(), 'L');
  int64_t s = std::count(w.letters.begin(), w.letters.end(), 'S');
  if (s == 0) throw std::domain_error("word contains no S letter");
  return Rational(l, s);
}

}  // namespace tessella
