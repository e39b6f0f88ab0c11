#include "tessella/rational.hpp"

#include <charconv>

namespace tessella {

namespace {

int64_t parse_int(std::string_view s, std::string_view whole) {
  int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range) throw OverflowError("integer out of range: " + std::string(whole));
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw std::invalid_argument("not a rational: \"" + std::string(whole) + "\"");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  int64_t n = parse_int(trim(s.substr(0, slash)), text);
  int64_t d = parse_int(trim(s.substr(slash + 1)), text);
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  return Rational(n, d);
}

int64_t Rational::floor() const {
  int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

int64_t Rational::ceil() const {
  int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace tessella
