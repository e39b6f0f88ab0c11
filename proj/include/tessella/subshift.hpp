#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tessella/wang.hpp"

namespace tessella {

using Word = std::vector<int>;  // symbol indices

// Eventually periodic one-sided sequence preperiod period period ...
// Canonical: period primitive and preperiod as short as possible.
struct EPSeq {
  Word preperiod;
  Word period;

  static EPSeq make(Word preperiod, Word period);  // canonicalizes; throws on empty period
  int at(int64_t n) const;
  Word prefix(size_t n) const;
  std::string str() const;  // "10(0)" style, symbols as digits
  friend bool operator==(const EPSeq&, const EPSeq&) = default;
};

EPSeq shift(const EPSeq& x);
// True iff x_n = y_n for all large n.
bool same_tail(const EPSeq& x, const EPSeq& y);

// 2^-exponent, or zero.
struct Dyadic {
  bool zero = false;
  int exponent = 0;
  std::string str() const;  // "0", "1", "1/8"
  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend bool operator<(const Dyadic& a, const Dyadic& b) {
    if (a.zero || b.zero) return a.zero && !b.zero;
    return a.exponent > b.exponent;
  }
};

Dyadic distance(const Word& a, const Word& b);

struct SFTSpec {
  std::vector<std::string> alphabet;
  std::vector<Word> forbidden;  // sorted, deduplicated

  void validate() const;
  size_t max_forbidden_length() const;
  bool allowed(const Word& w) const;  // no forbidden factor

  nlohmann::json to_json() const;
  static SFTSpec from_json(const nlohmann::json& j);
};

SFTSpec make_sft(std::vector<std::string> alphabet, std::vector<Word> forbidden);

bool is_empty(const SFTSpec& s);
std::optional<EPSeq> find_periodic(const SFTSpec& s);

// Alphabet = the dominoes in order, forbidden = every mismatched adjacent pair.
SFTSpec from_dominoes(const DominoSet& d);

}  // namespace tessella
