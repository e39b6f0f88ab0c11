#include "tessella/subshift.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace tessella {

namespace {

size_t primitive_length(const Word& p) {
  size_t n = p.size();
  for (size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (size_t i = d; i < n && ok; ++i) ok = p[i] == p[i - d];
    if (ok) return d;
  }
  return n;
}

Word rotate_left(const Word& p, size_t k) {
  Word out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = p[(i + k) % p.size()];
  return out;
}

bool contains(const Word& w, const Word& f) {
  if (f.size() > w.size()) return false;
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

}  // namespace

EPSeq EPSeq::make(Word pre, Word per) {
  if (per.empty()) throw std::domain_error("period must be nonempty");
  per.resize(primitive_length(per));
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
  }
  return {std::move(pre), std::move(per)};
}

int EPSeq::at(int64_t n) const {
  if (n < 0) throw std::domain_error("negative index");
  if (size_t(n) < preperiod.size()) return preperiod[size_t(n)];
  return period[size_t(n - int64_t(preperiod.size())) % period.size()];
}

Word EPSeq::prefix(size_t n) const {
  Word w(n);
  for (size_t i = 0; i < n; ++i) w[i] = at(int64_t(i));
  return w;
}

std::string EPSeq::str() const {
  std::string s;
  for (int c : preperiod) s += std::to_string(c);
  s += "(";
  for (int c : period) s += std::to_string(c);
  return s + ")";
}

EPSeq shift(const EPSeq& x) {
  if (!x.preperiod.empty()) return EPSeq::make(Word(x.preperiod.begin() + 1, x.preperiod.end()), x.period);
  return EPSeq::make({}, rotate_left(x.period, 1));
}

bool same_tail(const EPSeq& x, const EPSeq& y) {
  EPSeq a = EPSeq::make(x.preperiod, x.period), b = EPSeq::make(y.preperiod, y.period);
  if (a.period.size() != b.period.size()) return false;
  size_t p = a.period.size();
  // align both at index N = max preperiod length
  size_t n = std::max(a.preperiod.size(), b.preperiod.size());
  for (size_t i = 0; i < p; ++i)
    if (a.at(int64_t(n + i)) != b.at(int64_t(n + i))) return false;
  return true;
}

std::string Dyadic::str() const {
  if (zero) return "0";
  if (exponent == 0) return "1";
  return "1/" + std::to_string(int64_t(1) << exponent);
}

Dyadic distance(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw std::domain_error("distance needs words of equal length");
  if (a.size() > 62) throw std::domain_error("words longer than 62 symbols are not supported");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return {false, int(i)};
  return {true, 0};
}

void SFTSpec::validate() const {
  if (alphabet.empty()) throw std::domain_error("empty alphabet");
  for (const auto& w : forbidden) {
    if (w.empty()) throw std::domain_error("forbidden words must be nonempty");
    for (int c : w)
      if (c < 0 || c >= int(alphabet.size())) throw std::domain_error("forbidden word uses an unknown symbol");
  }
}

size_t SFTSpec::max_forbidden_length() const {
  size_t k = 0;
  for (const auto& w : forbidden) k = std::max(k, w.size());
  return k;
}

bool SFTSpec::allowed(const Word& w) const {
  for (const auto& f : forbidden)
    if (contains(w, f)) return false;
  return true;
}

SFTSpec make_sft(std::vector<std::string> alphabet, std::vector<Word> forbidden) {
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  SFTSpec s{std::move(alphabet), std::move(forbidden)};
  s.validate();
  return s;
}

nlohmann::json SFTSpec::to_json() const {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& w : forbidden) {
    nlohmann::json word = nlohmann::json::array();
    for (int c : w) word.push_back(alphabet[size_t(c)]);
    f.push_back(word);
  }
  return {{"alphabet", alphabet}, {"forbidden", f}};
}

SFTSpec SFTSpec::from_json(const nlohmann::json& j) {
  if (!j.contains("alphabet") || !j["alphabet"].is_array()) throw std::domain_error("spec needs an alphabet array");
  std::vector<std::string> alpha;
  for (const auto& a : j["alphabet"]) alpha.push_back(a.is_string() ? a.get<std::string>() : a.dump());
  std::map<std::string, int> id;
  for (size_t i = 0; i < alpha.size(); ++i)
    if (!id.emplace(alpha[i], int(i)).second) throw std::domain_error("duplicate symbol " + alpha[i]);
  std::vector<Word> forb;
  for (const auto& w : j.value("forbidden", nlohmann::json::array())) {
    Word word;
    if (w.is_string()) {
      // a plain string spells single-character symbols
      for (char ch : w.get<std::string>()) {
        auto it = id.find(std::string(1, ch));
        if (it == id.end()) throw std::domain_error("unknown symbol " + std::string(1, ch));
        word.push_back(it->second);
      }
    } else {
      for (const auto& c : w) {
        auto it = id.find(c.is_string() ? c.get<std::string>() : c.dump());
        if (it == id.end()) throw std::domain_error("unknown symbol " + c.dump());
        word.push_back(it->second);
      }
    }
    forb.push_back(word);
  }
  return make_sft(std::move(alpha), std::move(forb));
}

namespace {

// Allowed words of length L-1 and the edges u -> v spelling allowed L-blocks.
struct BlockGraph {
  std::vector<Word> nodes;
  std::vector<std::vector<int>> succ;
};

BlockGraph block_graph(const SFTSpec& s) {
  s.validate();
  size_t len = std::max<size_t>(s.max_forbidden_length(), 2) - 1;
  size_t a = s.alphabet.size();
  BlockGraph g;
  std::map<Word, int> index;
  Word w(len, 0);
  while (true) {
    if (s.allowed(w)) {
      index[w] = int(g.nodes.size());
      g.nodes.push_back(w);
    }
    size_t i = len;
    while (i > 0 && size_t(++w[i - 1]) == a) w[--i] = 0;
    if (i == 0) break;
  }
  g.succ.resize(g.nodes.size());
  for (size_t u = 0; u < g.nodes.size(); ++u) {
    for (size_t c = 0; c < a; ++c) {
      Word block = g.nodes[u];
      block.push_back(int(c));
      if (!s.allowed(block)) continue;
      Word v(block.begin() + 1, block.end());
      auto it = index.find(v);
      if (it != index.end()) g.succ[u].push_back(it->second);
    }
  }
  return g;
}

std::optional<std::vector<int>> graph_cycle(const BlockGraph& g) {
  std::vector<int> state(g.nodes.size(), 0), stack;
  std::optional<std::vector<int>> found;
  std::function<bool(int)> dfs = [&](int u) {
    state[size_t(u)] = 1;
    stack.push_back(u);
    for (int v : g.succ[size_t(u)]) {
      if (state[size_t(v)] == 1) {
        auto it = std::find(stack.begin(), stack.end(), v);
        found = std::vector<int>(it, stack.end());
        return true;
      }
      if (state[size_t(v)] == 0 && dfs(v)) return true;
    }
    stack.pop_back();
    state[size_t(u)] = 2;
    return false;
  };
  for (size_t u = 0; u < g.nodes.size(); ++u)
    if (state[u] == 0 && dfs(int(u))) break;
  return found;
}

}  // namespace

bool is_empty(const SFTSpec& s) { return !graph_cycle(block_graph(s)).has_value(); }

std::optional<EPSeq> find_periodic(const SFTSpec& s) {
  BlockGraph g = block_graph(s);
  auto cyc = graph_cycle(g);
  if (!cyc) return std::nullopt;
  Word period;
  for (int v : *cyc) period.push_back(g.nodes[size_t(v)][0]);
  return EPSeq::make({}, period);
}

SFTSpec from_dominoes(const DominoSet& d) {
  std::vector<std::string> alpha;
  for (const auto& [l, r] : d.edges) alpha.push_back("(" + std::to_string(l) + "," + std::to_string(r) + ")");
  std::vector<Word> forb;
  for (size_t t = 0; t < d.edges.size(); ++t)
    for (size_t u = 0; u < d.edges.size(); ++u)
      if (d.edges[t].second != d.edges[u].first) forb.push_back({int(t), int(u)});
  return make_sft(std::move(alpha), std::move(forb));
}

}  // namespace tessella
