#include "hecketl/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace hecketl {

namespace {

constexpr std::size_t kBruhatBitsetLimit = 16384;

std::string key_of(const Word& w) { return {w.begin(), w.end()}; }

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw GraphError("bad " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

CoxeterGraph named_graph(std::string_view spec) {
  const std::string name(spec);
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(spec.front())));
  std::vector<Bond> bonds;
  if (spec.size() >= 3 && family == 'I' && spec[1] == '2' && spec[2] == ':') {
    const int m = parse_int(spec.substr(3), "dihedral order");
    if (m < 2) throw GraphError("dihedral bond order must be >= 2: " + name);
    bonds.push_back({0, 1, m});
    return CoxeterGraph::from_bonds(2, bonds, name);
  }
  const int n = parse_int(spec.substr(1), "rank");
  if (n < 1 || n > kMaxRank) throw GraphError("rank out of range: " + name);
  auto chain = [&](int from) {
    for (int i = from; i + 1 < n; ++i) bonds.push_back({i, i + 1, 3});
  };
  switch (family) {
    case 'A':
      chain(0);
      break;
    case 'B':
    case 'C':
      if (n < 2) throw GraphError("type B needs rank >= 2: " + name);
      bonds.push_back({0, 1, 4});
      chain(1);
      break;
    case 'D':
      if (n < 4) throw GraphError("type D needs rank >= 4: " + name);
      for (int i = 0; i + 1 < n - 1; ++i) bonds.push_back({i, i + 1, 3});
      bonds.push_back({n - 3, n - 1, 3});
      break;
    case 'E':
      if (n < 6 || n > 8) throw GraphError("type E needs rank 6..8: " + name);
      bonds.push_back({0, 2, 3});
      bonds.push_back({1, 3, 3});
      for (int i = 2; i + 1 < n; ++i) bonds.push_back({i, i + 1, 3});
      break;
    case 'F':
      if (n != 4) throw GraphError("type F needs rank 4: " + name);
      bonds = {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}};
      break;
    case 'H':
      if (n != 3 && n != 4) throw GraphError("type H needs rank 3 or 4: " + name);
      bonds.push_back({0, 1, 5});
      chain(1);
      break;
    default:
      throw GraphError("unknown Coxeter type: " + name);
  }
  return CoxeterGraph::from_bonds(n, bonds, name);
}

}  // namespace

CoxeterGraph::CoxeterGraph(int rank, std::vector<int> m, std::string name)
    : rank_(rank), m_(std::move(m)), name_(std::move(name)) {}

CoxeterGraph CoxeterGraph::from_bonds(int rank, std::span<const Bond> bonds, std::string name) {
  if (rank < 1 || rank > kMaxRank) throw GraphError("rank must be in 1.." + std::to_string(kMaxRank));
  std::vector<int> m(static_cast<std::size_t>(rank) * rank, 2);
  std::vector<bool> seen(m.size(), false);
  for (int i = 0; i < rank; ++i) m[static_cast<std::size_t>(i) * rank + i] = 1;
  for (const auto& b : bonds) {
    if (b.i < 0 || b.j < 0 || b.i >= rank || b.j >= rank) throw GraphError("bond index out of range");
    if (b.i == b.j) {
      if (b.order != 1) throw GraphError("diagonal bond order must be 1");
      continue;
    }
    if (b.order <= 0) throw GraphError("infinite or non-positive bond orders are not supported");
    if (b.order < 2) throw GraphError("off-diagonal bond order must be >= 2");
    const auto ij = static_cast<std::size_t>(b.i) * rank + b.j;
    const auto ji = static_cast<std::size_t>(b.j) * rank + b.i;
    if (seen[ij] && m[ij] != b.order) throw GraphError("conflicting bond orders (asymmetric)");
    m[ij] = m[ji] = b.order;
    seen[ij] = seen[ji] = true;
  }
  return CoxeterGraph(rank, std::move(m), std::move(name));
}

CoxeterGraph CoxeterGraph::from_matrix(const std::vector<std::vector<int>>& matrix, std::string name) {
  const int rank = static_cast<int>(matrix.size());
  std::vector<Bond> bonds;
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(matrix[i].size()) != rank) throw GraphError("bond matrix is not square");
    if (matrix[i][i] != 1) throw GraphError("bond matrix diagonal must be 1");
    for (int j = 0; j < rank; ++j) {
      if (matrix[i][j] != matrix[j][i]) throw GraphError("bond matrix is not symmetric");
      if (i < j) bonds.push_back({i, j, matrix[i][j]});
    }
  }
  return from_bonds(rank, bonds, std::move(name));
}

int CoxeterGraph::max_bond() const { return *std::max_element(m_.begin(), m_.end()); }

nlohmann::ordered_json CoxeterGraph::to_json() const {
  auto bonds = nlohmann::ordered_json::array();
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j) {
      const int m = bond(static_cast<Generator>(i), static_cast<Generator>(j));
      if (m != 2) bonds.push_back(nlohmann::ordered_json::array({i, j, m}));
    }
  nlohmann::ordered_json out;
  out["rank"] = rank_;
  out["bonds"] = bonds;
  return out;
}

CoxeterGraph parse_graph(std::string_view spec) {
  while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.front()))) spec.remove_prefix(1);
  while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.back()))) spec.remove_suffix(1);
  if (spec.empty()) throw GraphError("empty graph spec");
  if (spec.front() != '{') return named_graph(spec);

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(spec);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rank") || !j["rank"].is_number_integer())
    throw GraphError("graph JSON needs an integer \"rank\"");
  const int rank = j["rank"].get<int>();
  std::vector<Bond> bonds;
  if (j.contains("bonds")) {
    if (!j["bonds"].is_array()) throw GraphError("\"bonds\" must be an array");
    for (const auto& b : j["bonds"]) {
      if (!b.is_array() || b.size() != 3) throw GraphError("each bond must be [i, j, m]");
      for (const auto& x : b)
        if (!x.is_number_integer()) throw GraphError("bond entries must be integers (infinite bonds unsupported)");
      bonds.push_back({b[0].get<int>(), b[1].get<int>(), b[2].get<int>()});
    }
  }
  return CoxeterGraph::from_bonds(rank, bonds, std::string(spec));
}

std::string format_word(std::span<const Generator> word) {
  if (word.empty()) return "e";
  std::string out;
  for (auto s : word) out += "s" + std::to_string(static_cast<int>(s) + 1);
  return out;
}

Word parse_word(std::string_view text, int rank) {
  Word out;
  if (text == "e" || text.empty()) return out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 's') throw std::invalid_argument("malformed word: " + std::string(text));
    std::size_t end = pos + 1;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos + 1) throw std::invalid_argument("malformed word: " + std::string(text));
    const int label = std::stoi(std::string(text.substr(pos + 1, end - pos - 1)));
    if (label < 1 || label > rank) throw std::invalid_argument("generator out of range in: " + std::string(text));
    out.push_back(static_cast<Generator>(label - 1));
    pos = end;
  }
  return out;
}

std::vector<Word> braid_class(const CoxeterGraph& graph, const Word& word) {
  std::vector<Word> out{word};
  std::unordered_set<std::string> seen{key_of(word)};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Word cur = out[head];
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const Generator a = cur[i];
      const Generator b = cur[i + 1];
      if (a == b) continue;
      const auto m = static_cast<std::size_t>(graph.bond(a, b));
      if (i + m > cur.size()) continue;
      bool alternating = true;
      for (std::size_t k = 2; k < m && alternating; ++k) alternating = cur[i + k] == (k % 2 ? b : a);
      if (!alternating) continue;
      Word next = cur;
      for (std::size_t k = 0; k < m; ++k) next[i + k] = k % 2 ? a : b;
      if (seen.insert(key_of(next)).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::optional<std::size_t> find_braid_substring(const CoxeterGraph& graph, std::span<const Generator> word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    const Generator a = word[i];
    const Generator b = word[i + 1];
    if (a == b) continue;
    const auto m = static_cast<std::size_t>(graph.bond(a, b));
    if (m < 3 || i + m > word.size()) continue;
    bool alternating = true;
    for (std::size_t k = 2; k < m && alternating; ++k) alternating = word[i + k] == (k % 2 ? b : a);
    if (alternating) return i;
  }
  return std::nullopt;
}

GroupTable GroupTable::enumerate(const CoxeterGraph& graph, std::size_t cap) {
  const auto rank = static_cast<std::size_t>(graph.rank());
  constexpr ElementId kUnset = ~ElementId{0};

  // Discovery-order data; renumbered by (length, word) at the end.
  struct Found {
    Word word;
    GeneratorSet rdesc = 0;
    std::optional<ComplexWitness> witness;
  };
  std::vector<Found> found{{Word{}, 0, std::nullopt}};
  std::vector<ElementId> right(rank, kUnset);
  std::vector<std::size_t> level_begin{0, 1};

  // Strips a, b, a, ... from the right of u while each letter is a right
  // descent, at most `limit` letters. Only touches finished levels.
  auto strip = [&](ElementId u, Generator a, Generator b, int limit) {
    int n = 0;
    for (Generator t = a; n < limit && contains(found[u].rdesc, t); t = t == a ? b : a, ++n) u = right[u * rank + t];
    return std::pair{n, u};
  };
  // y * (alternating word of length len ending in `last`), going up.
  auto climb = [&](ElementId y, Generator last, Generator other, int len) {
    for (int j = 0; j < len; ++j) y = right[y * rank + ((len - 1 - j) % 2 ? other : last)];
    return y;
  };

  for (std::size_t level = 0;; ++level) {
    // Key (x t0, t0) with t0 the least right descent of x identifies x.
    std::unordered_map<std::uint64_t, ElementId> next_index;
    for (std::size_t u = level_begin[level]; u < level_begin[level + 1]; ++u) {
      for (std::size_t si = 0; si < rank; ++si) {
        const auto s = static_cast<Generator>(si);
        if (contains(found[u].rdesc, s)) continue;
        // x = us. For t != s, t is a right descent of x exactly when u ends in
        // the alternating word ... s t of length m(s, t) - 1; then
        // x = y w_{st} with y the stripped prefix.
        GeneratorSet desc = singleton(s);
        std::vector<ElementId> below(rank, kUnset);  // x t for descents t
        below[s] = static_cast<ElementId>(u);
        for (std::size_t ti = 0; ti < rank; ++ti) {
          const auto t = static_cast<Generator>(ti);
          if (t == s) continue;
          const int m = graph.bond(s, t);
          auto [n, y] = strip(static_cast<ElementId>(u), t, s, m - 1);
          if (n != m - 1) continue;
          desc |= singleton(t);
          below[t] = climb(y, s, t, m - 1);
        }
        const auto t0 = static_cast<Generator>(std::countr_zero(desc));
        const std::uint64_t key = static_cast<std::uint64_t>(below[t0]) * rank + t0;
        Word cand = found[u].word;
        cand.push_back(s);
        ElementId id;
        if (auto it = next_index.find(key); it != next_index.end()) {
          id = it->second;
          if (cand < found[id].word) found[id].word = std::move(cand);
        } else {
          if (found.size() >= cap) throw CapExceeded("group has more than " + std::to_string(cap) + " elements");
          id = static_cast<ElementId>(found.size());
          Found f{std::move(cand), desc, std::nullopt};
          // x is complex iff some x t (t a right descent) is complex, or two
          // right descents a, b with m(a, b) >= 3 give x = y w_{ab}.
          for (std::size_t ti = 0; ti < rank && !f.witness; ++ti) {
            if (!contains(desc, static_cast<Generator>(ti)) || !found[below[ti]].witness) continue;
            f.witness = found[below[ti]].witness;
            f.witness->word.push_back(static_cast<Generator>(ti));
          }
          for (std::size_t ai = 0; ai < rank && !f.witness; ++ai)
            for (std::size_t bi = ai + 1; bi < rank && !f.witness; ++bi) {
              const auto a = static_cast<Generator>(ai);
              const auto b = static_cast<Generator>(bi);
              const int m = graph.bond(a, b);
              if (m < 3 || !contains(desc, a) || !contains(desc, b)) continue;
              const ElementId y = strip(below[a], b, a, m - 1).second;
              Word w = found[y].word;
              const std::size_t pos = w.size();
              for (int j = 0; j < m; ++j) w.push_back((m - 1 - j) % 2 ? b : a);
              const Generator first = w[pos], second = w[pos + 1];
              f.witness = ComplexWitness{std::move(w), pos, first, second, m};
            }
          found.push_back(std::move(f));
          right.resize(found.size() * rank, kUnset);
          next_index.emplace(key, id);
        }
        right[u * rank + s] = id;
        right[static_cast<std::size_t>(id) * rank + s] = static_cast<ElementId>(u);
      }
    }
    if (found.size() == level_begin[level + 1]) break;
    level_begin.push_back(found.size());
  }

  // Renumber by (length, ShortLex).
  const std::size_t n = found.size();
  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    const auto& wa = found[a].word;
    const auto& wb = found[b].word;
    return wa.size() != wb.size() ? wa.size() < wb.size() : wa < wb;
  });
  std::vector<ElementId> rank_of(n);
  for (std::size_t i = 0; i < n; ++i) rank_of[order[i]] = static_cast<ElementId>(i);

  GroupTable t(graph);
  t.words_.resize(n);
  t.lengths_.resize(n);
  t.witness_.resize(n);
  t.content_.resize(n);
  t.right_.resize(n * rank);
  for (std::size_t i = 0; i < n; ++i) {
    auto& f = found[order[i]];
    t.words_[i] = std::move(f.word);
    t.lengths_[i] = static_cast<int>(t.words_[i].size());
    t.witness_[i] = std::move(f.witness);
    for (auto s : t.words_[i]) t.content_[i] |= singleton(s);
    for (std::size_t s = 0; s < rank; ++s) t.right_[i * rank + s] = rank_of[right[order[i] * rank + s]];
  }
  t.left_.resize(n * rank);
  t.inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& w = t.words_[i];
    for (std::size_t s = 0; s < rank; ++s) {
      ElementId x = t.right_[s];  // identity is id 0
      for (auto g : w) x = t.right_mul(x, g);
      t.left_[i * rank + s] = x;
    }
    Word rev(w.rbegin(), w.rend());
    t.inverse_[i] = t.element_of(rev);
    if (t.is_fully_commutative(static_cast<ElementId>(i))) t.fc_.push_back(static_cast<ElementId>(i));
  }
  t.build_bruhat();
  return t;
}

void GroupTable::build_bruhat() {
  const std::size_t n = size();
  std::vector<bool> is_reflection(n, false);
  for (std::size_t u = 0; u < n; ++u)
    for (int s = 0; s < rank(); ++s) {
      const ElementId us = right_mul(static_cast<ElementId>(u), static_cast<Generator>(s));
      is_reflection[multiply(us, inverse(static_cast<ElementId>(u)))] = true;
    }
  for (std::size_t t = 0; t < n; ++t)
    if (is_reflection[t]) reflections_.push_back(static_cast<ElementId>(t));

  covers_.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    for (auto t : reflections_) {
      const ElementId x = multiply(static_cast<ElementId>(w), t);
      if (length(x) + 1 == length(static_cast<ElementId>(w))) covers_[w].push_back(x);
    }
    std::sort(covers_[w].begin(), covers_[w].end());
  }

  if (n > kBruhatBitsetLimit) return;
  const std::size_t blocks = (n + 63) / 64;
  below_.assign(n, std::vector<std::uint64_t>(blocks, 0));
  for (std::size_t w = 0; w < n; ++w) {
    auto& row = below_[w];
    row[w / 64] |= std::uint64_t{1} << (w % 64);
    for (auto x : covers_[w])
      for (std::size_t b = 0; b < blocks; ++b) row[b] |= below_[x][b];
  }
}

ElementId GroupTable::multiply(ElementId a, ElementId b) const {
  for (auto s : words_[b]) a = right_mul(a, s);
  return a;
}

ElementId GroupTable::element_of(std::span<const Generator> word) const {
  ElementId x = identity();
  for (auto s : word) {
    if (s >= rank()) throw std::invalid_argument("generator out of range");
    x = right_mul(x, s);
  }
  return x;
}

std::optional<ElementId> GroupTable::reduced_element_of(std::span<const Generator> word) const {
  const ElementId x = element_of(word);
  if (static_cast<std::size_t>(length(x)) != word.size()) return std::nullopt;
  return x;
}

ElementId GroupTable::parse_element(std::string_view text) const {
  const Word w = parse_word(text, rank());
  auto x = reduced_element_of(w);
  if (!x) throw std::invalid_argument("not a reduced word: " + std::string(text));
  return *x;
}

GeneratorSet GroupTable::right_descents(ElementId w) const {
  GeneratorSet d = 0;
  for (int s = 0; s < rank(); ++s)
    if (is_right_descent(w, static_cast<Generator>(s))) d |= singleton(static_cast<Generator>(s));
  return d;
}

GeneratorSet GroupTable::left_descents(ElementId w) const {
  GeneratorSet d = 0;
  for (int s = 0; s < rank(); ++s)
    if (is_left_descent(w, static_cast<Generator>(s))) d |= singleton(static_cast<Generator>(s));
  return d;
}

bool GroupTable::bruhat_leq(ElementId x, ElementId w) const {
  if (!below_.empty()) return (below_[w][x / 64] >> (x % 64)) & 1U;
  // Lifting property: for s in D_R(w), x <= w iff min(x, xs) <= ws.
  while (true) {
    if (length(x) > length(w)) return false;
    if (x == w) return true;
    if (length(x) == length(w)) return false;
    const Generator s = words_[w].back();
    if (is_right_descent(x, s)) x = right_mul(x, s);
    w = right_mul(w, s);
  }
}

}  // namespace hecketl
