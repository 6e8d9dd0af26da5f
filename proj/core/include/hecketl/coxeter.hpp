#pragma once

// Coxeter graphs, finite group enumeration, and Bruhat order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hecketl/errors.hpp"

namespace hecketl {

using Generator = std::uint8_t;
using ElementId = std::uint32_t;
using Word = std::vector<Generator>;
/// Bit i set iff generator i is in the set.
using GeneratorSet = std::uint64_t;

inline constexpr int kMaxRank = 64;
inline constexpr std::size_t kDefaultEnumerationCap = 100000;

struct Bond {
  int i = 0;
  int j = 0;
  int order = 2;
};

/// Node set plus bond orders m(s, s'). Only finite bond orders are
/// representable; m(s, s) = 1 and m(s, s') >= 2 otherwise.
class CoxeterGraph {
 public:
  /// Pairs not listed default to m = 2.
  static CoxeterGraph from_bonds(int rank, std::span<const Bond> bonds, std::string name = "custom");
  static CoxeterGraph from_matrix(const std::vector<std::vector<int>>& matrix, std::string name = "custom");

  int rank() const { return rank_; }
  int bond(Generator a, Generator b) const { return m_[static_cast<std::size_t>(a) * rank_ + b]; }
  bool commute(Generator a, Generator b) const { return bond(a, b) <= 2; }
  /// Named type ("A4", "I2:7") or "custom".
  const std::string& name() const { return name_; }
  /// Largest off-diagonal bond order (1 for rank 1).
  int max_bond() const;

  /// {"rank": n, "bonds": [[i, j, m], ...]} listing every pair with m != 2.
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) { return a.rank_ == b.rank_ && a.m_ == b.m_; }

 private:
  CoxeterGraph(int rank, std::vector<int> m, std::string name);

  int rank_ = 0;
  std::vector<int> m_;
  std::string name_;
};

/// Named type ("A4", "B3", "C3", "D5", "E6", "F4", "H3", "I2:7") or a JSON
/// object {"rank": n, "bonds": [[i, j, m], ...]} with 0-based indices.
/// Type B uses sigma_1 sigma_2 of order 4 and a chain of order-3 bonds after.
CoxeterGraph parse_graph(std::string_view spec);

/// "e" for the empty word, otherwise "s1s2s1" with 1-based generator labels.
std::string format_word(std::span<const Generator> word);
Word parse_word(std::string_view text, int rank);

/// Every word reachable from `word` by braid moves (including itself), in
/// breadth-first discovery order. For a reduced word this is the set of all
/// reduced expressions of the element.
std::vector<Word> braid_class(const CoxeterGraph& graph, const Word& word);

/// Position of the first contiguous alternating substring s s' s ... of length
/// m(s, s') >= 3 (a longest element of a non-commuting rank-2 parabolic).
std::optional<std::size_t> find_braid_substring(const CoxeterGraph& graph, std::span<const Generator> word);

/// Reduced word w = x1 * w_{ss'} * x2 exhibiting an element as complex.
struct ComplexWitness {
  Word word;
  std::size_t position = 0;  // start of the w_{ss'} block
  Generator first = 0;       // s: first letter of the block
  Generator second = 0;      // s'
  int order = 0;             // m(s, s') = block length
};

/// Full enumeration of a finite Coxeter group. Elements are numbered by
/// (length, ShortLex canonical word), so ids form a linear extension of the
/// Bruhat order and the identity is id 0. Immutable after construction.
class GroupTable {
 public:
  /// Breadth-first closure by length. Right descents of ws are read off w
  /// inside each rank-2 parabolic, which identifies ws among the elements of
  /// the next level without any matrix representation. Throws CapExceeded when the
  /// group has more than `cap` elements.
  static GroupTable enumerate(const CoxeterGraph& graph, std::size_t cap = kDefaultEnumerationCap);

  const CoxeterGraph& graph() const { return graph_; }
  int rank() const { return graph_.rank(); }
  std::size_t size() const { return words_.size(); }
  ElementId identity() const { return 0; }
  ElementId longest() const { return static_cast<ElementId>(size() - 1); }
  int max_length() const { return lengths_.back(); }

  /// ShortLex-least reduced expression.
  const Word& word(ElementId w) const { return words_[w]; }
  std::string word_string(ElementId w) const { return format_word(words_[w]); }
  int length(ElementId w) const { return lengths_[w]; }

  ElementId right_mul(ElementId w, Generator s) const { return right_[static_cast<std::size_t>(w) * rank() + s]; }
  ElementId left_mul(ElementId w, Generator s) const { return left_[static_cast<std::size_t>(w) * rank() + s]; }
  ElementId inverse(ElementId w) const { return inverse_[w]; }
  ElementId multiply(ElementId a, ElementId b) const;
  /// Element represented by an arbitrary (not necessarily reduced) word.
  ElementId element_of(std::span<const Generator> word) const;
  /// Element of a word, or nullopt if the word is not reduced.
  std::optional<ElementId> reduced_element_of(std::span<const Generator> word) const;
  /// Element with the given canonical-word rendering ("e", "s1s2").
  ElementId parse_element(std::string_view text) const;

  bool is_right_descent(ElementId w, Generator s) const { return length(right_mul(w, s)) < length(w); }
  bool is_left_descent(ElementId w, Generator s) const { return length(left_mul(w, s)) < length(w); }
  GeneratorSet right_descents(ElementId w) const;
  GeneratorSet left_descents(ElementId w) const;

  /// Generators occurring in any (hence every) reduced expression.
  GeneratorSet content(ElementId w) const { return content_[w]; }
  bool is_fully_commutative(ElementId w) const { return !witness_[w].has_value(); }
  /// For complex elements, a reduced word containing some w_{ss'}.
  const std::optional<ComplexWitness>& complex_witness(ElementId w) const { return witness_[w]; }
  /// Fully commutative elements in id order.
  const std::vector<ElementId>& fully_commutative() const { return fc_; }

  /// Every reduced expression of w (braid-move closure of the canonical word).
  std::vector<Word> reduced_words(ElementId w) const { return braid_class(graph_, words_[w]); }

  bool bruhat_leq(ElementId x, ElementId w) const;
  /// Elements x with x < w and l(x) = l(w) - 1, i.e. x = wt for a reflection t.
  const std::vector<ElementId>& bruhat_covers(ElementId w) const { return covers_[w]; }
  /// Reflections u s u^-1, sorted by id.
  const std::vector<ElementId>& reflections() const { return reflections_; }

 private:
  explicit GroupTable(CoxeterGraph graph) : graph_(std::move(graph)) {}
  void build_bruhat();

  CoxeterGraph graph_;
  std::vector<Word> words_;
  std::vector<int> lengths_;
  std::vector<ElementId> right_;
  std::vector<ElementId> left_;
  std::vector<ElementId> inverse_;
  std::vector<GeneratorSet> content_;
  std::vector<std::optional<ComplexWitness>> witness_;
  std::vector<ElementId> fc_;
  std::vector<ElementId> reflections_;
  std::vector<std::vector<ElementId>> covers_;
  // Row w holds the Bruhat lower ideal of w as a bitset; empty for large groups,
  // where bruhat_leq falls back to the descent recursion.
  std::vector<std::vector<std::uint64_t>> below_;
};

inline bool contains(GeneratorSet set, Generator s) { return (set >> s) & 1U; }
inline GeneratorSet singleton(Generator s) { return GeneratorSet{1} << s; }

}  // namespace hecketl
