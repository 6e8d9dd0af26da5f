#pragma once

// Word combinatorics for linear graphs (types A and B): the coset-tower normal
// form and the parse of a fully commutative w against a generator s with ws
// complex.

#include <cstddef>
#include <vector>

#include "hecketl/coxeter.hpp"

namespace hecketl {

/// Generators sigma_1..sigma_r of a type A or B graph in tower order: a path
/// whose only non-simple bond (order 4, type B) sits on the first edge.
/// Throws PreconditionError for any other graph.
std::vector<Generator> tower_order(const CoxeterGraph& graph);

/// Factors w = w_1 w_2 ... w_r with w_i in W^(i), the minimal-length right
/// coset representatives of <sigma_1..sigma_{i-1}> in <sigma_1..sigma_i>.
std::vector<ElementId> tower_factors(const GroupTable& group, ElementId w);

/// W^(i) for i in 1..rank, sorted by length.
std::vector<ElementId> coset_representatives(const GroupTable& group, int i);

/// Concatenation of the (unique) reduced expressions of the tower factors.
Word normal_form(const GroupTable& group, ElementId w);

/// For each k, either word[k] does not occur earlier, or word[k] does not
/// commute with word[k-1].
bool satisfies_tower_condition(const CoxeterGraph& graph, const Word& word);

/// w = w1 s w2 s' w3 with m(s, s') = 3 (kind 1), or
/// w = w1 s' w2 s w3 s' w4 with m(s, s') = 4 (kind 2).
struct NoncommutativeParse {
  int kind = 1;
  Generator partner = 0;  // s'
  /// Positions of the distinguished letters in the parsed word:
  /// kind 1: {s, s'}; kind 2: {s', s, s'}.
  std::vector<std::size_t> positions;

  friend bool operator==(const NoncommutativeParse&, const NoncommutativeParse&) = default;
};

/// Every position choice in `word` that parses as kind 1 or kind 2 for `s`.
std::vector<NoncommutativeParse> all_noncommutative_parses(const CoxeterGraph& graph, const Word& word, Generator s);

/// Parse of `word` (any reduced expression of a fully commutative w with ws
/// complex). Throws InvariantError if no parse exists or two different
/// partners s' admit one.
NoncommutativeParse parse_noncommutative(const CoxeterGraph& graph, const Word& word, Generator s);

/// Parse of the canonical word of w. Throws PreconditionError unless w is
/// fully commutative and ws is not.
NoncommutativeParse parse_noncommutative(const GroupTable& group, ElementId w, Generator s);

}  // namespace hecketl
