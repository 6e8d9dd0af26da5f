#include "hecketl/words.hpp"

#include <algorithm>

namespace hecketl {

namespace {

bool distinct_commute(const CoxeterGraph& g, Generator a, Generator b) { return g.bond(a, b) == 2; }

}  // namespace

std::vector<Generator> tower_order(const CoxeterGraph& graph) {
  const int n = graph.rank();
  if (n == 1) return {0};
  std::vector<std::vector<Generator>> adj(static_cast<std::size_t>(n));
  int edges = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int m = graph.bond(static_cast<Generator>(i), static_cast<Generator>(j));
      if (m == 2) continue;
      if (m != 3 && m != 4) throw PreconditionError("coset tower needs bonds of order 2, 3 or 4");
      adj[static_cast<std::size_t>(i)].push_back(static_cast<Generator>(j));
      if (i < j) ++edges;
    }
  if (edges != n - 1) throw PreconditionError("coset tower needs a path graph (type A or B)");

  // Start from a leaf; for type B, the leaf on the order-4 bond.
  std::vector<Generator> starts;
  for (int i = 0; i < n; ++i) {
    const auto& a = adj[static_cast<std::size_t>(i)];
    if (a.size() > 2) throw PreconditionError("coset tower needs a path graph (type A or B)");
    if (a.size() == 1) starts.push_back(static_cast<Generator>(i));
  }
  if (starts.size() != 2) throw PreconditionError("coset tower needs a path graph (type A or B)");

  auto walk = [&](Generator from) {
    std::vector<Generator> order{from};
    Generator prev = from;
    Generator cur = from;
    while (order.size() < static_cast<std::size_t>(n)) {
      const auto& a = adj[cur];
      const Generator next = (a.size() == 1 || a[0] != prev) ? a[0] : a[1];
      if (order.size() >= 2 && next == prev) break;
      prev = cur;
      cur = next;
      order.push_back(cur);
    }
    return order;
  };

  for (auto start : starts) {
    auto order = walk(start);
    if (order.size() != static_cast<std::size_t>(n)) throw PreconditionError("graph is not connected");
    bool ok = true;
    for (std::size_t k = 1; k + 1 < order.size(); ++k)
      if (graph.bond(order[k], order[k + 1]) != 3) ok = false;
    if (ok) return order;
  }
  throw PreconditionError("coset tower needs type A or B (order-4 bond at an end)");
}

std::vector<ElementId> tower_factors(const GroupTable& group, ElementId w) {
  const auto order = tower_order(group.graph());
  const int r = static_cast<int>(order.size());
  std::vector<ElementId> factors(static_cast<std::size_t>(r), group.identity());
  ElementId cur = w;
  for (int i = r; i >= 1; --i) {
    // Minimal representative of <sigma_1..sigma_{i-1}> cur: strip left descents.
    ElementId rep = cur;
    for (bool changed = true; changed;) {
      changed = false;
      for (int j = 0; j < i - 1; ++j)
        if (group.is_left_descent(rep, order[static_cast<std::size_t>(j)])) {
          rep = group.left_mul(rep, order[static_cast<std::size_t>(j)]);
          changed = true;
        }
    }
    factors[static_cast<std::size_t>(i - 1)] = rep;
    cur = group.multiply(cur, group.inverse(rep));
  }
  if (cur != group.identity()) throw InvariantError("coset tower decomposition did not terminate at e");
  return factors;
}

std::vector<ElementId> coset_representatives(const GroupTable& group, int i) {
  const auto order = tower_order(group.graph());
  if (i < 1 || i > static_cast<int>(order.size())) throw PreconditionError("tower index out of range");
  GeneratorSet parabolic = 0;
  for (int j = 0; j < i; ++j) parabolic |= singleton(order[static_cast<std::size_t>(j)]);
  std::vector<ElementId> out;
  for (ElementId w = 0; w < group.size(); ++w) {
    if ((group.content(w) & ~parabolic) != 0) continue;
    bool minimal = true;
    for (int j = 0; j < i - 1 && minimal; ++j) minimal = !group.is_left_descent(w, order[static_cast<std::size_t>(j)]);
    if (minimal) out.push_back(w);
  }
  return out;
}

Word normal_form(const GroupTable& group, ElementId w) {
  Word out;
  for (auto f : tower_factors(group, w)) {
    const auto& piece = group.word(f);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  if (static_cast<int>(out.size()) != group.length(w) || group.element_of(out) != w)
    throw InvariantError("tower normal form is not a reduced expression of w");
  return out;
}

bool satisfies_tower_condition(const CoxeterGraph& graph, const Word& word) {
  for (std::size_t k = 1; k < word.size(); ++k) {
    const bool seen = std::find(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k), word[k]) !=
                      word.begin() + static_cast<std::ptrdiff_t>(k);
    if (seen && graph.commute(word[k], word[k - 1])) return false;
  }
  return true;
}

std::vector<NoncommutativeParse> all_noncommutative_parses(const CoxeterGraph& graph, const Word& word, Generator s) {
  std::vector<NoncommutativeParse> out;
  const std::size_t n = word.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (word[i] != s) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Generator t = word[j];
      if (graph.bond(s, t) != 3) continue;
      bool ok = true;
      for (std::size_t p = i + 1; p < n && ok; ++p)
        if (p != j) ok = distinct_commute(graph, word[p], s);
      if (ok) out.push_back({1, t, {i, j}});
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    if (word[b] != s) continue;
    for (std::size_t a = 0; a < b; ++a) {
      const Generator t = word[a];
      if (graph.bond(s, t) != 4) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (word[c] != t) continue;
        bool ok = true;
        for (std::size_t p = b + 1; p < n && ok; ++p)
          if (p != c) ok = distinct_commute(graph, word[p], s);
        for (std::size_t p = a + 1; p < c && ok; ++p)
          if (p != b) ok = distinct_commute(graph, word[p], t);
        if (ok) out.push_back({2, t, {a, b, c}});
      }
    }
  }
  return out;
}

NoncommutativeParse parse_noncommutative(const CoxeterGraph& graph, const Word& word, Generator s) {
  const auto parses = all_noncommutative_parses(graph, word, s);
  if (parses.empty()) throw InvariantError("no noncommutative parse of " + format_word(word));
  for (const auto& p : parses)
    if (p.partner != parses.front().partner)
      throw InvariantError("ambiguous partner generator in parse of " + format_word(word));
  return parses.front();
}

NoncommutativeParse parse_noncommutative(const GroupTable& group, ElementId w, Generator s) {
  if (s >= group.rank()) throw PreconditionError("generator out of range");
  if (!group.is_fully_commutative(w)) throw PreconditionError("w must be fully commutative");
  const ElementId ws = group.right_mul(w, s);
  if (group.is_fully_commutative(ws)) throw PreconditionError("ws must be complex");
  return parse_noncommutative(group.graph(), group.word(w), s);
}

}  // namespace hecketl
