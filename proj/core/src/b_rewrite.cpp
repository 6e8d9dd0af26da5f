#include "hecketl/temperley_lieb.hpp"

#include <algorithm>

#include "hecketl/errors.hpp"

namespace hecketl {

namespace {

// Heap of a word: positions p < r are related when their letters do not
// commute (equal letters included). Returns the positions strictly between i
// and j in the heap order, i.e. the interval (i, j) of the heap poset.
std::vector<std::size_t> heap_interval(const CoxeterGraph& graph, const Word& w, std::size_t i, std::size_t j) {
  auto related = [&](Generator a, Generator b) { return graph.bond(a, b) != 2; };
  const std::size_t n = j - i - 1;
  std::vector<bool> above(n), below(n);
  for (std::size_t p = i + 1; p < j; ++p) {
    bool up = related(w[i], w[p]);
    for (std::size_t r = i + 1; r < p && !up; ++r) up = above[r - i - 1] && related(w[r], w[p]);
    above[p - i - 1] = up;
  }
  for (std::size_t p = j; p-- > i + 1;) {
    bool down = related(w[p], w[j]);
    for (std::size_t r = p + 1; r < j && !down; ++r) down = below[r - i - 1] && related(w[p], w[r]);
    below[p - i - 1] = down;
  }
  std::vector<std::size_t> out;
  for (std::size_t p = i + 1; p < j; ++p)
    if (above[p - i - 1] && below[p - i - 1]) out.push_back(p);
  return out;
}

std::optional<std::size_t> previous_occurrence(const Word& w, std::size_t before, Generator s) {
  for (std::size_t p = before; p-- > 0;)
    if (w[p] == s) return p;
  return std::nullopt;
}

void erase_positions(Word& w, std::size_t first, std::size_t second) {
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(second));
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(first));
}

}  // namespace

BProduct b_product_reduce(const GroupTable& group, std::span<const Generator> word) {
  const auto& graph = group.graph();
  if (graph.max_bond() > 4) throw PreconditionError("b-relations are known only for bond orders 2, 3 and 4");
  Word w(word.begin(), word.end());
  for (auto s : w)
    if (s >= graph.rank()) throw PreconditionError("generator out of range");

  BProduct out{1, 0, group.identity()};
  // Each rule is a convex chain of the heap ending at position j, so it can be
  // made contiguous by commutations alone; the first j that admits a rule wins.
  for (bool applied = true; applied;) {
    applied = false;
    for (std::size_t j = 0; j < w.size() && !applied; ++j) {
      const Generator s = w[j];
      const auto i = previous_occurrence(w, j, s);
      if (!i) continue;
      const auto between = heap_interval(graph, w, *i, j);
      if (between.empty()) {
        // b_s b_s = q_c b_s
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
        ++out.m;
        applied = true;
      } else if (between.size() == 1) {
        const std::size_t k = between.front();
        const Generator t = w[k];
        const int m = graph.bond(s, t);
        if (m == 3) {
          // b_s b_t b_s = b_s
          erase_positions(w, k, j);
          applied = true;
        } else if (m == 4) {
          // b_t b_s b_t b_s = 2 b_t b_s
          const auto h = previous_occurrence(w, *i, t);
          if (h && heap_interval(graph, w, *h, j) == std::vector<std::size_t>{*i, k}) {
            erase_positions(w, k, j);
            out.a *= 2;
            applied = true;
          }
        }
      }
    }
  }
  const auto x = group.reduced_element_of(w);
  if (!x || !group.is_fully_commutative(*x))
    throw InvariantError("b-rewriting stopped at a word that is not a reduced fully commutative expression");
  out.x = *x;
  return out;
}

}  // namespace hecketl
