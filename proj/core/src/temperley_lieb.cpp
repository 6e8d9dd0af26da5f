#include "hecketl/temperley_lieb.hpp"

#include <algorithm>

#include "hecketl/errors.hpp"
#include "hecketl/parallel.hpp"

namespace hecketl {

namespace {

/// sum of T_u over the parabolic <s, s'>, optionally leaving out its longest element.
HeckeElt parabolic_sum(const HeckeAlgebra& hecke, Generator s, Generator t, bool include_longest) {
  const auto& g = hecke.group();
  const int m = g.graph().bond(s, t);
  HeckeElt out = hecke.T(g.identity());
  for (int len = 1; len <= m; ++len) {
    if (len == m && !include_longest) break;
    for (const Generator first : {s, t}) {
      Word alt;
      for (int k = 0; k < len; ++k) alt.push_back(k % 2 ? (first == s ? t : s) : first);
      out.add(g.element_of(alt), 1);
      if (len == m) break;  // both alternating words of length m give w_{ss'}
    }
  }
  return out;
}

}  // namespace

TemperleyLieb::TemperleyLieb(const HeckeAlgebra& hecke, int jobs) : hecke_(&hecke) {
  const auto& g = group();
  theta_.resize(g.size());
  std::size_t begin = 0;
  while (begin < g.size()) {
    std::size_t end = begin;
    while (end < g.size() && g.length(static_cast<ElementId>(end)) == g.length(static_cast<ElementId>(begin))) ++end;
    parallel_for(end - begin, jobs, [&](std::size_t i) { fill_theta(static_cast<ElementId>(begin + i)); });
    begin = end;
  }
}

void TemperleyLieb::fill_theta(ElementId w) {
  const auto& g = group();
  const auto& witness = g.complex_witness(w);
  if (!witness) {
    theta_[w] = TLElt::basis(w);
    return;
  }
  // T_w = T_{x1} T_{w_ss'} T_{x2}, and T_{w_ss'} = -sum_{u != w_ss'} T_u mod J.
  const auto& word = witness->word;
  const auto block_end = witness->position + static_cast<std::size_t>(witness->order);
  HeckeElt h = parabolic_sum(*hecke_, witness->first, witness->second, false);
  for (std::size_t i = witness->position; i-- > 0;) h = hecke_->mul_gen(Side::left, word[i], h);
  for (std::size_t i = block_end; i < word.size(); ++i) h = hecke_->mul_gen(Side::right, word[i], h);
  TLElt out;
  for (const auto& [y, c] : h) {
    if (g.length(y) >= g.length(w)) throw InvariantError("theta rewriting did not decrease length");
    out.add_scaled(-c, theta_[y]);
  }
  theta_[w] = std::move(out);
}

TLElt TemperleyLieb::t(ElementId w, const Laurent& c) const {
  if (!group().is_fully_commutative(w)) throw PreconditionError("t_w is only a basis element for fully commutative w");
  return TLElt::basis(w, c);
}

TLElt TemperleyLieb::theta(const HeckeElt& h) const {
  TLElt out;
  for (const auto& [w, c] : h) out.add_scaled(c, theta_[w]);
  return out;
}

HeckeElt TemperleyLieb::lift(const TLElt& x) const { return HeckeElt(x.coords()); }

TLElt TemperleyLieb::mul(const TLElt& a, const TLElt& b) const { return theta(hecke_->mul(lift(a), lift(b))); }

TLElt TemperleyLieb::bar(const TLElt& x) const {
  const auto& g = group();
  TLElt out;
  for (const auto& [w, c] : x) out.add_scaled(c.bar(), theta(hecke_->invert_T(g.inverse(w))));
  return out;
}

TLElt TemperleyLieb::inverse_t(ElementId w) const {
  const auto& g = group();
  const Laurent q_inv = Laurent::monomial(-2);
  TLElt out = TLElt::basis(g.identity());
  for (auto s : g.word(w)) {
    TLElt t_s_inv = TLElt::basis(g.right_mul(g.identity(), s), q_inv);
    t_s_inv.add(g.identity(), q_inv - 1);
    out = mul(t_s_inv, out);
  }
  return out;
}

TLElt TemperleyLieb::b_gen(Generator s) const {
  const auto& g = group();
  TLElt out = TLElt::basis(g.right_mul(g.identity(), s), Laurent::v_inv());
  out.add(g.identity(), Laurent::v_inv());
  return out;
}

TLElt TemperleyLieb::b_word(std::span<const Generator> word) const {
  TLElt out = TLElt::basis(group().identity());
  for (auto s : word) out = mul(out, b_gen(s));
  return out;
}

TLElt TemperleyLieb::b_monomial(ElementId w) const {
  if (!group().is_fully_commutative(w)) throw PreconditionError("b_w is defined only for fully commutative w");
  return b_word(group().word(w));
}

std::vector<HeckeElt> TemperleyLieb::ideal_generators() const {
  const auto& graph = group().graph();
  std::vector<HeckeElt> out;
  for (int s = 0; s < graph.rank(); ++s)
    for (int t = s + 1; t < graph.rank(); ++t)
      if (graph.bond(static_cast<Generator>(s), static_cast<Generator>(t)) >= 3)
        out.push_back(parabolic_sum(*hecke_, static_cast<Generator>(s), static_cast<Generator>(t), true));
  return out;
}

Coords to_standard_coords(const GroupTable& group, const TLElt& x) {
  Coords out;
  for (const auto& [w, c] : x) out.emplace(w, c.shifted(group.length(w)));
  return out;
}

TLElt from_standard_coords(const GroupTable& group, const Coords& coords) {
  Coords out;
  for (const auto& [w, c] : coords) out.emplace(w, c.shifted(-group.length(w)));
  return TLElt(std::move(out));
}

ICContext tl_context(const TemperleyLieb& tl) {
  const auto& g = tl.group();
  ICContext ctx;
  ctx.indices = g.fully_commutative();
  ctx.leq = [&g](ElementId x, ElementId w) { return g.bruhat_leq(x, w); };
  ctx.bar_standard = [&g, &tl](ElementId w) {
    // bar(v^-l(w) t_w) = v^l(w) bar(t_w)
    return to_standard_coords(g, Laurent::monomial(g.length(w)) * tl.bar(TLElt::basis(w)));
  };
  return ctx;
}

TriangularTable ic_basis_tl(const TemperleyLieb& tl, std::span<const ElementId> order) {
  const auto ctx = tl_context(tl);
  return ic_basis(ctx, bar_matrix(ctx), order);
}

TriangularTable monomial_table(const TemperleyLieb& tl) {
  const auto& g = tl.group();
  std::vector<Coords> cols;
  for (auto w : g.fully_commutative()) cols.push_back(to_standard_coords(g, tl.b_monomial(w)));
  return TriangularTable(g.fully_commutative(), std::move(cols));
}

TLElt expand(const TemperleyLieb& tl, const BProduct& p) {
  Laurent scalar(p.a);
  for (int k = 0; k < p.m; ++k) scalar *= Laurent::qc();
  return scalar * tl.b_monomial(p.x);
}

StructureConstants::StructureConstants(const TemperleyLieb& tl, TLBasis basis, const TriangularTable* table)
    : basis_(basis), indices_(tl.group().fully_commutative()) {
  const auto& g = tl.group();
  const std::size_t n = indices_.size();
  std::vector<TLElt> tt(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tt[i * n + j] = tl.mul(TLElt::basis(indices_[i]), TLElt::basis(indices_[j]));
  table_.resize(n * n);
  if (basis == TLBasis::t) {
    for (std::size_t k = 0; k < n * n; ++k) table_[k] = tt[k].coords();
    return;
  }
  TriangularTable owned;
  if (!table) {
    owned = basis == TLBasis::c ? ic_basis_tl(tl) : monomial_table(tl);
    table = &owned;
  }
  std::vector<std::size_t> slot(g.size());
  for (std::size_t i = 0; i < n; ++i) slot[indices_[i]] = i;
  // B_x t_b for every x, b; then B_x B_y = sum_b P(b, y) v^-l(b) B_x t_b.
  std::vector<TLElt> bt(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& [a, p] : table->column(indices_[x])) {
      const Laurent coeff = p.shifted(-g.length(a));
      for (std::size_t b = 0; b < n; ++b) bt[x * n + b].add_scaled(coeff, tt[slot[a] * n + b]);
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      TLElt prod;
      for (const auto& [b, p] : table->column(indices_[y])) prod.add_scaled(p.shifted(-g.length(b)), bt[x * n + slot[b]]);
      table_[x * n + y] = table->solve(to_standard_coords(g, prod));
    }
}

const Coords& StructureConstants::product(ElementId x, ElementId y) const {
  auto find = [&](ElementId w) {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), w);
    if (it == indices_.end() || *it != w) throw std::out_of_range("element is not fully commutative");
    return static_cast<std::size_t>(it - indices_.begin());
  };
  return table_[find(x) * indices_.size() + find(y)];
}

}  // namespace hecketl
