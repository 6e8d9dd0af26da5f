#include "hecketl/hecke.hpp"

#include <memory>

#include "hecketl/errors.hpp"

namespace hecketl {

HeckeAlgebra::HeckeAlgebra(const GroupTable& group) : group_(&group) {
  const Laurent q_inv = Laurent::monomial(-2);
  for (int s = 0; s < group.rank(); ++s) {
    HeckeElt inv = T(group.right_mul(group.identity(), static_cast<Generator>(s)), q_inv);
    inv.add(group.identity(), q_inv - 1);
    inverse_gen_.push_back(std::move(inv));
  }
}

HeckeElt HeckeAlgebra::mul_gen(Side side, Generator s, const HeckeElt& h) const {
  const Laurent q = Laurent::q();
  const Laurent q_minus_1 = q - 1;
  Coords out;
  for (const auto& [w, c] : h) {
    const ElementId sw = side == Side::left ? group_->left_mul(w, s) : group_->right_mul(w, s);
    if (group_->length(sw) > group_->length(w)) {
      accumulate(out, sw, c);
    } else {
      accumulate(out, sw, q * c);
      accumulate(out, w, q_minus_1 * c);
    }
  }
  return HeckeElt(std::move(out));
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt out;
  for (const auto& [y, c] : b) {
    HeckeElt prod = a;
    for (auto s : group_->word(y)) prod = mul_gen(Side::right, s, prod);
    out.add_scaled(c, prod);
  }
  return out;
}

HeckeElt HeckeAlgebra::invert_T(ElementId w) const {
  // (T_{s1} ... T_{sn})^-1 = T_{sn}^-1 ... T_{s1}^-1, built by left
  // multiplication in the order s1, s2, ...
  const Laurent q_inv = Laurent::monomial(-2);
  const Laurent q_inv_minus_1 = q_inv - 1;
  HeckeElt out = T(group_->identity());
  for (auto s : group_->word(w)) {
    HeckeElt next = q_inv * mul_gen(Side::left, s, out);
    next.add_scaled(q_inv_minus_1, out);
    out = std::move(next);
  }
  return out;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& h) const {
  HeckeElt out;
  for (const auto& [w, c] : h) out.add_scaled(c.bar(), invert_T(group_->inverse(w)));
  return out;
}

std::vector<HeckeElt> bar_of_basis(const HeckeAlgebra& hecke) {
  const auto& g = hecke.group();
  const Laurent q_inv = Laurent::monomial(-2);
  const Laurent q_inv_minus_1 = q_inv - 1;
  std::vector<HeckeElt> out(g.size());
  out[g.identity()] = hecke.T(g.identity());
  for (ElementId w = 1; w < g.size(); ++w) {
    const Generator s = g.word(w).back();
    const HeckeElt& prev = out[g.right_mul(w, s)];
    HeckeElt next = q_inv * hecke.mul_gen(Side::right, s, prev);
    next.add_scaled(q_inv_minus_1, prev);
    out[w] = std::move(next);
  }
  return out;
}

Coords to_standard_coords(const GroupTable& group, const HeckeElt& h) {
  Coords out;
  for (const auto& [x, c] : h) out.emplace(x, c.shifted(group.length(x)));
  return out;
}

ICContext hecke_context(const HeckeAlgebra& hecke) {
  const auto& g = hecke.group();
  ICContext ctx;
  ctx.indices.resize(g.size());
  for (ElementId w = 0; w < g.size(); ++w) ctx.indices[w] = w;
  ctx.leq = [&g](ElementId x, ElementId w) { return g.bruhat_leq(x, w); };
  auto bars = std::make_shared<std::vector<HeckeElt>>(bar_of_basis(hecke));
  ctx.bar_standard = [&g, bars](ElementId w) {
    // bar(v^-l(w) T_w) = v^l(w) bar(T_w)
    Coords out;
    for (const auto& [y, c] : (*bars)[w]) out.emplace(y, c.shifted(g.length(w) + g.length(y)));
    return out;
  };
  return ctx;
}

Laurent KLTable::q_tilde(ElementId x, ElementId w) const {
  if (q_.empty()) throw PreconditionError("inverse KL coefficients not computed");
  auto it = q_.at(w).find(x);
  return it == q_.at(w).end() ? Laurent{} : it->second;
}

void KLTable::compute_inverse(const GroupTable& group) {
  q_.assign(p_.size(), {});
  for (std::size_t i = 0; i < p_.size(); ++i) {
    const ElementId w = p_.indices()[i];
    // Column of P~^-1 is eps_w eps_x Q~_{x,w}.
    Coords col = p_.solve(Coords{{w, Laurent(1)}});
    for (auto& [x, c] : col) q_[i].emplace(x, (group.length(x) + group.length(w)) % 2 ? -c : c);
  }
}

KLTable kl_table(const HeckeAlgebra& hecke, std::span<const ElementId> order) {
  const auto ctx = hecke_context(hecke);
  return KLTable(ic_basis(ctx, bar_matrix(ctx), order));
}

HeckeElt kl_basis(const HeckeAlgebra& hecke, const KLTable& table, ElementId w) {
  const auto& g = hecke.group();
  HeckeElt out;
  for (const auto& [x, c] : table.p().column(w)) out.add(x, c.shifted(-g.length(x)));
  return out;
}

Coords inverse_kl_expansion(const HeckeAlgebra& hecke, const KLTable& table, ElementId w) {
  return table.p().solve(to_standard_coords(hecke.group(), hecke.T(w, Laurent::monomial(-hecke.group().length(w)))));
}

Coords to_kl_coords(const HeckeAlgebra& hecke, const KLTable& table, const HeckeElt& h) {
  return table.p().solve(to_standard_coords(hecke.group(), h));
}

}  // namespace hecketl
