#pragma once

// The Hecke algebra H(W) over A = Z[v, v^-1] in the T-basis, with q = v^2:
//
//   T_s T_w = T_sw                   if l(sw) > l(w)
//           = q T_sw + (q - 1) T_w   if l(sw) < l(w)

#include <vector>

#include "hecketl/canonical.hpp"
#include "hecketl/combination.hpp"

namespace hecketl {

enum class Side { left, right };

class HeckeAlgebra {
 public:
  /// The group must outlive the algebra.
  explicit HeckeAlgebra(const GroupTable& group);

  const GroupTable& group() const { return *group_; }

  HeckeElt T(ElementId w, const Laurent& c = 1) const { return HeckeElt::basis(w, c); }

  /// T_s * h (left) or h * T_s (right).
  HeckeElt mul_gen(Side side, Generator s, const HeckeElt& h) const;
  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;

  /// T_s^-1 = q^-1 T_s + (q^-1 - 1) T_e.
  const HeckeElt& inverse_gen(Generator s) const { return inverse_gen_[s]; }
  /// T_w^-1 along the reversed reduced word of w.
  HeckeElt invert_T(ElementId w) const;

  /// Ring involution v -> v^-1, T_w -> T_{w^-1}^-1.
  HeckeElt bar(const HeckeElt& h) const;

 private:
  const GroupTable* group_;
  std::vector<HeckeElt> inverse_gen_;
};

/// bar(T_w) for every w, built by the recursion bar(T_{us}) = bar(T_u) T_s^-1.
std::vector<HeckeElt> bar_of_basis(const HeckeAlgebra& hecke);

/// Context for the Kazhdan-Lusztig basis: indices W, Bruhat order, standard
/// basis x_w = v^-l(w) T_w.
ICContext hecke_context(const HeckeAlgebra& hecke);

/// Coefficients P~_{x,w} of C'_w = sum_x P~_{x,w} v^-l(x) T_x, and optionally
/// the inverse coefficients Q~_{x,w} with
///   v^-l(w) T_w = eps_w sum_x eps_x Q~_{x,w} C'_x.
class KLTable {
 public:
  KLTable() = default;
  explicit KLTable(TriangularTable p) : p_(std::move(p)) {}

  const TriangularTable& p() const { return p_; }
  Laurent p_tilde(ElementId x, ElementId w) const { return p_.entry(x, w); }

  bool has_q() const { return !q_.empty(); }
  Laurent q_tilde(ElementId x, ElementId w) const;
  /// Fills q_tilde by inverting the unitriangular P~ matrix.
  void compute_inverse(const GroupTable& group);

 private:
  TriangularTable p_;
  std::vector<Coords> q_;  // q_[w][x] = Q~_{x,w}
};

/// Runs the canonical engine on hecke_context. `order` optionally selects a
/// different linear extension (used to confirm uniqueness).
KLTable kl_table(const HeckeAlgebra& hecke, std::span<const ElementId> order = {});

/// C'_w in the T-basis.
HeckeElt kl_basis(const HeckeAlgebra& hecke, const KLTable& table, ElementId w);

/// Coefficients eps_w eps_x Q~_{x,w} expressing v^-l(w) T_w in the C'-basis.
Coords inverse_kl_expansion(const HeckeAlgebra& hecke, const KLTable& table, ElementId w);

/// x-basis (v^-l(x) T_x) coordinates of a Hecke element.
Coords to_standard_coords(const GroupTable& group, const HeckeElt& h);
/// Coordinates of h in the C'-basis.
Coords to_kl_coords(const HeckeAlgebra& hecke, const KLTable& table, const HeckeElt& h);

}  // namespace hecketl
