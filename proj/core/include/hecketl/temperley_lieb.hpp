#pragma once

// The generalized Temperley-Lieb algebra TL = H / J, where J is the two-sided
// ideal generated by sum_{u in <s,s'>} T_u over non-commuting pairs s, s'.
// Elements are stored in the t-basis {t_w : w fully commutative}.

#include <span>
#include <vector>

#include "hecketl/canonical.hpp"
#include "hecketl/hecke.hpp"

namespace hecketl {

class TemperleyLieb {
 public:
  /// Precomputes theta(T_w) for every w, one length level at a time; `jobs`
  /// workers fill each level. The Hecke algebra must outlive this object.
  explicit TemperleyLieb(const HeckeAlgebra& hecke, int jobs = 1);

  const HeckeAlgebra& hecke() const { return *hecke_; }
  const GroupTable& group() const { return hecke_->group(); }

  TLElt t(ElementId w, const Laurent& c = 1) const;

  /// theta(T_w) in the t-basis.
  const TLElt& theta_T(ElementId w) const { return theta_[w]; }
  TLElt theta(const HeckeElt& h) const;
  /// t_w -> T_w.
  HeckeElt lift(const TLElt& x) const;

  TLElt mul(const TLElt& a, const TLElt& b) const;

  /// Ring involution v -> v^-1, t_w -> theta(T_{w^-1}^-1).
  TLElt bar(const TLElt& x) const;
  /// t_w^-1 computed inside TL as t_{s_n}^-1 ... t_{s_1}^-1.
  TLElt inverse_t(ElementId w) const;

  /// b_s = v^-1 t_s + v^-1 t_e.
  TLElt b_gen(Generator s) const;
  /// b_{s_1} ... b_{s_k} for an arbitrary generator word.
  TLElt b_word(std::span<const Generator> word) const;
  /// b_w along the canonical word; throws PreconditionError for complex w.
  TLElt b_monomial(ElementId w) const;

  /// sum_{u in <s,s'>} T_u for every pair with m(s, s') >= 3.
  std::vector<HeckeElt> ideal_generators() const;

 private:
  void fill_theta(ElementId w);

  const HeckeAlgebra* hecke_;
  std::vector<TLElt> theta_;
};

/// x-basis coordinates (x_w = v^-l(w) t_w) of a TL element.
Coords to_standard_coords(const GroupTable& group, const TLElt& x);
TLElt from_standard_coords(const GroupTable& group, const Coords& coords);

/// Context for the canonical basis: indices W_c, restricted Bruhat order,
/// standard basis x_w = v^-l(w) t_w.
ICContext tl_context(const TemperleyLieb& tl);

/// c_w in x-coordinates.
TriangularTable ic_basis_tl(const TemperleyLieb& tl, std::span<const ElementId> order = {});

/// b_w in x-coordinates (also unitriangular).
TriangularTable monomial_table(const TemperleyLieb& tl);

/// Normal form a q_c^m b_x of a product b_{s_1} ... b_{s_k}.
struct BProduct {
  Integer a;
  int m = 0;
  ElementId x = 0;

  friend bool operator==(const BProduct&, const BProduct&) = default;
};

/// Reduces a product of b-generators by the relations b_s^2 = q_c b_s,
/// b_s b_s' = b_s' b_s (m = 2), b_s b_s' b_s = b_s (m = 3),
/// b_s b_s' b_s b_s' = 2 b_s b_s' (m = 4), applied leftmost first up to
/// commutation. Throws PreconditionError if some bond order exceeds 4.
BProduct b_product_reduce(const GroupTable& group, std::span<const Generator> word);

/// The TL element a q_c^m b_x.
TLElt expand(const TemperleyLieb& tl, const BProduct& p);

enum class TLBasis { t, b, c };

/// Multiplication table of a basis in itself: entry (x, y) holds the
/// coordinates of B_x B_y in the same basis.
class StructureConstants {
 public:
  StructureConstants(const TemperleyLieb& tl, TLBasis basis, const TriangularTable* table = nullptr);

  TLBasis basis() const { return basis_; }
  const std::vector<ElementId>& indices() const { return indices_; }
  const Coords& product(ElementId x, ElementId y) const;

 private:
  TLBasis basis_;
  std::vector<ElementId> indices_;
  std::vector<Coords> table_;  // row-major over indices_
};

/// Outcome of testing whether ker(theta) is spanned by the C'_w it contains.
struct KernelReport {
  std::size_t group_order = 0;
  std::size_t fc_count = 0;
  /// {w : theta(C'_w) = 0}.
  std::vector<ElementId> kernel_kl;
  /// theta(T_x g T_y) = 0 for every ideal generator g and all x, y.
  bool ideal_annihilated = false;
  /// Exact ranks over A (fraction-free elimination).
  std::size_t ideal_rank = 0;
  std::size_t theta_rank = 0;
  /// J equals the A-span of {C'_w : w in kernel_kl}.
  bool spanned_by_kl = false;
};

KernelReport kernel_basis_check(const TemperleyLieb& tl, const KLTable& kl);

/// Rank over the fraction field of A of the given rows, by Bareiss
/// fraction-free elimination with exact division in A.
std::size_t exact_rank(std::vector<std::vector<Laurent>> rows);

}  // namespace hecketl
