#pragma once

// Generic IC-basis engine. Given a finite poset-indexed basis {x_w} of a free
// A-module, a bar involution that is unitriangular on it, and the lattice
// spanned over A^- by the x_w, computes the unique bar-fixed basis
//
//   c_w = x_w + sum_{y < w} p(y, w) x_y,   p(y, w) in v^-1 Z[v^-1].
//
// The engine is shared by the Hecke algebra (giving C'_w) and the
// Temperley-Lieb quotient (giving its canonical basis).

#include <functional>
#include <span>
#include <vector>

#include "hecketl/combination.hpp"

namespace hecketl {

struct ICContext {
  /// Poset elements, ascending by id; id order must be a linear extension of
  /// `leq` (true for group tables, which number elements by length).
  std::vector<ElementId> indices;
  /// Partial order on indices.
  std::function<bool(ElementId, ElementId)> leq;
  /// bar(x_w) expanded in the x-basis.
  std::function<Coords(ElementId)> bar_standard;
};

/// Unitriangular table indexed by a poset: column w holds the x-coordinates
/// of the w-th vector.
class TriangularTable {
 public:
  TriangularTable() = default;
  TriangularTable(std::vector<ElementId> indices, std::vector<Coords> columns);

  const std::vector<ElementId>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool contains(ElementId w) const;
  const Coords& column(ElementId w) const;
  Laurent entry(ElementId y, ElementId w) const;

  /// Coordinates of a vector given in the x-basis, with respect to the table's
  /// columns. Uses unitriangularity: peel off the top x-term repeatedly.
  Coords solve(Coords x_coords) const;

  friend bool operator==(const TriangularTable&, const TriangularTable&) = default;

 private:
  std::size_t position(ElementId w) const;

  std::vector<ElementId> indices_;  // ascending ids
  std::vector<Coords> columns_;
};

/// Table r with bar(x_w) = sum_y r(y, w) x_y. Throws InvariantError unless
/// r(w, w) = 1 and r(y, w) != 0 only for y <= w.
TriangularTable bar_matrix(const ICContext& ctx);

/// Canonical basis columns p(., w). `order` optionally overrides the linear
/// extension in which lower entries are solved (it must be a linear extension
/// of ctx.leq; throws PreconditionError otherwise). Throws InvariantError if a
/// defect coefficient is not bar-antisymmetric.
TriangularTable ic_basis(const ICContext& ctx, const TriangularTable& bar, std::span<const ElementId> order = {});

/// True iff `order` is a permutation of ctx.indices compatible with ctx.leq.
bool is_linear_extension(const ICContext& ctx, std::span<const ElementId> order);

}  // namespace hecketl
