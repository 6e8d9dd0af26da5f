#include "hecketl/canonical.hpp"

#include <algorithm>
#include <unordered_map>

#include "hecketl/errors.hpp"

namespace hecketl {

TriangularTable::TriangularTable(std::vector<ElementId> indices, std::vector<Coords> columns)
    : indices_(std::move(indices)), columns_(std::move(columns)) {
  if (indices_.size() != columns_.size()) throw std::invalid_argument("table shape mismatch");
  if (!std::is_sorted(indices_.begin(), indices_.end())) throw std::invalid_argument("table indices must ascend");
}

std::size_t TriangularTable::position(ElementId w) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), w);
  if (it == indices_.end() || *it != w) throw std::out_of_range("element not indexed by table");
  return static_cast<std::size_t>(it - indices_.begin());
}

bool TriangularTable::contains(ElementId w) const { return std::binary_search(indices_.begin(), indices_.end(), w); }

const Coords& TriangularTable::column(ElementId w) const { return columns_[position(w)]; }

Laurent TriangularTable::entry(ElementId y, ElementId w) const {
  const auto& col = column(w);
  auto it = col.find(y);
  return it == col.end() ? Laurent{} : it->second;
}

Coords TriangularTable::solve(Coords x) const {
  Coords out;
  while (!x.empty()) {
    const auto [w, c] = *x.rbegin();
    if (!contains(w)) throw InvariantError("vector has support outside the table's index set");
    out.emplace(w, c);
    axpy(x, -c, column(w));
    if (x.count(w)) throw InvariantError("table is not unitriangular");
  }
  return out;
}

bool is_linear_extension(const ICContext& ctx, std::span<const ElementId> order) {
  if (order.size() != ctx.indices.size()) return false;
  std::vector<ElementId> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != ctx.indices) return false;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (ctx.leq(order[i], order[j])) return false;  // later element below an earlier one
  return true;
}

TriangularTable bar_matrix(const ICContext& ctx) {
  std::vector<Coords> cols;
  cols.reserve(ctx.indices.size());
  for (auto w : ctx.indices) {
    Coords col = ctx.bar_standard(w);
    auto diag = col.find(w);
    if (diag == col.end() || !diag->second.is_one()) throw InvariantError("bar(x_w) has diagonal coefficient != 1");
    for (const auto& [y, c] : col) {
      if (!std::binary_search(ctx.indices.begin(), ctx.indices.end(), y) || !ctx.leq(y, w))
        throw InvariantError("bar involution is not triangular");
    }
    cols.push_back(std::move(col));
  }
  return TriangularTable(ctx.indices, std::move(cols));
}

TriangularTable ic_basis(const ICContext& ctx, const TriangularTable& bar, std::span<const ElementId> order) {
  std::vector<ElementId> ext(ctx.indices);
  if (!order.empty()) {
    if (!is_linear_extension(ctx, order)) throw PreconditionError("order is not a linear extension of the poset");
    ext.assign(order.begin(), order.end());
  }
  std::unordered_map<ElementId, std::size_t> pos;
  for (std::size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = i;

  std::vector<Coords> cols;
  cols.reserve(ctx.indices.size());
  std::vector<Laurent> defect(ext.size());
  for (auto w : ctx.indices) {
    // p(., w) is solved top-down along the extension; finishing p(z, w) pushes
    // bar(p(z, w)) r(y, z) into the defect of every y below z, so that
    // p(y, w) - bar(p(y, w)) = defect(y) when y is reached.
    Coords col;
    std::fill(defect.begin(), defect.end(), Laurent{});
    const std::size_t top = pos.at(w);
    auto push = [&](ElementId z, const Laurent& pz) {
      const Laurent pz_bar = pz.bar();
      for (const auto& [y, r] : bar.column(z))
        if (y != z) defect[pos.at(y)].add_product(pz_bar, r);
    };
    col.emplace(w, Laurent(1));
    push(w, Laurent(1));
    for (std::size_t i = top; i-- > 0;) {
      const ElementId y = ext[i];
      Laurent& beta = defect[i];
      if (beta.is_zero()) continue;
      if (!ctx.leq(y, w)) throw InvariantError("nonzero defect outside the lower ideal of w");
      if (beta.bar() != -beta) throw InvariantError("defect coefficient is not bar-antisymmetric");
      Laurent alpha = beta.negative_part();
      push(y, alpha);
      col.emplace(y, std::move(alpha));
    }
    cols.push_back(std::move(col));
  }
  return TriangularTable(ctx.indices, std::move(cols));
}

}  // namespace hecketl
