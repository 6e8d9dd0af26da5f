#include <algorithm>
#include <set>
#include <string>

#include "hecketl/temperley_lieb.hpp"

namespace hecketl {

std::size_t exact_rank(std::vector<std::vector<Laurent>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  Laurent prev(1);
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    // Sparsest nonzero pivot keeps the minors small.
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (!rows[r][col].is_zero() && (pivot == rows.size() || rows[r][col].size() < rows[pivot][col].size())) pivot = r;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Laurent piv = rows[rank][col];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Laurent lead = rows[r][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        Laurent entry = piv * rows[r][j];
        if (!lead.is_zero()) entry -= lead * rows[rank][j];
        rows[r][j] = exact_div(entry, prev);
      }
      rows[r][col] = Laurent{};
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

namespace {

std::vector<Laurent> dense_row(const Coords& c, const std::vector<std::size_t>& slot, std::size_t width) {
  std::vector<Laurent> row(width);
  for (const auto& [w, p] : c) row[slot[w]] = p;
  return row;
}

std::string row_key(const Coords& c) {
  std::string key;
  for (const auto& [w, p] : c) key += std::to_string(w) + ":" + p.to_string() + ";";
  return key;
}

}  // namespace

KernelReport kernel_basis_check(const TemperleyLieb& tl, const KLTable& kl) {
  const auto& hecke = tl.hecke();
  const auto& g = tl.group();
  KernelReport report;
  report.group_order = g.size();
  report.fc_count = g.fully_commutative().size();

  std::vector<HeckeElt> kl_elts(g.size());
  for (ElementId w = 0; w < g.size(); ++w) {
    kl_elts[w] = kl_basis(hecke, kl, w);
    if (tl.theta(kl_elts[w]).is_zero()) report.kernel_kl.push_back(w);
  }

  // Spanning set {T_x g T_y} of J, deduplicated.
  const auto gens = tl.ideal_generators();
  std::vector<std::size_t> all_slot(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) all_slot[i] = i;
  std::set<std::string> seen;
  std::vector<std::vector<Laurent>> ideal_rows;
  report.ideal_annihilated = true;
  for (const auto& gen : gens) {
    for (ElementId x = 0; x < g.size(); ++x) {
      HeckeElt left = gen;
      const auto& wx = g.word(x);
      for (auto it = wx.rbegin(); it != wx.rend(); ++it) left = hecke.mul_gen(Side::left, *it, left);
      for (ElementId y = 0; y < g.size(); ++y) {
        HeckeElt prod = left;
        for (auto s : g.word(y)) prod = hecke.mul_gen(Side::right, s, prod);
        if (!tl.theta(prod).is_zero()) report.ideal_annihilated = false;
        if (seen.insert(row_key(prod.coords())).second) ideal_rows.push_back(dense_row(prod.coords(), all_slot, g.size()));
      }
    }
  }
  report.ideal_rank = exact_rank(std::move(ideal_rows));

  std::vector<std::size_t> fc_slot(g.size());
  for (std::size_t i = 0; i < g.fully_commutative().size(); ++i) fc_slot[g.fully_commutative()[i]] = i;
  std::vector<std::vector<Laurent>> theta_rows;
  for (ElementId w = 0; w < g.size(); ++w)
    theta_rows.push_back(dense_row(tl.theta_T(w).coords(), fc_slot, report.fc_count));
  report.theta_rank = exact_rank(std::move(theta_rows));

  // M = A-span{C'_w : w in K} equals J iff M holds every generator and is
  // closed under multiplication by T_s on both sides (M is inside J because
  // theta kills it).
  std::vector<bool> in_kernel(g.size(), false);
  for (auto w : report.kernel_kl) in_kernel[w] = true;
  auto in_span = [&](const HeckeElt& h) {
    const auto coords = to_kl_coords(hecke, kl, h);
    return std::all_of(coords.begin(), coords.end(), [&](const auto& kv) { return in_kernel[kv.first]; });
  };
  bool closed = std::all_of(gens.begin(), gens.end(), in_span);
  for (auto w : report.kernel_kl)
    for (int s = 0; s < g.rank() && closed; ++s) {
      closed = in_span(hecke.mul_gen(Side::left, static_cast<Generator>(s), kl_elts[w])) &&
               in_span(hecke.mul_gen(Side::right, static_cast<Generator>(s), kl_elts[w]));
    }
  report.spanned_by_kl = closed;
  return report;
}

}  // namespace hecketl
