#include "hecketl/verify.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "hecketl/parallel.hpp"
#include "hecketl/words.hpp"

namespace hecketl {

using json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

Integer max_abs(const Coords& coords) {
  Integer worst = 0;
  for (const auto& [w, c] : coords)
    for (const auto& t : c.terms()) worst = std::max(worst, Integer(abs(t.coeff)));
  return worst;
}

// JSON integer when it fits in 64 bits, decimal string otherwise.
json integer_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return n.convert_to<std::int64_t>();
  return n.str();
}

// Per-index failure slots filled by parallel workers (each worker touches only
// its own slots), merged in index order at the end.
class Scan {
 public:
  Scan(std::string check, const Workspace& ws, std::size_t n)
      : start_(Clock::now()), slots_(n), worst_(n) {
    report_.check = std::move(check);
    report_.graph = ws.group().graph().name();
    report_.scanned = n;
  }

  void fail(std::size_t i, json failure) { slots_[i].push_back(std::move(failure)); }
  void observe(std::size_t i, const Integer& coeff) { worst_[i] = std::max(worst_[i], coeff); }
  CheckReport& report() { return report_; }

  CheckReport finish() {
    Integer worst = 0;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      worst = std::max(worst, worst_[i]);
      for (auto& f : slots_[i]) {
        ++report_.failure_count;
        if (report_.failures.size() < kMaxReportedFailures) report_.failures.push_back(std::move(f));
      }
    }
    report_.stats["max_abs_coefficient"] = integer_json(worst);
    report_.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  Clock::time_point start_;
  CheckReport report_;
  std::vector<std::vector<json>> slots_;
  std::vector<Integer> worst_;
};

json word_list(const GroupTable& g, const std::vector<ElementId>& ids) {
  auto out = json::array();
  for (auto w : ids) out.push_back(g.word_string(w));
  return out;
}

json bproduct_json(const GroupTable& g, const BProduct& p) {
  json out;
  out["a"] = integer_json(p.a);
  out["m"] = p.m;
  out["x"] = g.word_string(p.x);
  return out;
}

// Same elements, same length levels, reversed id order inside each level: a
// second linear extension of Bruhat order.
std::vector<ElementId> reversed_levels(const GroupTable& g, std::vector<ElementId> ids) {
  std::stable_sort(ids.begin(), ids.end(), [&](ElementId a, ElementId b) {
    if (g.length(a) != g.length(b)) return g.length(a) < g.length(b);
    return a > b;
  });
  return ids;
}

// Unitriangular with off-diagonal entries in v^-1 A^- and support below w.
std::optional<std::string> triangularity_defect(const GroupTable& g, const TriangularTable& table, ElementId w) {
  for (const auto& [y, p] : table.column(w)) {
    if (y == w) {
      if (!p.is_one()) return "diagonal entry is " + p.to_string();
    } else if (!g.bruhat_leq(y, w)) {
      return "entry at " + g.word_string(y) + " outside the Bruhat ideal";
    } else if (!p.in_v_inv_A_minus()) {
      return "entry at " + g.word_string(y) + " is " + p.to_string();
    }
  }
  if (!table.column(w).contains(w)) return "missing diagonal entry";
  return std::nullopt;
}

}  // namespace

Workspace::Workspace(const CoxeterGraph& graph, WorkspaceOptions options) : options_(std::move(options)) {
  if (options_.jobs < 1) throw PreconditionError("worker count must be at least 1");
  group_ = std::make_unique<GroupTable>(GroupTable::enumerate(graph, options_.cap));
  hecke_ = std::make_unique<HeckeAlgebra>(*group_);
}

std::optional<TriangularTable> Workspace::cached(std::string_view kind) {
  if (!options_.cache_dir) return std::nullopt;
  auto table = TableCache(*options_.cache_dir).load(*group_, kind);
  if (table) cache_hit_ = true;
  return table;
}

void Workspace::remember(std::string_view kind, const TriangularTable& table) {
  if (options_.cache_dir) TableCache(*options_.cache_dir).store(*group_, kind, table);
}

const KLTable& Workspace::kl() {
  if (!kl_) {
    if (auto table = cached("kl")) {
      kl_.emplace(std::move(*table));
    } else {
      kl_.emplace(kl_table(*hecke_));
      remember("kl", kl_->p());
    }
  }
  return *kl_;
}

const TemperleyLieb& Workspace::tl() {
  if (!tl_) tl_ = std::make_unique<TemperleyLieb>(*hecke_, options_.jobs);
  return *tl_;
}

const TriangularTable& Workspace::ic() {
  if (!ic_) {
    if (auto table = cached("ic")) {
      ic_ = std::move(table);
    } else {
      ic_ = ic_basis_tl(tl());
      remember("ic", *ic_);
    }
  }
  return *ic_;
}

const TriangularTable& Workspace::monomial() {
  if (!monomial_) monomial_ = monomial_table(tl());
  return *monomial_;
}

json CheckReport::to_json(bool timing) const {
  json out;
  out["check"] = check;
  out["graph"] = graph;
  out["scanned"] = scanned;
  out["passed"] = passed();
  out["failure_count"] = failure_count;
  out["failures"] = failures;
  out["stats"] = stats;
  if (timing) out["elapsed_ms"] = elapsed_ms;
  return out;
}

CheckReport check_projection(Workspace& ws) {
  const auto& g = ws.group();
  const auto& kl = ws.kl();
  const auto& tl = ws.tl();
  const auto& ic = ws.ic();
  const auto& fc = g.fully_commutative();
  Scan scan("projection", ws, fc.size());
  parallel_for(fc.size(), ws.options().jobs, [&](std::size_t i) {
    const ElementId w = fc[i];
    const Coords image = to_standard_coords(g, tl.theta(kl_basis(ws.hecke(), kl, w)));
    scan.observe(i, max_abs(image));
    if (image != ic.column(w)) {
      json f;
      f["w"] = g.word_string(w);
      f["theta_of_kl"] = coords_to_json(g, image);
      f["canonical"] = coords_to_json(g, ic.column(w));
      scan.fail(i, std::move(f));
    }
  });
  return scan.finish();
}

CheckReport check_lattice(Workspace& ws) {
  const auto& g = ws.group();
  const auto& kl = ws.kl();
  const auto& tl = ws.tl();
  Scan scan("lattice", ws, g.size());
  parallel_for(g.size(), ws.options().jobs, [&](std::size_t i) {
    const auto w = static_cast<ElementId>(i);
    const Coords standard = to_standard_coords(g, Laurent::monomial(-g.length(w)) * tl.theta_T(w));
    const Coords kl_image = to_standard_coords(g, tl.theta(kl_basis(ws.hecke(), kl, w)));
    scan.observe(i, std::max(max_abs(standard), max_abs(kl_image)));
    auto test = [&](const Coords& coords, const char* which) {
      for (const auto& [x, c] : coords)
        if (!c.in_A_minus()) {
          json f;
          f["w"] = g.word_string(w);
          f["element"] = which;
          f["x"] = g.word_string(x);
          f["coefficient"] = c.to_string();
          scan.fail(i, std::move(f));
        }
    };
    test(standard, "theta(v^-l(w) T_w)");
    test(kl_image, "theta(C'_w)");
  });
  return scan.finish();
}

CheckReport check_kernel(Workspace& ws) {
  const auto& g = ws.group();
  Scan scan("kernel", ws, g.size());
  const KernelReport k = kernel_basis_check(ws.tl(), ws.kl());
  const std::size_t expected = k.group_order - k.fc_count;
  const std::size_t kernel_dim = k.group_order - k.theta_rank;
  auto fail = [&](const std::string& reason) {
    json f;
    f["reason"] = reason;
    scan.fail(0, std::move(f));
  };
  if (!k.ideal_annihilated) fail("theta does not annihilate every T_x g T_y");
  if (k.ideal_rank != expected) fail("rank of the ideal span differs from |W| - |W_c|");
  if (kernel_dim != expected) fail("dimension of ker(theta) differs from |W| - |W_c|");
  if (!k.spanned_by_kl) fail("ker(theta) is not spanned by the C'_w it contains");
  auto& stats = scan.report().stats;
  stats["group_order"] = k.group_order;
  stats["fc_count"] = k.fc_count;
  stats["ideal_rank"] = k.ideal_rank;
  stats["kernel_dimension"] = kernel_dim;
  stats["kernel_kl"] = word_list(g, k.kernel_kl);
  stats["spanned_by_kl"] = k.spanned_by_kl;
  return scan.finish();
}

CheckReport check_positivity(Workspace& ws) {
  const auto& g = ws.group();
  const auto& fc = g.fully_commutative();
  const std::size_t n = fc.size();
  Scan scan("positivity", ws, n * n);
  const StructureConstants sc(ws.tl(), TLBasis::c, &ws.ic());
  std::size_t negatives = 0;
  for (std::size_t i = 0; i < n * n; ++i) {
    const auto& product = sc.product(fc[i / n], fc[i % n]);
    scan.observe(i, max_abs(product));
    for (const auto& [z, c] : product)
      if (!c.has_nonneg_coeffs()) {
        ++negatives;
        json f;
        f["x"] = g.word_string(fc[i / n]);
        f["y"] = g.word_string(fc[i % n]);
        f["z"] = g.word_string(z);
        f["coefficient"] = c.to_string();
        scan.fail(i, std::move(f));
      }
  }
  scan.report().stats["negative_coefficients"] = negatives;
  return scan.finish();
}

CheckReport check_b_bound(Workspace& ws) {
  const auto& g = ws.group();
  const auto& tl = ws.tl();
  const auto& fc = g.fully_commutative();
  const int rank = g.rank();
  Scan scan("b-bound", ws, fc.size() * static_cast<std::size_t>(rank));
  parallel_for(fc.size() * rank, ws.options().jobs, [&](std::size_t i) {
    const ElementId w = fc[i / rank];
    const auto s = static_cast<Generator>(i % rank);
    Word word = g.word(w);
    word.push_back(s);
    const BProduct r = b_product_reduce(g, word);
    bool noncommuting_descent = false;
    for (int t = 0; t < rank; ++t)
      if (!g.graph().commute(s, static_cast<Generator>(t)) && g.is_right_descent(w, static_cast<Generator>(t)))
        noncommuting_descent = true;
    std::vector<std::string> reasons;
    if (r.a < 0) reasons.push_back("a < 0");
    if (r.m > 1) reasons.push_back("m > 1");
    if (!g.is_right_descent(r.x, s)) reasons.push_back("l(w's) >= l(w')");
    if (noncommuting_descent && r.m != 0) reasons.push_back("m != 0 despite a non-commuting right descent");
    if (expand(tl, r) != tl.mul(tl.b_monomial(w), tl.b_gen(s))) reasons.push_back("disagrees with b_w b_s computed in TL");
    for (auto& reason : reasons) {
      json f;
      f["w"] = g.word_string(w);
      f["s"] = format_word(Word{s});
      f["product"] = bproduct_json(g, r);
      f["reason"] = reason;
      scan.fail(i, std::move(f));
    }
  });
  return scan.finish();
}

CheckReport check_deletion(Workspace& ws, int max_length) {
  const auto& g = ws.group();
  tower_order(g.graph());  // types A and B only
  std::vector<ElementId> elements;
  for (ElementId w = 0; w < g.size() && g.length(w) <= max_length; ++w) elements.push_back(w);
  Scan scan("deletion", ws, elements.size());
  std::vector<std::size_t> subsequences(elements.size());
  parallel_for(elements.size(), ws.options().jobs, [&](std::size_t i) {
    const ElementId w = elements[i];
    const Word nf = normal_form(g, w);
    const int n = static_cast<int>(nf.size());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      Word sub;
      for (int j = 0; j < n; ++j)
        if (mask >> j & 1U) sub.push_back(nf[j]);
      const int k = static_cast<int>(sub.size());
      const BProduct r = b_product_reduce(g, sub);
      ++subsequences[i];
      if (r.m > n - k || r.a < 0) {
        json f;
        f["w"] = g.word_string(w);
        f["normal_form"] = format_word(nf);
        f["subsequence"] = format_word(sub);
        f["product"] = bproduct_json(g, r);
        scan.fail(i, std::move(f));
      }
    }
  });
  std::size_t total = 0;
  for (auto c : subsequences) total += c;
  scan.report().stats["subsequences"] = total;
  scan.report().stats["max_length"] = max_length;
  return scan.finish();
}

CheckReport check_monomial_vs_canonical(Workspace& ws) {
  const auto& g = ws.group();
  const auto& ic = ws.ic();
  const auto& mono = ws.monomial();
  const auto& fc = g.fully_commutative();
  const bool simply_laced = g.graph().max_bond() <= 3;
  Scan scan("monomial-vs-canonical", ws, fc.size());
  std::vector<ElementId> differing;
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (ic.column(fc[i]) == mono.column(fc[i])) continue;
    differing.push_back(fc[i]);
    if (simply_laced) {
      json f;
      f["w"] = g.word_string(fc[i]);
      f["canonical"] = coords_to_json(g, ic.column(fc[i]));
      f["monomial"] = coords_to_json(g, mono.column(fc[i]));
      scan.fail(i, std::move(f));
    }
  }
  if (!simply_laced && differing.empty()) {
    json f;
    f["reason"] = "graph is not simply laced but c_w = b_w for every w";
    scan.fail(0, std::move(f));
  }
  scan.report().stats["simply_laced"] = simply_laced;
  scan.report().stats["differing"] = word_list(g, differing);
  return scan.finish();
}

CheckReport check_engine(Workspace& ws) {
  const auto& g = ws.group();
  const auto& hecke = ws.hecke();
  const auto& tl = ws.tl();
  const auto& kl = ws.kl();
  const auto& ic = ws.ic();
  const auto& fc = g.fully_commutative();
  Scan scan("engine", ws, g.size() + fc.size());
  auto fail = [&](std::size_t i, const char* side, ElementId w, const std::string& reason) {
    json f;
    f["side"] = side;
    f["w"] = g.word_string(w);
    f["reason"] = reason;
    scan.fail(i, std::move(f));
  };

  const std::vector<HeckeElt> bar_T = bar_of_basis(hecke);
  parallel_for(g.size(), ws.options().jobs, [&](std::size_t i) {
    const auto w = static_cast<ElementId>(i);
    const HeckeElt c = kl_basis(hecke, kl, w);
    scan.observe(i, max_abs(kl.p().column(w)));
    HeckeElt bar_c;
    for (const auto& [x, a] : c) bar_c.add_scaled(a.bar(), bar_T[x]);
    if (bar_c != c) fail(i, "hecke", w, "C'_w is not bar-invariant");
    if (auto defect = triangularity_defect(g, kl.p(), w)) fail(i, "hecke", w, *defect);
  });
  parallel_for(fc.size(), ws.options().jobs, [&](std::size_t i) {
    const ElementId w = fc[i];
    const TLElt c = from_standard_coords(g, ic.column(w));
    scan.observe(g.size() + i, max_abs(ic.column(w)));
    if (tl.bar(c) != c) fail(g.size() + i, "tl", w, "c_w is not bar-invariant");
    if (auto defect = triangularity_defect(g, ic, w)) fail(g.size() + i, "tl", w, *defect);
  });

  std::vector<ElementId> all(g.size());
  for (ElementId w = 0; w < g.size(); ++w) all[w] = w;
  const KLTable kl_other = kl_table(hecke, reversed_levels(g, all));
  for (ElementId w = 0; w < g.size(); ++w)
    if (kl_other.p().column(w) != kl.p().column(w)) fail(w, "hecke", w, "column depends on the linear extension");
  const TriangularTable ic_other = ic_basis_tl(tl, reversed_levels(g, fc));
  for (std::size_t i = 0; i < fc.size(); ++i)
    if (ic_other.column(fc[i]) != ic.column(fc[i])) fail(g.size() + i, "tl", fc[i], "column depends on the linear extension");
  return scan.finish();
}

CheckReport check_b_rewrite(Workspace& ws, std::size_t samples, int max_length, unsigned seed) {
  const auto& g = ws.group();
  const auto& tl = ws.tl();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length_dist(0, max_length);
  std::uniform_int_distribution<int> letter_dist(0, g.rank() - 1);
  std::vector<Word> words(samples);
  for (auto& word : words) {
    word.resize(static_cast<std::size_t>(length_dist(rng)));
    for (auto& s : word) s = static_cast<Generator>(letter_dist(rng));
  }
  Scan scan("b-rewrite", ws, samples);
  parallel_for(samples, ws.options().jobs, [&](std::size_t i) {
    const BProduct r = b_product_reduce(g, words[i]);
    const TLElt rewritten = expand(tl, r);
    const TLElt direct = tl.b_word(words[i]);
    scan.observe(i, max_abs(direct.coords()));
    if (rewritten != direct) {
      json f;
      f["word"] = format_word(words[i]);
      f["product"] = bproduct_json(g, r);
      f["rewritten"] = coords_to_json(g, rewritten.coords());
      f["direct"] = coords_to_json(g, direct.coords());
      scan.fail(i, std::move(f));
    }
  });
  scan.report().stats["seed"] = seed;
  scan.report().stats["max_word_length"] = max_length;
  return scan.finish();
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "projection", "lattice", "kernel",  "positivity", "b-bound", "deletion", "monomial-vs-canonical",
      "engine",     "b-rewrite"};
  return names;
}

CheckReport run_check(Workspace& ws, const std::string& name) {
  static const std::map<std::string, std::function<CheckReport(Workspace&)>> table = {
      {"projection", check_projection},
      {"lattice", check_lattice},
      {"kernel", check_kernel},
      {"positivity", check_positivity},
      {"b-bound", check_b_bound},
      {"deletion", [](Workspace& w) { return check_deletion(w); }},
      {"monomial-vs-canonical", check_monomial_vs_canonical},
      {"engine", check_engine},
      {"b-rewrite", [](Workspace& w) { return check_b_rewrite(w); }},
  };
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown check: " + name);
  return it->second(ws);
}

}  // namespace hecketl
