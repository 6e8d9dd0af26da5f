#pragma once

// Executable checks of the projection property and the bounds it rests on.
// Each check scans a set of elements, collects failures in id order (so the
// first failure is Bruhat-minimal among failures), and returns a report.

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hecketl/serialize.hpp"
#include "hecketl/temperley_lieb.hpp"

namespace hecketl {

struct WorkspaceOptions {
  std::size_t cap = kDefaultEnumerationCap;
  int jobs = 1;
  std::optional<std::filesystem::path> cache_dir;
};

/// Group and algebra tables for one graph. The group is enumerated eagerly;
/// everything else is built on first use and then shared read-only, so the
/// accessors are not safe to call concurrently for the first time.
class Workspace {
 public:
  explicit Workspace(const CoxeterGraph& graph, WorkspaceOptions options = {});
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const WorkspaceOptions& options() const { return options_; }
  const GroupTable& group() const { return *group_; }
  const HeckeAlgebra& hecke() const { return *hecke_; }
  const KLTable& kl();
  const TemperleyLieb& tl();
  /// Canonical basis c_w in x-coordinates.
  const TriangularTable& ic();
  /// Monomial basis b_w in x-coordinates.
  const TriangularTable& monomial();
  /// True when the KL or canonical table was read from the cache.
  bool cache_hit() const { return cache_hit_; }

 private:
  std::optional<TriangularTable> cached(std::string_view kind);
  void remember(std::string_view kind, const TriangularTable& table);

  WorkspaceOptions options_;
  std::unique_ptr<GroupTable> group_;
  std::unique_ptr<HeckeAlgebra> hecke_;
  std::optional<KLTable> kl_;
  std::unique_ptr<TemperleyLieb> tl_;
  std::optional<TriangularTable> ic_;
  std::optional<TriangularTable> monomial_;
  bool cache_hit_ = false;
};

inline constexpr std::size_t kMaxReportedFailures = 20;

struct CheckReport {
  std::string check;
  std::string graph;
  std::size_t scanned = 0;
  /// Total number of failures; `failures` keeps the first kMaxReportedFailures.
  std::size_t failure_count = 0;
  std::vector<nlohmann::ordered_json> failures;
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
  double elapsed_ms = 0;

  bool passed() const { return failure_count == 0; }
  /// {"check", "graph", "scanned", "passed", "failure_count", "failures",
  /// "stats", "elapsed_ms"}; timing is left out when `timing` is false so the
  /// output is reproducible byte for byte.
  nlohmann::ordered_json to_json(bool timing = true) const;
};

/// theta(C'_w) = c_w for every fully commutative w.
CheckReport check_projection(Workspace& ws);
/// theta(v^-l(w) T_w) and theta(C'_w) lie in the lattice L for every w.
CheckReport check_lattice(Workspace& ws);
/// ker(theta) equals the ideal J, has rank |W| - |W_c|, and is spanned by the
/// C'_w it contains.
CheckReport check_kernel(Workspace& ws);
/// Every structure constant of the canonical basis lies in N[v, v^-1].
CheckReport check_positivity(Workspace& ws);
/// b_w b_s = a q_c^m b_w' with m <= 1, l(w's) < l(w'), and m = 0 whenever w
/// has a right descent not commuting with s.
CheckReport check_b_bound(Workspace& ws);
/// Subsequences of length k of the tower normal form of w reduce with
/// m <= l(w) - k, for every w with l(w) <= max_length.
CheckReport check_deletion(Workspace& ws, int max_length = 12);
/// c_w = b_w for all w exactly when the graph is simply laced.
CheckReport check_monomial_vs_canonical(Workspace& ws);
/// Bar-fixedness, unitriangularity, and linear-extension independence of the
/// canonical engine on the Hecke and TL sides.
CheckReport check_engine(Workspace& ws);
/// b_product_reduce agrees with multiplying b-generators through theta on
/// `samples` random words of length <= max_length.
CheckReport check_b_rewrite(Workspace& ws, std::size_t samples = 1000, int max_length = 10, unsigned seed = 20240601);

/// Verification target names accepted by run_check.
const std::vector<std::string>& check_names();
/// Throws std::invalid_argument for an unknown name.
CheckReport run_check(Workspace& ws, const std::string& name);

}  // namespace hecketl
