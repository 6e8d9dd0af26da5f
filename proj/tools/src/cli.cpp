#include "hecketl_cli/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hecketl/verify.hpp"

namespace hecketl::cli {

using json = nlohmann::ordered_json;

namespace {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string descents_string(const GroupTable& g, GeneratorSet set) {
  Word letters;
  for (int s = 0; s < g.rank(); ++s)
    if (contains(set, static_cast<Generator>(s))) letters.push_back(static_cast<Generator>(s));
  return letters.empty() ? "-" : format_word(letters);
}

std::string coords_string(const GroupTable& g, const Coords& coords) {
  std::string out;
  for (const auto& [x, c] : coords) {
    if (!out.empty()) out += ", ";
    out += g.word_string(x) + ": " + c.to_string();
  }
  return out;
}

int run_group(Workspace& ws, const RunConfig& config, std::ostream& out) {
  const auto& g = ws.group();
  if (config.format == Format::json) {
    json doc;
    doc["graph"] = g.graph().to_json();
    doc["order"] = g.size();
    doc["fc_count"] = g.fully_commutative().size();
    doc["max_length"] = g.max_length();
    if (config.list) {
      auto rows = json::array();
      for (ElementId w = 0; w < g.size(); ++w) {
        json row;
        row["w"] = g.word_string(w);
        row["length"] = g.length(w);
        row["fully_commutative"] = g.is_fully_commutative(w);
        row["right_descents"] = descents_string(g, g.right_descents(w));
        rows.push_back(std::move(row));
      }
      doc["elements"] = std::move(rows);
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "graph " << g.graph().name() << ": |W| = " << g.size() << ", |W_c| = " << g.fully_commutative().size()
      << ", max length " << g.max_length() << '\n';
  if (config.list) {
    out << std::left << std::setw(6) << "id" << std::setw(24) << "word" << std::setw(8) << "length" << std::setw(4)
        << "fc"
        << "descents\n";
    for (ElementId w = 0; w < g.size(); ++w)
      out << std::left << std::setw(6) << w << std::setw(24) << g.word_string(w) << std::setw(8) << g.length(w)
          << std::setw(4) << (g.is_fully_commutative(w) ? "y" : "n") << descents_string(g, g.right_descents(w)) << '\n';
  }
  return kExitOk;
}

void print_table(const GroupTable& g, const TriangularTable& table, const std::string& label, std::ostream& out) {
  for (auto w : table.indices()) out << label << "(" << g.word_string(w) << ") = " << coords_string(g, table.column(w)) << '\n';
}

int run_kl(Workspace& ws, const RunConfig& config, std::ostream& out) {
  const auto& g = ws.group();
  const auto& kl = ws.kl();
  if (config.format == Format::json) {
    out << table_to_json(g, kl.p(), "kl").dump(2) << '\n';
    return kExitOk;
  }
  out << "# C'_w in the basis v^-l(x) T_x\n";
  print_table(g, kl.p(), "C'", out);
  return kExitOk;
}

int run_tl(Workspace& ws, const RunConfig& config, std::ostream& out) {
  const auto& g = ws.group();
  const auto& ic = ws.ic();
  const auto& mono = ws.monomial();
  if (config.format == Format::json) {
    json doc;
    doc["canonical"] = table_to_json(g, ic, "ic");
    doc["monomial"] = table_to_json(g, mono, "monomial");
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "# c_w in the basis v^-l(x) t_x\n";
  print_table(g, ic, "c", out);
  out << "# b_w in the basis v^-l(x) t_x\n";
  print_table(g, mono, "b", out);
  return kExitOk;
}

std::string summary(const CheckReport& r) {
  std::ostringstream os;
  if (r.check == "positivity") {
    os << r.stats.value("negative_coefficients", std::size_t{0}) << " negative coefficients in " << r.scanned
       << " products";
  } else if (r.check == "kernel") {
    os << "ideal rank " << r.stats["ideal_rank"].get<std::size_t>() << ", kernel dimension "
       << r.stats["kernel_dimension"].get<std::size_t>() << ", kernel KL elements " << r.stats["kernel_kl"].dump()
       << (r.stats["spanned_by_kl"].get<bool>() ? ", spanned" : ", not spanned");
  } else if (r.check == "monomial-vs-canonical") {
    os << r.stats["differing"].size() << " of " << r.scanned << " elements with c_w != b_w";
  } else {
    os << r.scanned << " elements checked";
  }
  os << ", max |coefficient| " << r.stats["max_abs_coefficient"].dump();
  return os.str();
}

int run_checks(Workspace& ws, const RunConfig& config, std::ostream& out) {
  std::vector<CheckReport> reports;
  for (const auto& target : config.targets) reports.push_back(run_check(ws, target == "lemma-2-1-3" ? "b-bound" : target));
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
  if (config.format == Format::json) {
    if (reports.size() == 1) {
      out << reports.front().to_json(config.timing).dump(2) << '\n';
    } else {
      auto arr = json::array();
      for (const auto& r : reports) arr.push_back(r.to_json(config.timing));
      out << arr.dump(2) << '\n';
    }
    return ok ? kExitOk : kExitCheckFailed;
  }
  for (const auto& r : reports) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.check << " [" << r.graph << "] " << summary(r);
    if (config.timing) out << " (" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms)";
    out << '\n';
    if (!r.passed()) {
      out << "  " << r.failure_count << " failure(s); minimal counterexample:\n";
      out << "  " << r.failures.front().dump() << '\n';
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

void validate(const RunConfig& config) {
  if (config.jobs < 1) throw ConfigError("--jobs must be at least 1");
  if (config.graph.empty()) throw ConfigError("--graph is required");
  if (config.command == Command::verify || config.command == Command::scan) {
    if (config.targets.empty()) throw ConfigError("at least one target is required");
    const auto& allowed = config.command == Command::verify ? verify_targets() : scan_targets();
    for (const auto& t : config.targets)
      if (std::find(allowed.begin(), allowed.end(), t) == allowed.end()) throw ConfigError("unknown target: " + t);
  }
}

}  // namespace

const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> targets = [] {
    auto names = check_names();
    names.push_back("lemma-2-1-3");
    return names;
  }();
  return targets;
}

const std::vector<std::string>& scan_targets() {
  static const std::vector<std::string> targets = {"positivity", "kernel", "monomial-vs-canonical"};
  return targets;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    WorkspaceOptions options;
    options.cap = config.max_order;
    options.jobs = config.jobs;
    if (config.cache_dir) options.cache_dir = *config.cache_dir;
    Workspace ws(parse_graph(config.graph), options);
    switch (config.command) {
      case Command::group:
        return run_group(ws, config, out);
      case Command::kl:
        return run_kl(ws, config, out);
      case Command::tl:
        return run_tl(ws, config, out);
      case Command::verify:
      case Command::scan:
        return run_checks(ws, config, out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const GraphError& e) {
    err << "error: invalid graph: " << e.what() << '\n';
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise --max-order)\n";
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitConfigError;
}

}  // namespace hecketl::cli
