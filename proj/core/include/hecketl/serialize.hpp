#pragma once

// JSON form of basis tables and a small on-disk cache for them.
//
// A table document looks like
//
//   {"format": "hecketl-table", "version": 1, "kind": "kl",
//    "graph": {"rank": 2, "bonds": [[0, 1, 3]]},
//    "columns": [{"w": "s1", "entries": [["e", [[-1, 1]]], ["s1", [[0, 1]]]]}, ...]}
//
// Columns and entries appear in id order, i.e. by (length, ShortLex word), so
// dumps of the same table are byte-identical.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hecketl/canonical.hpp"

namespace hecketl {

inline constexpr int kTableFormatVersion = 1;

nlohmann::ordered_json table_to_json(const GroupTable& group, const TriangularTable& table, std::string_view kind);

/// Throws std::invalid_argument if the document is malformed, has another
/// version or kind, or was written for a different graph.
TriangularTable table_from_json(const GroupTable& group, const nlohmann::ordered_json& doc, std::string_view kind);

/// Expansion {word: laurent} of a coordinate map, in id order.
nlohmann::ordered_json coords_to_json(const GroupTable& group, const Coords& coords);

/// Tables stored as <dir>/<key>.<kind>.v<version>.json. The key is the graph
/// name for named types and a hash of the bond list otherwise; the stored
/// graph is compared on load, so a hash collision reads as a miss.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const CoxeterGraph& graph, std::string_view kind) const;

  /// nullopt on a missing, stale, or unreadable entry.
  std::optional<TriangularTable> load(const GroupTable& group, std::string_view kind) const;
  /// Writes through a temporary file and renames it into place.
  void store(const GroupTable& group, std::string_view kind, const TriangularTable& table) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace hecketl
