#include "hecketl/serialize.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hecketl {

namespace {

constexpr std::string_view kFormatName = "hecketl-table";

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

bool is_plain_name(const std::string& name) {
  if (name.empty() || name == "custom") return false;
  for (unsigned char c : name)
    if (!std::isalnum(c) && c != ':') return false;
  return true;
}

}  // namespace

nlohmann::ordered_json coords_to_json(const GroupTable& group, const Coords& coords) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [x, c] : coords) out.push_back(nlohmann::ordered_json::array({group.word_string(x), to_json(c)}));
  return out;
}

nlohmann::ordered_json table_to_json(const GroupTable& group, const TriangularTable& table, std::string_view kind) {
  nlohmann::ordered_json doc;
  doc["format"] = kFormatName;
  doc["version"] = kTableFormatVersion;
  doc["kind"] = kind;
  doc["graph"] = group.graph().to_json();
  auto columns = nlohmann::ordered_json::array();
  for (auto w : table.indices()) {
    nlohmann::ordered_json col;
    col["w"] = group.word_string(w);
    col["entries"] = coords_to_json(group, table.column(w));
    columns.push_back(std::move(col));
  }
  doc["columns"] = std::move(columns);
  return doc;
}

TriangularTable table_from_json(const GroupTable& group, const nlohmann::ordered_json& doc, std::string_view kind) {
  try {
    if (doc.at("format") != kFormatName) throw std::invalid_argument("not a table document");
    if (doc.at("version") != kTableFormatVersion) throw std::invalid_argument("table format version mismatch");
    if (doc.at("kind") != kind) throw std::invalid_argument("table kind mismatch");
    if (parse_graph(doc.at("graph").dump()) != group.graph()) throw std::invalid_argument("table built for another graph");
    std::vector<ElementId> indices;
    std::vector<Coords> columns;
    for (const auto& col : doc.at("columns")) {
      indices.push_back(group.parse_element(col.at("w").get<std::string>()));
      Coords c;
      for (const auto& e : col.at("entries"))
        accumulate(c, group.parse_element(e.at(0).get<std::string>()), laurent_from_json(e.at(1)));
      columns.push_back(std::move(c));
    }
    for (std::size_t i = 1; i < indices.size(); ++i)
      if (indices[i - 1] >= indices[i]) throw std::invalid_argument("table columns out of order");
    return TriangularTable(std::move(indices), std::move(columns));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed table document: ") + e.what());
  } catch (const GraphError& e) {
    throw std::invalid_argument(std::string("malformed table graph: ") + e.what());
  }
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TableCache::path_for(const CoxeterGraph& graph, std::string_view kind) const {
  std::string key;
  if (is_plain_name(graph.name())) {
    key = graph.name();
    for (auto& c : key)
      if (c == ':') c = '_';
  } else {
    std::ostringstream os;
    os << "g" << std::hex << fnv1a(graph.to_json().dump());
    key = os.str();
  }
  return dir_ / (key + "." + std::string(kind) + ".v" + std::to_string(kTableFormatVersion) + ".json");
}

std::optional<TriangularTable> TableCache::load(const GroupTable& group, std::string_view kind) const {
  std::ifstream in(path_for(group.graph(), kind));
  if (!in) return std::nullopt;
  try {
    return table_from_json(group, nlohmann::ordered_json::parse(in), kind);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void TableCache::store(const GroupTable& group, std::string_view kind, const TriangularTable& table) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(group.graph(), kind);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << table_to_json(group, table, kind).dump() << '\n';
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace hecketl
