#include "clusel/kb/knowledge_base.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "clusel/error.hpp"

#ifndef CLUSEL_DATA_DIR
#define CLUSEL_DATA_DIR "data"
#endif

namespace clusel::kb {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const std::vector<std::string> kLevels = {"low", "medium", "high"};

std::vector<Dimension> make_algorithm_dims() {
  return {
      {"taxonomy_class", DimKind::Enum,
       {"partitioning", "hierarchical", "density", "grid", "model", "novel"}},
      {"inputs", DimKind::Text, {}},
      {"needs_k_a_priori", DimKind::Bool, {}},
      {"outputs", DimKind::Text, {}},
      {"dataset_size", DimKind::Enum, {"small", "large", "both"}},
      {"high_dimensional", DimKind::Bool, {}},
      {"handles_noise", DimKind::Bool, {}},
      {"data_types", DimKind::Set, {"numerical", "categorical", "mixed", "spatial", "other"}},
      {"cluster_shape", DimKind::Enum, {"convex", "arbitrary"}},
      {"time_complexity", DimKind::Enum, kLevels, true},
      {"complexity_expr", DimKind::Expression, {}},
      {"input_order_sensitivity", DimKind::Enum, {"insensitive", "moderate", "high"}, true},
      {"scalability", DimKind::Enum, kLevels, true},
      {"implementation_available", DimKind::Bool, {}},
      {"ecosystems", DimKind::Text, {}},
  };
}

std::vector<Dimension> make_index_dims() {
  return {
      {"arbitrary_shape_capability", DimKind::Enum, kLevels, true},
      {"cluster_count_bias", DimKind::Text, {}},
      {"biased", DimKind::Bool, {}},
      {"handles_noise_without_preprocessing", DimKind::Bool, {}},
      {"computational_cost", DimKind::Enum, kLevels, true},
  };
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what,
                               std::optional<std::size_t> row = std::nullopt,
                               std::optional<std::size_t> column = std::nullopt) {
  throw Error(Errc::SchemaError, where + ": " + what, row, column);
}

Value parse_value(const json& j, const Dimension& dim, const std::string& where,
                  std::size_t row, std::size_t col) {
  switch (dim.kind) {
    case DimKind::Bool:
      if (!j.is_boolean()) schema_error(where, "expected a boolean", row, col);
      return j.get<bool>();
    case DimKind::Enum: {
      if (!j.is_string()) schema_error(where, "expected a string", row, col);
      auto s = j.get<std::string>();
      if (std::find(dim.allowed.begin(), dim.allowed.end(), s) == dim.allowed.end()) {
        schema_error(where, "value '" + s + "' not allowed", row, col);
      }
      return s;
    }
    case DimKind::Set: {
      if (!j.is_array() || j.empty()) schema_error(where, "expected a non-empty array", row, col);
      std::set<std::string> items;
      for (const auto& e : j) {
        if (!e.is_string()) schema_error(where, "set members must be strings", row, col);
        auto s = e.get<std::string>();
        if (std::find(dim.allowed.begin(), dim.allowed.end(), s) == dim.allowed.end()) {
          schema_error(where, "value '" + s + "' not allowed", row, col);
        }
        if (!items.insert(s).second) schema_error(where, "repeated member '" + s + "'", row, col);
      }
      return std::vector<std::string>(items.begin(), items.end());
    }
    case DimKind::Text:
    case DimKind::Expression: {
      if (!j.is_string()) schema_error(where, "expected a string", row, col);
      auto s = j.get<std::string>();
      if (dim.kind == DimKind::Expression) {
        try {
          (void)profiler::ComplexityExpr::parse(s);
        } catch (const Error& e) {
          schema_error(where, std::string("bad expression: ") + e.what(), row, col);
        }
      }
      return s;
    }
  }
  return std::string();
}

Cell parse_cell(const json& j, const Dimension& dim, const std::string& where, std::size_t row,
                std::size_t col) {
  if (!j.is_object()) schema_error(where, "cell must be an object", row, col);
  Cell cell;
  if (j.contains("unknown")) {
    if (j.size() != 2 || !j.contains("value") || !j["value"].is_null() ||
        j["unknown"] != json(true)) {
      schema_error(where, "unknown cells are {\"value\": null, \"unknown\": true}", row, col);
    }
    return cell;
  }
  if (j.size() != 1 || !j.contains("values") || !j["values"].is_array() || j["values"].empty()) {
    schema_error(where, "cell needs a non-empty \"values\" array or \"unknown\": true", row, col);
  }
  for (const auto& entry : j["values"]) {
    if (!entry.is_object() || entry.size() != 2 || !entry.contains("value") ||
        !entry.contains("sources")) {
      schema_error(where, "each value is {\"value\", \"sources\"}", row, col);
    }
    SourcedValue sv;
    sv.value = parse_value(entry["value"], dim, where, row, col);
    const auto& sources = entry["sources"];
    if (!sources.is_array() || sources.empty()) {
      schema_error(where, "sources must be a non-empty array", row, col);
    }
    for (const auto& s : sources) {
      if (!s.is_string() || s.get<std::string>().empty()) {
        schema_error(where, "sources must be non-empty strings", row, col);
      }
      sv.sources.push_back(s.get<std::string>());
    }
    for (const auto& prev : cell.values) {
      if (prev.value == sv.value) schema_error(where, "repeated value in one cell", row, col);
    }
    cell.values.push_back(std::move(sv));
  }
  return cell;
}

std::vector<Profile> parse_rows(const json& doc, Table table) {
  const std::string key(table_name(table));
  if (!doc.contains(key) || !doc[key].is_array()) schema_error(key, "missing or not an array");
  const auto& dims = dimensions(table);
  std::vector<Profile> rows;
  std::set<std::string> seen;
  std::size_t r = 0;
  for (const auto& j : doc[key]) {
    const std::string at = key + "[" + std::to_string(r) + "]";
    if (!j.is_object()) schema_error(at, "row must be an object", r);
    if (!j.contains("name") || !j["name"].is_string() || j["name"].get<std::string>().empty()) {
      schema_error(at, "field 'name' missing or empty", r, 0);
    }
    Profile p;
    p.name = j["name"].get<std::string>();
    const std::string where = at + " (" + p.name + ")";
    if (!seen.insert(lower(p.name)).second) {
      throw Error(Errc::DuplicateName, where + ": name appears twice in " + key, r);
    }
    for (const auto& [field, value] : j.items()) {
      if (field == "name") continue;
      if (!find_dimension(table, field)) schema_error(where, "unexpected field '" + field + "'", r);
    }
    for (std::size_t d = 0; d < dims.size(); ++d) {
      const auto& dim = dims[d];
      if (!j.contains(dim.name)) {
        schema_error(where, "field '" + dim.name + "' missing", r, d + 1);
      }
      p.cells.push_back(parse_cell(j[dim.name], dim, where + "." + dim.name, r, d + 1));
    }
    rows.push_back(std::move(p));
    ++r;
  }
  std::sort(rows.begin(), rows.end(),
            [](const Profile& a, const Profile& b) { return a.name < b.name; });
  return rows;
}

ordered_json value_json(const Value& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  return std::get<std::vector<std::string>>(v);
}

ordered_json rows_json(const KnowledgeBase& kb, Table table) {
  const auto& dims = dimensions(table);
  auto rows = kb.rows(table);
  std::sort(rows.begin(), rows.end(),
            [](const Profile& a, const Profile& b) { return a.name < b.name; });
  ordered_json out = ordered_json::array();
  for (const auto& p : rows) {
    ordered_json row;
    row["name"] = p.name;
    for (std::size_t d = 0; d < dims.size(); ++d) {
      const auto& cell = p.cells.at(d);
      ordered_json c;
      if (cell.unknown()) {
        c["value"] = nullptr;
        c["unknown"] = true;
      } else {
        c["values"] = ordered_json::array();
        for (const auto& sv : cell.values) {
          ordered_json e;
          e["value"] = value_json(sv.value);
          e["sources"] = sv.sources;
          c["values"].push_back(std::move(e));
        }
      }
      row[dims[d].name] = std::move(c);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

const std::vector<Dimension>& dimensions(Table table) {
  static const auto algorithms = make_algorithm_dims();
  static const auto indices = make_index_dims();
  return table == Table::Algorithms ? algorithms : indices;
}

const Dimension* find_dimension(Table table, std::string_view name) {
  for (const auto& d : dimensions(table)) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

std::string_view table_name(Table table) {
  return table == Table::Algorithms ? "algorithms" : "indices";
}

const Profile* KnowledgeBase::find(Table table, std::string_view name) const {
  const auto key = lower(name);
  for (const auto& p : rows(table)) {
    if (lower(p.name) == key) return &p;
  }
  return nullptr;
}

const Cell& KnowledgeBase::cell(Table table, const Profile& row, std::string_view dimension) const {
  const auto& dims = dimensions(table);
  for (std::size_t d = 0; d < dims.size(); ++d) {
    if (dims[d].name == dimension) return row.cells.at(d);
  }
  throw Error(Errc::UnknownDimension, std::string(dimension));
}

KnowledgeBase parse_kb(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::SchemaError, std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("document", "top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "schema_version" && key != "algorithms" && key != "indices") {
      schema_error("document", "unexpected field '" + key + "'");
    }
  }
  if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer()) {
    schema_error("document", "integer schema_version missing");
  }
  KnowledgeBase kb;
  kb.schema_version = doc["schema_version"].get<int>();
  if (kb.schema_version != kSchemaVersion) {
    schema_error("document", "schema_version " + std::to_string(kb.schema_version) +
                                 " unsupported, expected " + std::to_string(kSchemaVersion));
  }
  kb.algorithms = parse_rows(doc, Table::Algorithms);
  kb.indices = parse_rows(doc, Table::Indices);
  return kb;
}

KnowledgeBase load_kb(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FileNotFound, path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kb(buf.str());
}

std::string export_kb_string(const KnowledgeBase& kb) {
  ordered_json doc;
  doc["schema_version"] = kb.schema_version;
  doc["algorithms"] = rows_json(kb, Table::Algorithms);
  doc["indices"] = rows_json(kb, Table::Indices);
  return doc.dump(2) + "\n";
}

void export_kb(const KnowledgeBase& kb, const std::filesystem::path& path) {
  const auto text = export_kb_string(kb);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw Error(Errc::IoError, "write failed for " + path.string());
}

std::filesystem::path default_kb_path() {
  return std::filesystem::path(CLUSEL_DATA_DIR) / "seed_kb.json";
}

std::string value_to_string(const Value& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  std::string out;
  for (const auto& s : std::get<std::vector<std::string>>(v)) {
    if (!out.empty()) out += ",";
    out += s;
  }
  return out;
}

std::vector<profiler::ComplexityEntry> complexity_entries(const KnowledgeBase& kb) {
  std::vector<profiler::ComplexityEntry> out;
  for (const auto& p : kb.algorithms) {
    profiler::ComplexityEntry e{p.name, {}};
    for (const auto& sv : kb.cell(Table::Algorithms, p, "complexity_expr").values) {
      e.expressions.push_back(profiler::ComplexityExpr::parse(std::get<std::string>(sv.value)));
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace clusel::kb
