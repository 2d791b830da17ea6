#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "clusel/profiler/complexity.hpp"

namespace clusel::kb {

inline constexpr int kSchemaVersion = 1;

enum class DimKind { Enum, Bool, Set, Text, Expression };

struct Dimension {
  std::string name;
  DimKind kind;
  std::vector<std::string> allowed;  // Enum and Set only
  bool ordinal = false;              // low < medium < high
};

enum class Table { Algorithms, Indices };

const std::vector<Dimension>& dimensions(Table table);
const Dimension* find_dimension(Table table, std::string_view name);
std::string_view table_name(Table table);

/// bool for Bool, string for Enum/Text/Expression, sorted string list for Set.
using Value = std::variant<bool, std::string, std::vector<std::string>>;

struct SourcedValue {
  Value value;
  std::vector<std::string> sources;

  friend bool operator==(const SourcedValue&, const SourcedValue&) = default;
};

/// No values: unknown. More than one: the sources disagree.
struct Cell {
  std::vector<SourcedValue> values;

  bool unknown() const noexcept { return values.empty(); }
  bool conflicted() const noexcept { return values.size() > 1; }

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// One algorithm or index row; `cells` follows dimensions(table) order.
struct Profile {
  std::string name;
  std::vector<Cell> cells;

  friend bool operator==(const Profile&, const Profile&) = default;
};

struct KnowledgeBase {
  int schema_version = kSchemaVersion;
  std::vector<Profile> algorithms;  // sorted by name
  std::vector<Profile> indices;     // sorted by name

  const std::vector<Profile>& rows(Table table) const {
    return table == Table::Algorithms ? algorithms : indices;
  }
  const Profile* find(Table table, std::string_view name) const;
  const Cell& cell(Table table, const Profile& row, std::string_view dimension) const;

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

/// Throws SchemaError (row = index in its array, column = field index) and
/// DuplicateName (names compare case-insensitively).
KnowledgeBase parse_kb(std::string_view json_text);
KnowledgeBase load_kb(const std::filesystem::path& path);

/// Canonical form: fixed key order, rows sorted by name, two-space indent,
/// trailing newline.
std::string export_kb_string(const KnowledgeBase& kb);
void export_kb(const KnowledgeBase& kb, const std::filesystem::path& path);

/// Directory holding the seed knowledge base installed with the build.
std::filesystem::path default_kb_path();

std::string value_to_string(const Value& v);

/// Algorithm complexity cells as profiler input. Unknown cells give an entry
/// without expressions.
std::vector<profiler::ComplexityEntry> complexity_entries(const KnowledgeBase& kb);

}  // namespace clusel::kb
