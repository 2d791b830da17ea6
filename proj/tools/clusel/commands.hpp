#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "clusel/kb/selection.hpp"

namespace clusel::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kOutputSchemaVersion = 1;

struct Global {
  std::uint64_t seed = 0;
  std::string format = "table";
  std::string kb_path;
};

struct Output {
  Json json;
  std::string table;
};

struct DataOptions {
  std::string path;
  bool header = false;
  char delimiter = ',';
};

struct ProfileOptions {
  DataOptions data;
  std::optional<std::size_t> k;
  bool convexity = false;
  double tau = 0.7;
  std::optional<double> alpha;
  bool pca2d = false;
  std::string dump_boundary;
};

struct RecommendOptions {
  std::optional<DataOptions> data;
  std::optional<std::size_t> k;
  std::string tree = "auto";  // auto, algorithms, indices, both
  kb::Answers algorithm_answers;
  kb::Answers index_answers;
  std::vector<std::string> filters;  // dimension=value
  bool interactive = false;
  std::string answers_file;
  std::string record_file;
};

struct ValidateOptions {
  DataOptions data;
  std::string labels_path;
  std::vector<std::string> indices;
  bool standardize = false;
};

struct RankOptions {
  DataOptions data;
  std::vector<double> k_grid;
};

struct ExportOptions {
  std::string path;
  std::string parity_fixtures;
  std::size_t fixture_count = 20;
};

Output cmd_profile(const Global& g, const ProfileOptions& o);
Output cmd_recommend(const Global& g, RecommendOptions o, std::istream& in, std::ostream& prompts);
Output cmd_validate(const Global& g, const ValidateOptions& o);
Output cmd_rank_complexity(const Global& g, const RankOptions& o);
Output cmd_reproduce_table1(const Global& g, std::size_t n);
Output cmd_export_kb(const Global& g, const ExportOptions& o);

/// Criteria sets with their filter results plus every wizard path, for
/// checking another implementation of the selection engine.
Json parity_fixtures(const kb::KnowledgeBase& kb, std::uint64_t seed, std::size_t count);

/// Assigns `id=value` to the tree that owns the question id.
void add_answer(RecommendOptions& o, const std::string& assignment);

/// 0 success, 1 usage, 2 data, 3 computation.
int exit_code(const std::exception& e);

}  // namespace clusel::cli
