#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "clusel/core/io.hpp"
#include "clusel/error.hpp"
#include "clusel/experiments/table1.hpp"
#include "clusel/geometry/convexity.hpp"
#include "clusel/indices/registry.hpp"
#include "clusel/profiler/categories.hpp"
#include "clusel/profiler/complexity.hpp"
#include "clusel/profiler/noise.hpp"

namespace clusel::cli {
namespace {

Json envelope(const std::string& command) {
  Json j;
  j["schema_version"] = kOutputSchemaVersion;
  j["command"] = command;
  return j;
}

Json number_or_null(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : "undefined"; }

std::string render(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

Dataset read_data(const DataOptions& d) {
  return load_dataset(d.path, CsvOptions{d.delimiter, d.header});
}

kb::KnowledgeBase read_kb(const Global& g) {
  return kb::load_kb(g.kb_path.empty() ? kb::default_kb_path() : std::filesystem::path(g.kb_path));
}

Json score_json(const indices::IndexScore& s) {
  Json j;
  j["name"] = s.name;
  j["value"] = number_or_null(s.value);
  j["direction"] = std::string(indices::direction_name(s.direction));
  if (!s.defined()) j["undefined_reason"] = s.undefined_reason;
  Json params = Json::object();
  for (const auto& [k, v] : s.parameters) params[k] = v;
  j["parameters"] = params;
  return j;
}

Json histogram_json(const profiler::Histogram& h) {
  Json j;
  j["edges"] = h.edges;
  j["counts"] = h.counts;
  return j;
}

Json recommendation_json(const kb::Recommendation& r) {
  Json j;
  j["candidates"] = r.candidates;
  j["decision_path"] = Json::array();
  for (const auto& s : r.decision_path) {
    Json step;
    step["question"] = s.question;
    step["answer"] = s.answer;
    step["provenance"] = s.provenance;
    step["reconstructed"] = s.reconstructed;
    step["constraints"] = Json::array();
    for (const auto& c : s.constraints) {
      step["constraints"].push_back(Json{{"dimension", c.dimension}, {"value", c.value}});
    }
    j["decision_path"].push_back(std::move(step));
  }
  j["warnings"] = r.warnings;
  return j;
}

std::string recommendation_table(const std::string& title, const kb::Recommendation& r) {
  std::string out = title + "\n";
  if (!r.decision_path.empty()) {
    std::vector<std::vector<std::string>> rows{{"  question", "answer", "source", "branch"}};
    for (const auto& s : r.decision_path) {
      rows.push_back({"  " + s.question, s.answer, s.provenance,
                      s.reconstructed ? "reconstructed" : "narrated"});
    }
    out += render(rows);
  }
  out += "  candidates:";
  if (r.candidates.empty()) out += " (none)";
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    out += (i ? ", " : " ") + r.candidates[i];
  }
  out += "\n";
  for (const auto& w : r.warnings) out += "  warning: " + w + "\n";
  return out;
}

Json convexity_json(const geometry::ConvexityReport& r, std::size_t k, bool projected) {
  Json j;
  j["k"] = k;
  j["tau"] = r.tau;
  j["ratio"] = r.ratio;
  j["is_convex"] = r.is_convex;
  j["ratio_definition"] = "boundary_volume / ellipsoid_volume, convex when ratio >= tau";
  j["alpha_rule"] = "smallest alpha giving one region over all points unless --alpha is set";
  j["projected_pca2d"] = projected;
  j["per_cluster"] = Json::array();
  for (const auto& c : r.per_cluster) {
    j["per_cluster"].push_back(Json{{"cluster", c.cluster},
                                    {"size", c.size},
                                    {"ratio", c.ratio},
                                    {"boundary_volume", c.boundary_volume},
                                    {"ellipsoid_volume", c.ellipsoid_volume},
                                    {"alpha", c.alpha},
                                    {"boundary_points", c.shape.boundary_vertices.size()},
                                    {"mvee_iterations", c.mvee_iterations}});
  }
  j["skipped"] = Json::array();
  for (const auto& s : r.skipped) {
    j["skipped"].push_back(Json{{"cluster", s.cluster}, {"size", s.size}, {"reason", s.reason}});
  }
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(Errc::IoError, "write failed for " + path);
}

void write_boundary(const std::string& path, const geometry::ConvexityReport& r) {
  std::ostringstream s;
  for (const auto& c : r.per_cluster) {
    for (std::size_t v : c.shape.boundary_vertices) {
      s << c.cluster;
      for (double x : c.shape.vertices[v]) s << ',' << format_double(x);
      s << '\n';
    }
  }
  write_text(path, s.str());
}

struct Convexity {
  geometry::ConvexityReport report;
  bool projected = false;
};

Convexity run_convexity(const Dataset& data, std::size_t k, std::uint64_t seed, double tau,
                        std::optional<double> alpha, bool pca2d) {
  geometry::ConvexityOptions opts;
  opts.tau = tau;
  opts.alpha = alpha;
  if (pca2d) return {geometry::estimate_convexity_dataset(geometry::project_pca2d(data), k, seed, opts), true};
  return {geometry::estimate_convexity_dataset(data, k, seed, opts), false};
}

}  // namespace

// ---- profile ------------------------------------------------------------

Output cmd_profile(const Global& g, const ProfileOptions& o) {
  const auto data = read_data(o.data);
  Output out{envelope("profile"), ""};
  auto& j = out.json;
  const auto size = profiler::size_category(data);
  const auto dim = profiler::dimension_category(data);
  j["input"] = Json{{"path", o.data.path}, {"rows", data.rows()}, {"cols", data.cols()}};
  j["size_category"] = std::string(profiler::to_string(size));
  j["dimension_category"] = std::string(profiler::to_string(dim));

  std::vector<std::vector<std::string>> rows{{"rows", std::to_string(data.rows())},
                                             {"cols", std::to_string(data.cols())},
                                             {"size_category", std::string(to_string(size))},
                                             {"dimension_category", std::string(to_string(dim))}};
  Json noise;
  try {
    const profiler::NoiseThresholds th;
    const auto r = profiler::noise_assessment(data, g.seed, th);
    noise["ks_statistic"] = r.ks_statistic;
    noise["verdict"] = std::string(to_string(r.verdict));
    noise["method"] = "heuristic: KS distance between distance-to-mean samples before and after "
                      "adding uniform noise";
    noise["thresholds"] = Json{{"clean_at_least", th.clean_at_least},
                               {"noisy_at_most", th.noisy_at_most},
                               {"min_samples", th.min_samples}};
    noise["histogram_original"] = histogram_json(r.hist_original);
    noise["histogram_noised"] = histogram_json(r.hist_noised);
    rows.push_back({"noise_ks_statistic", fmt(r.ks_statistic)});
    rows.push_back({"noise_verdict", std::string(to_string(r.verdict)) + " (heuristic)"});
  } catch (const Error& e) {
    if (e.code() != Errc::ZeroVarianceColumn) throw;
    noise["skipped"] = e.what();
    rows.push_back({"noise_verdict", std::string("skipped: ") + e.what()});
  }
  j["noise"] = noise;

  if (o.k) {
    const auto c = run_convexity(data, *o.k, g.seed, o.tau, o.alpha, o.pca2d);
    j["convexity"] = convexity_json(c.report, *o.k, c.projected);
    rows.push_back({"convexity_ratio", fmt(c.report.ratio)});
    rows.push_back({"is_convex", c.report.is_convex ? "true" : "false"});
    for (const auto& cc : c.report.per_cluster) {
      rows.push_back({"  cluster " + std::to_string(cc.cluster),
                      "n=" + std::to_string(cc.size) + " ratio=" + fmt(cc.ratio) +
                          " V_B=" + fmt(cc.boundary_volume) + " V_E=" + fmt(cc.ellipsoid_volume)});
    }
    for (const auto& s : c.report.skipped) {
      rows.push_back({"  cluster " + std::to_string(s.cluster), "skipped: " + s.reason});
    }
    if (!o.dump_boundary.empty()) write_boundary(o.dump_boundary, c.report);
  }
  out.table = render(rows);
  return out;
}

// ---- recommend ----------------------------------------------------------

void add_answer(RecommendOptions& o, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw Error(Errc::InvalidArgument, "expected question=value, got '" + assignment + "'");
  }
  const auto id = assignment.substr(0, eq);
  const auto value = assignment.substr(eq + 1);
  for (auto table : {kb::Table::Algorithms, kb::Table::Indices}) {
    for (const auto& q : kb::questions(table)) {
      if (q.id != id) continue;
      auto& target = table == kb::Table::Algorithms ? o.algorithm_answers : o.index_answers;
      target[id] = kb::Answer{kb::normalise_answer(table, id, value), "user"};
      return;
    }
  }
  throw Error(Errc::UnknownDimension, "no question '" + id + "'");
}

namespace {

void load_answers_file(RecommendOptions& o) {
  std::ifstream in(o.answers_file);
  if (!in) throw Error(Errc::FileNotFound, o.answers_file);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, o.answers_file + ": " + e.what());
  }
  for (const char* key : {"algorithms", "indices"}) {
    if (!doc.contains(key)) continue;
    if (!doc[key].is_object()) throw Error(Errc::ParseError, std::string(key) + " must be an object");
    for (const auto& [id, value] : doc[key].items()) {
      if (!value.is_string()) throw Error(Errc::ParseError, "answer '" + id + "' must be a string");
      auto& target = std::string(key) == "algorithms" ? o.algorithm_answers : o.index_answers;
      if (!target.count(id)) {
        const auto table = std::string(key) == "algorithms" ? kb::Table::Algorithms : kb::Table::Indices;
        target[id] = kb::Answer{kb::normalise_answer(table, id, value.get<std::string>()), "user"};
      }
    }
  }
}

// Prompts until every question on the path is answered.
void interview(kb::Table table, kb::Answers& answers, std::istream& in, std::ostream& prompts) {
  while (auto q = kb::next_question(table, answers)) {
    std::string opts;
    for (const auto& o : q->options) opts += (opts.empty() ? "" : "/") + o;
    prompts << "[" << q->id << "] " << q->prompt << " (" << opts << "): " << std::flush;
    std::string line;
    if (!std::getline(in, line)) {
      throw Error(Errc::IncompleteAnswers, "input ended before '" + q->id + "' was answered");
    }
    try {
      answers[q->id] = kb::Answer{kb::normalise_answer(table, q->id, line), "user"};
    } catch (const Error& e) {
      prompts << e.what() << "\n";
    }
  }
}

Json user_answers(const kb::Answers& a) {
  Json j = Json::object();
  for (const auto& [id, ans] : a) {
    if (ans.provenance == "user") j[id] = ans.value;
  }
  return j;
}

}  // namespace

Output cmd_recommend(const Global& g, RecommendOptions o, std::istream& in, std::ostream& prompts) {
  const auto kb = read_kb(g);
  if (!o.answers_file.empty()) load_answers_file(o);
  Output out{envelope("recommend"), ""};

  if (!o.filters.empty()) {
    kb::Criteria alg, idx;
    for (const auto& f : o.filters) {
      const auto eq = f.find('=');
      if (eq == std::string::npos) throw Error(Errc::InvalidArgument, "expected dimension=value, got '" + f + "'");
      kb::Criterion c{f.substr(0, eq), f.substr(eq + 1)};
      if (kb::find_dimension(kb::Table::Algorithms, c.dimension)) alg.push_back(c);
      else if (kb::find_dimension(kb::Table::Indices, c.dimension)) idx.push_back(c);
      else throw Error(Errc::UnknownDimension, "'" + c.dimension + "' is not a dimension");
    }
    out.json["mode"] = "filter";
    if (!alg.empty() || o.tree == "algorithms" || o.tree == "both") {
      const auto r = kb::filter_algorithms(kb, alg);
      out.json["algorithms"] = recommendation_json(r);
      out.table += recommendation_table("algorithms", r);
    }
    if (!idx.empty() || o.tree == "indices" || o.tree == "both") {
      const auto r = kb::filter_indices(kb, idx);
      out.json["indices"] = recommendation_json(r);
      out.table += recommendation_table("indices", r);
    }
    return out;
  }

  bool run_alg = o.tree == "algorithms" || o.tree == "both";
  bool run_idx = o.tree == "indices" || o.tree == "both";
  if (o.tree == "auto") {
    run_alg = !o.algorithm_answers.empty() || (o.index_answers.empty());
    run_idx = !o.index_answers.empty() || (o.interactive && o.algorithm_answers.empty());
  } else if (!run_alg && !run_idx) {
    throw Error(Errc::InvalidArgument, "--tree must be auto, algorithms, indices or both");
  }

  if (o.data) {
    const auto data = read_data(*o.data);
    kb::ProfileFacts facts;
    facts.size = profiler::size_category(data);
    facts.dimension = profiler::dimension_category(data);
    try {
      facts.noise = profiler::noise_assessment(data, g.seed).verdict;
    } catch (const Error& e) {
      if (e.code() != Errc::ZeroVarianceColumn) throw;
    }
    if (o.k) facts.convex = run_convexity(data, *o.k, g.seed, 0.7, std::nullopt, data.cols() > 3).report.is_convex;
    kb::autofill(kb::Table::Algorithms, o.algorithm_answers, facts);
    kb::autofill(kb::Table::Indices, o.index_answers, facts);
  }

  out.json["mode"] = "decision_tree";
  Json recorded;
  recorded["schema_version"] = kOutputSchemaVersion;
  if (run_alg) {
    if (o.interactive) interview(kb::Table::Algorithms, o.algorithm_answers, in, prompts);
    const auto r = kb::decision_tree_algorithms(kb, o.algorithm_answers);
    out.json["algorithms"] = recommendation_json(r);
    out.table += recommendation_table("algorithms", r);
    recorded["algorithms"] = user_answers(o.algorithm_answers);
  }
  if (run_idx) {
    if (o.interactive) interview(kb::Table::Indices, o.index_answers, in, prompts);
    const auto r = kb::decision_tree_indices(kb, o.index_answers);
    out.json["indices"] = recommendation_json(r);
    out.table += recommendation_table("indices", r);
    recorded["indices"] = user_answers(o.index_answers);
  }
  if (!o.record_file.empty()) write_text(o.record_file, recorded.dump(2) + "\n");
  return out;
}

// ---- validate -----------------------------------------------------------

Output cmd_validate(const Global&, const ValidateOptions& o) {
  auto data = read_data(o.data);
  const auto part = load_partition(o.labels_path);
  require_aligned(data, part);
  if (o.standardize) data = zscore(data);
  std::vector<std::string> names = o.indices;
  if (names.empty()) names.assign(indices::kIndexNames.begin(), indices::kIndexNames.end());

  Output out{envelope("validate"), ""};
  out.json["input"] = Json{{"data", o.data.path}, {"labels", o.labels_path},
                           {"rows", data.rows()}, {"clusters", part.cluster_count()},
                           {"noise", part.noise_count()}, {"standardized", o.standardize}};
  out.json["scores"] = Json::array();
  std::vector<std::vector<std::string>> rows{{"index", "value", "direction"}};
  for (const auto& name : names) {
    const auto s = indices::compute_index(name, data, part);
    out.json["scores"].push_back(score_json(s));
    rows.push_back({s.name, s.value ? fmt(*s.value) : "undefined (" + s.undefined_reason + ")",
                    std::string(indices::direction_name(s.direction))});
  }
  out.table = render(rows);
  return out;
}

// ---- rank-complexity ----------------------------------------------------

Output cmd_rank_complexity(const Global& g, const RankOptions& o) {
  const auto data = read_data(o.data);
  const auto kb = read_kb(g);
  const auto entries = kb::complexity_entries(kb);
  std::vector<double> grid = o.k_grid;
  if (grid.empty()) grid.assign(std::begin(profiler::kDefaultKGrid), std::end(profiler::kDefaultKGrid));
  const auto report = profiler::rank_computing_velocity(data, entries, grid,
                                                        profiler::MissingComplexityPolicy::Skip);
  Output out{envelope("rank-complexity"), ""};
  out.json["n"] = data.rows();
  out.json["m"] = data.cols();
  out.json["rankings"] = Json::array();
  for (const auto& r : report.rankings) {
    Json rk;
    rk["k"] = r.k;
    rk["ranking"] = Json::array();
    out.table += "k = " + fmt(r.k) + "\n";
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < r.ranking.size(); ++i) {
      const auto& e = r.ranking[i];
      rk["ranking"].push_back(Json{{"name", e.name}, {"steps_per_sample", e.steps}});
      rows.push_back({"  " + std::to_string(i + 1), e.name, fmt(e.steps)});
    }
    out.table += render(rows);
    out.json["rankings"].push_back(std::move(rk));
  }
  out.json["warnings"] = report.warnings;
  for (const auto& w : report.warnings) out.table += "warning: " + w + "\n";
  return out;
}

// ---- reproduce ----------------------------------------------------------

Output cmd_reproduce_table1(const Global& g, std::size_t n) {
  const auto r = experiments::reproduce_table1(g.seed, n);
  Output out{envelope("reproduce"), ""};
  out.json["experiment"] = "table1";
  out.json["seed"] = r.seed;
  out.json["n"] = r.n;
  out.json["dataset"] = "generated two-ring stand-in, not the original data";
  out.json["rows"] = Json::array();
  std::vector<std::vector<std::string>> rows{{"partition", "clusters", "silhouette", "s_dbw", "cdbw"}};
  for (const auto& row : r.rows) {
    out.json["rows"].push_back(Json{{"description", row.description},
                                    {"clusters", row.partition.cluster_count()},
                                    {"noise", row.partition.noise_count()},
                                    {"silhouette", number_or_null(row.silhouette.value)},
                                    {"sdbw", number_or_null(row.sdbw.value)},
                                    {"cdbw", number_or_null(row.cdbw.value)}});
    rows.push_back({row.description, std::to_string(row.partition.cluster_count()),
                    fmt(row.silhouette.value), fmt(row.sdbw.value), fmt(row.cdbw.value)});
  }
  out.table = "dataset: generated two-ring stand-in (n=" + std::to_string(r.n) + ", seed " +
              std::to_string(r.seed) + "), not the original data\n" + render(rows) + "\n";
  out.json["checks"] = Json::array();
  for (const auto& c : r.checks) {
    out.json["checks"].push_back(Json{{"id", c.id}, {"description", c.description},
                                      {"passed", c.passed}, {"detail", c.detail}});
    out.table += "(" + c.id + ") " + (c.passed ? "PASS " : "FAIL ") + c.description + " [" +
                 c.detail + "]\n";
  }
  out.json["verdict"] = r.passed ? "PASS" : "FAIL";
  out.table += std::string("ordering verdict: ") + (r.passed ? "PASS" : "FAIL") + "\n";
  return out;
}

// ---- export-kb ----------------------------------------------------------

namespace {

Json criteria_json(const kb::Criteria& c) {
  Json j = Json::array();
  for (const auto& x : c) j.push_back(Json{{"dimension", x.dimension}, {"value", x.value}});
  return j;
}

void enumerate_paths(const kb::KnowledgeBase& kb, kb::Table table, kb::Answers& answers, Json& out) {
  if (auto q = kb::next_question(table, answers)) {
    for (const auto& opt : q->options) {
      answers[q->id] = kb::Answer{opt, "user"};
      enumerate_paths(kb, table, answers, out);
    }
    answers.erase(q->id);
    return;
  }
  Json path;
  path["answers"] = user_answers(answers);
  const auto rec = kb::decision_tree(kb, table, answers);
  const auto body = recommendation_json(rec);
  for (const auto& [k, v] : body.items()) path[k] = v;
  out.push_back(std::move(path));
}

}  // namespace

Json parity_fixtures(const kb::KnowledgeBase& kb, std::uint64_t seed, std::size_t count) {
  Json j;
  j["schema_version"] = kOutputSchemaVersion;
  j["kb_schema_version"] = kb.schema_version;
  j["seed"] = seed;
  j["filters"] = Json::array();
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto table = i % 2 == 0 ? kb::Table::Algorithms : kb::Table::Indices;
    std::vector<const kb::Dimension*> dims;
    for (const auto& d : kb::dimensions(table)) {
      if (d.kind == kb::DimKind::Enum || d.kind == kb::DimKind::Bool || d.kind == kb::DimKind::Set) {
        dims.push_back(&d);
      }
    }
    std::shuffle(dims.begin(), dims.end(), rng);
    const std::size_t take = 1 + static_cast<std::size_t>(rng() % 3);
    kb::Criteria criteria;
    for (std::size_t t = 0; t < take && t < dims.size(); ++t) {
      const auto& d = *dims[t];
      if (d.kind == kb::DimKind::Bool) {
        criteria.push_back({d.name, rng() % 2 ? "yes" : "no"});
      } else {
        criteria.push_back({d.name, d.allowed[rng() % d.allowed.size()]});
      }
    }
    const auto rec = kb::filter(kb, table, criteria);
    Json f;
    f["table"] = std::string(kb::table_name(table));
    f["criteria"] = criteria_json(criteria);
    f["candidates"] = rec.candidates;
    f["warnings"] = rec.warnings;
    j["filters"].push_back(std::move(f));
  }
  j["wizard"] = Json::object();
  for (auto table : {kb::Table::Algorithms, kb::Table::Indices}) {
    Json w;
    w["questions"] = Json::array();
    for (const auto& q : kb::questions(table)) {
      w["questions"].push_back(Json{{"id", q.id}, {"prompt", q.prompt}, {"options", q.options}});
    }
    w["paths"] = Json::array();
    kb::Answers answers;
    enumerate_paths(kb, table, answers, w["paths"]);
    j["wizard"][std::string(kb::table_name(table))] = std::move(w);
  }
  return j;
}

Output cmd_export_kb(const Global& g, const ExportOptions& o) {
  const auto kb = read_kb(g);
  kb::export_kb(kb, o.path);
  Output out{envelope("export-kb"), ""};
  out.json["path"] = o.path;
  out.json["algorithms"] = kb.algorithms.size();
  out.json["indices"] = kb.indices.size();
  out.table = "wrote " + o.path + " (" + std::to_string(kb.algorithms.size()) + " algorithms, " +
              std::to_string(kb.indices.size()) + " indices)\n";
  if (!o.parity_fixtures.empty()) {
    write_text(o.parity_fixtures, parity_fixtures(kb, g.seed, o.fixture_count).dump(2) + "\n");
    out.json["parity_fixtures"] = o.parity_fixtures;
    out.table += "wrote " + o.parity_fixtures + "\n";
  } else {
    out.json["parity_fixtures"] = nullptr;
  }
  return out;
}

int exit_code(const std::exception& e) {
  const auto* err = dynamic_cast<const Error*>(&e);
  if (!err) return 3;
  switch (err->code()) {
    case Errc::InvalidArgument:
    case Errc::KTooLarge:
    case Errc::UnknownDimension:
    case Errc::UnknownValue:
    case Errc::IncompleteAnswers:
      return 1;
    case Errc::FileNotFound:
    case Errc::ParseError:
    case Errc::EmptyDataset:
    case Errc::ZeroVarianceColumn:
    case Errc::LengthMismatch:
    case Errc::EmptyCluster:
    case Errc::SchemaError:
    case Errc::DuplicateName:
    case Errc::IoError:
      return 2;
    default:
      return 3;
  }
}

}  // namespace clusel::cli
