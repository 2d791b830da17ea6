#include "clusel/kb/selection.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "clusel/error.hpp"

namespace clusel::kb {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::optional<bool> parse_bool(std::string_view text) {
  const auto s = lower(text);
  if (s == "yes" || s == "true" || s == "y" || s == "1") return true;
  if (s == "no" || s == "false" || s == "n" || s == "0") return false;
  return std::nullopt;
}

struct ParsedCriterion {
  const Dimension* dim;
  std::size_t column;
  std::string text;  // normalised
  bool flag = false;
};

ParsedCriterion parse_criterion(Table table, const Criterion& c) {
  const auto& dims = dimensions(table);
  const auto it = std::find_if(dims.begin(), dims.end(),
                               [&](const Dimension& d) { return d.name == c.dimension; });
  if (it == dims.end()) {
    throw Error(Errc::UnknownDimension,
                "'" + c.dimension + "' is not a " + std::string(table_name(table)) + " dimension");
  }
  ParsedCriterion p{&*it, static_cast<std::size_t>(it - dims.begin()), lower(c.value)};
  switch (it->kind) {
    case DimKind::Bool: {
      const auto b = parse_bool(c.value);
      if (!b) throw Error(Errc::UnknownValue, c.dimension + " expects yes/no, got '" + c.value + "'");
      p.flag = *b;
      p.text = *b ? "true" : "false";
      break;
    }
    case DimKind::Enum:
    case DimKind::Set:
      if (std::find(it->allowed.begin(), it->allowed.end(), p.text) == it->allowed.end()) {
        throw Error(Errc::UnknownValue, "'" + c.value + "' is not a value of " + c.dimension);
      }
      break;
    case DimKind::Text:
    case DimKind::Expression:
      if (p.text.empty()) throw Error(Errc::UnknownValue, c.dimension + " needs a search text");
      break;
  }
  return p;
}

bool value_matches(const ParsedCriterion& c, const Value& v) {
  switch (c.dim->kind) {
    case DimKind::Bool:
      return std::get<bool>(v) == c.flag;
    case DimKind::Enum: {
      const auto& s = std::get<std::string>(v);
      if (s == c.text) return true;
      return c.dim->name == "dataset_size" && s == "both" && c.text != "both";
    }
    case DimKind::Set: {
      const auto& items = std::get<std::vector<std::string>>(v);
      return std::find(items.begin(), items.end(), c.text) != items.end();
    }
    case DimKind::Text:
    case DimKind::Expression:
      return lower(std::get<std::string>(v)).find(c.text) != std::string::npos;
  }
  return false;
}

std::string cell_values(const Cell& cell) {
  std::string out;
  for (const auto& sv : cell.values) {
    if (!out.empty()) out += " | ";
    out += value_to_string(sv.value);
  }
  return out;
}

double ordinal(const KnowledgeBase& kb, Table table, const Profile& p, std::string_view dim) {
  const auto& cell = kb.cell(table, p, dim);
  if (cell.unknown()) return std::numeric_limits<double>::quiet_NaN();
  const auto& s = std::get<std::string>(cell.values.front().value);
  if (s == "low") return 0.0;
  if (s == "medium") return 1.0;
  return 2.0;
}

// Sort key: present values first, then by value in the given direction.
bool less_by(double a, double b, bool descending, bool& decided) {
  const bool na = std::isnan(a);
  const bool nb = std::isnan(b);
  decided = true;
  if (na != nb) return nb;
  if (!na && a != b) return descending ? a > b : a < b;
  decided = false;
  return false;
}

void rank(const KnowledgeBase& kb, Table table, std::vector<const Profile*>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [&](const Profile* a, const Profile* b) {
    bool decided = false;
    bool r = false;
    if (table == Table::Algorithms) {
      r = less_by(ordinal(kb, table, *a, "scalability"), ordinal(kb, table, *b, "scalability"),
                  true, decided);
      if (decided) return r;
      r = less_by(ordinal(kb, table, *a, "time_complexity"),
                  ordinal(kb, table, *b, "time_complexity"), false, decided);
      if (decided) return r;
    } else {
      r = less_by(ordinal(kb, table, *a, "computational_cost"),
                  ordinal(kb, table, *b, "computational_cost"), false, decided);
      if (decided) return r;
    }
    return a->name < b->name;
  });
}

// ---- decision trees ----------------------------------------------------

const std::vector<Question>& algorithm_questions() {
  static const std::vector<Question> q = {
      {"k_known", "Is the number of clusters known in advance?", {"yes", "no", "any"}},
      {"convex", "Are the clusters expected to be convex?", {"yes", "no", "any"}},
      {"noise", "Does the data contain noise or outliers?", {"yes", "no", "any"}},
      {"size", "How large is the dataset?", {"small", "medium", "large", "any"}},
      {"high_dim", "Is the data high-dimensional (more than 10 features)?", {"yes", "no", "any"}},
  };
  return q;
}

const std::vector<Question>& index_questions() {
  static const std::vector<Question> q = {
      {"arbitrary_shapes", "Can clusters have arbitrary shapes?", {"yes", "no", "any"}},
      {"noise_preprocessing_ok", "Is removing noise before validation acceptable?",
       {"yes", "no", "any"}},
  };
  return q;
}

const Question& question(Table table, std::string_view id) {
  for (const auto& q : questions(table)) {
    if (q.id == id) return q;
  }
  throw Error(Errc::UnknownDimension, "no question '" + std::string(id) + "'");
}

struct Walk {
  std::vector<DecisionStep> steps;
  std::optional<Question> missing;
};

class Walker {
 public:
  Walker(Table table, const Answers& answers) : table_(table), answers_(answers) {}

  // False when the question is unanswered; the walk stops there.
  bool ask(std::string_view id, std::string& out) {
    const auto it = answers_.find(std::string(id));
    if (it == answers_.end()) {
      walk.missing = question(table_, id);
      return false;
    }
    out = normalise_answer(table_, it->first, it->second.value);
    walk.steps.push_back({it->first, out, it->second.provenance, true, {}});
    return true;
  }

  DecisionStep& last() { return walk.steps.back(); }

  Walk walk;

 private:
  Table table_;
  const Answers& answers_;
};

Walk walk_algorithms(const Answers& answers) {
  Walker w(Table::Algorithms, answers);
  std::string k_known, convex, noise, size, high_dim;

  if (!w.ask("k_known", k_known)) return w.walk;
  if (k_known != "any") w.last().constraints.push_back({"needs_k_a_priori", k_known});
  w.last().reconstructed = k_known != "yes";

  if (!w.ask("convex", convex)) return w.walk;
  if (convex == "yes") w.last().constraints.push_back({"cluster_shape", "convex"});
  if (convex == "no") w.last().constraints.push_back({"cluster_shape", "arbitrary"});
  const bool partitioning = k_known == "yes" && convex == "yes";
  w.last().reconstructed = !partitioning;

  if (partitioning) {
    if (!w.ask("size", size)) return w.walk;
    auto& step = w.last();
    step.constraints.push_back({"taxonomy_class", "partitioning"});
    if (size == "small" || size == "medium") step.constraints.push_back({"dataset_size", "small"});
    if (size == "large") step.constraints.push_back({"dataset_size", "large"});
    step.reconstructed = size == "medium" || size == "any";
    return w.walk;
  }

  if (!w.ask("noise", noise)) return w.walk;
  if (noise == "yes") {
    w.last().constraints.push_back({"handles_noise", "yes"});
    if (k_known == "no" && convex == "no") {
      w.last().constraints.push_back({"taxonomy_class", "density"});
    }
  }

  if (!w.ask("size", size)) return w.walk;
  if (size == "small" || size == "medium") w.last().constraints.push_back({"dataset_size", "small"});
  if (size == "large") w.last().constraints.push_back({"dataset_size", "large"});

  if (!w.ask("high_dim", high_dim)) return w.walk;
  if (high_dim == "yes") w.last().constraints.push_back({"high_dimensional", "yes"});
  return w.walk;
}

Walk walk_indices(const Answers& answers) {
  Walker w(Table::Indices, answers);
  std::string shapes, preprocessing;

  if (!w.ask("arbitrary_shapes", shapes)) return w.walk;
  if (shapes == "yes") w.last().constraints.push_back({"arbitrary_shape_capability", "high"});
  w.last().reconstructed = shapes != "yes";

  if (!w.ask("noise_preprocessing_ok", preprocessing)) return w.walk;
  if (preprocessing == "no") {
    w.last().constraints.push_back({"handles_noise_without_preprocessing", "yes"});
  }
  w.last().reconstructed = !(shapes == "yes" && preprocessing == "no");
  return w.walk;
}

Walk walk(Table table, const Answers& answers) {
  return table == Table::Algorithms ? walk_algorithms(answers) : walk_indices(answers);
}

void fill(Answers& answers, const std::string& id, std::string value, std::string provenance) {
  if (answers.count(id)) return;
  answers[id] = Answer{std::move(value), std::move(provenance)};
}

}  // namespace

Recommendation filter(const KnowledgeBase& kb, Table table, const Criteria& criteria) {
  std::vector<ParsedCriterion> parsed;
  for (const auto& c : criteria) parsed.push_back(parse_criterion(table, c));

  Recommendation rec;
  std::vector<const Profile*> hits;
  for (const auto& row : kb.rows(table)) {
    bool failed = false;
    std::vector<std::string> unknown;
    std::vector<std::string> conflicts;
    for (const auto& c : parsed) {
      const auto& cell = row.cells.at(c.column);
      if (cell.unknown()) {
        unknown.push_back(c.dim->name);
        continue;
      }
      const bool any = std::any_of(cell.values.begin(), cell.values.end(),
                                   [&](const SourcedValue& sv) { return value_matches(c, sv.value); });
      if (!any) {
        failed = true;
        break;
      }
      if (cell.conflicted()) {
        conflicts.push_back(c.dim->name + " has conflicting values (" + cell_values(cell) + ")");
      }
    }
    if (failed) continue;
    if (!unknown.empty()) {
      std::string dims;
      for (const auto& d : unknown) dims += (dims.empty() ? "" : ", ") + d;
      rec.warnings.push_back(row.name + " excluded: unknown " + dims);
      continue;
    }
    for (const auto& c : conflicts) rec.warnings.push_back(row.name + ": " + c + ", matched on any");
    hits.push_back(&row);
  }
  rank(kb, table, hits);
  for (const auto* p : hits) rec.candidates.push_back(p->name);
  if (rec.candidates.empty()) {
    rec.warnings.push_back("no " + std::string(table_name(table)) + " row satisfies every criterion");
  }
  return rec;
}

Recommendation filter_algorithms(const KnowledgeBase& kb, const Criteria& criteria) {
  return filter(kb, Table::Algorithms, criteria);
}

Recommendation filter_indices(const KnowledgeBase& kb, const Criteria& criteria) {
  return filter(kb, Table::Indices, criteria);
}

const std::vector<Question>& questions(Table table) {
  return table == Table::Algorithms ? algorithm_questions() : index_questions();
}

std::string normalise_answer(Table table, const std::string& id, const std::string& answer) {
  const auto& q = question(table, id);
  auto s = lower(answer);
  if (q.options.front() == "yes") {
    if (s == "any" || s == "skip" || s == "unknown") return "any";
    const auto b = parse_bool(s);
    if (!b) throw Error(Errc::UnknownValue, id + " expects yes/no/any, got '" + answer + "'");
    return *b ? "yes" : "no";
  }
  if (std::find(q.options.begin(), q.options.end(), s) == q.options.end()) {
    std::string opts;
    for (const auto& o : q.options) opts += (opts.empty() ? "" : "/") + o;
    throw Error(Errc::UnknownValue, id + " expects " + opts + ", got '" + answer + "'");
  }
  return s;
}

std::optional<Question> next_question(Table table, const Answers& answers) {
  return walk(table, answers).missing;
}

Recommendation decision_tree(const KnowledgeBase& kb, Table table, const Answers& answers) {
  auto w = walk(table, answers);
  if (w.missing) {
    throw Error(Errc::IncompleteAnswers, "question '" + w.missing->id + "' is unanswered");
  }
  Criteria all;
  for (const auto& s : w.steps) all.insert(all.end(), s.constraints.begin(), s.constraints.end());
  auto rec = filter(kb, table, all);
  rec.decision_path = std::move(w.steps);
  return rec;
}

Recommendation decision_tree_algorithms(const KnowledgeBase& kb, const Answers& answers) {
  return decision_tree(kb, Table::Algorithms, answers);
}

Recommendation decision_tree_indices(const KnowledgeBase& kb, const Answers& answers) {
  return decision_tree(kb, Table::Indices, answers);
}

void autofill(Table table, Answers& answers, const ProfileFacts& facts) {
  using profiler::to_string;
  if (table == Table::Indices) {
    if (facts.convex) {
      fill(answers, "arbitrary_shapes", *facts.convex ? "no" : "yes",
           std::string("profiler: convexity is_convex=") + (*facts.convex ? "true" : "false"));
    }
    return;
  }
  if (facts.size) {
    fill(answers, "size", lower(to_string(*facts.size)),
         "profiler: size_category=" + std::string(to_string(*facts.size)));
  }
  if (facts.dimension) {
    fill(answers, "high_dim", *facts.dimension == profiler::DimensionCategory::High ? "yes" : "no",
         "profiler: dimension_category=" + std::string(to_string(*facts.dimension)));
  }
  if (facts.noise && *facts.noise != profiler::NoiseVerdict::Inconclusive) {
    fill(answers, "noise", *facts.noise == profiler::NoiseVerdict::LikelyNoisy ? "yes" : "no",
         "profiler: noise verdict=" + std::string(to_string(*facts.noise)));
  }
  if (facts.convex) {
    fill(answers, "convex", *facts.convex ? "yes" : "no",
         std::string("profiler: convexity is_convex=") + (*facts.convex ? "true" : "false"));
  }
}

}  // namespace clusel::kb
