#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusel/kb/knowledge_base.hpp"
#include "clusel/profiler/categories.hpp"
#include "clusel/profiler/noise.hpp"

namespace clusel::kb {

struct Criterion {
  std::string dimension;
  std::string value;

  friend bool operator==(const Criterion&, const Criterion&) = default;
};

using Criteria = std::vector<Criterion>;

struct DecisionStep {
  std::string question;
  std::string answer;
  std::string provenance;  // "user" or "profiler: ..."
  bool reconstructed = false;
  Criteria constraints;
};

struct Recommendation {
  std::vector<std::string> candidates;
  std::vector<DecisionStep> decision_path;
  std::vector<std::string> warnings;
};

/// Conjunction of criteria. Enum: equality, except dataset_size where a
/// "both" cell satisfies small and large. Bool: yes/no/true/false. Set: the
/// cell contains the value. Text: case-insensitive substring.
/// A conflicted cell matches if any of its values does; unknown cells never match.
/// Candidates are ordered by scalability (desc), time complexity (asc), name
/// for algorithms and by computational cost (asc), name for indices.
/// Throws UnknownDimension / UnknownValue.
Recommendation filter(const KnowledgeBase& kb, Table table, const Criteria& criteria);
Recommendation filter_algorithms(const KnowledgeBase& kb, const Criteria& criteria);
Recommendation filter_indices(const KnowledgeBase& kb, const Criteria& criteria);

struct Answer {
  std::string value;
  std::string provenance = "user";
};

using Answers = std::map<std::string, Answer>;

struct Question {
  std::string id;
  std::string prompt;
  std::vector<std::string> options;
};

/// All questions a tree may ask, in asking order.
const std::vector<Question>& questions(Table table);

/// Normalises an answer for a question id (yes/true/y -> "yes" ...).
/// Throws UnknownDimension for an unknown id, UnknownValue for a bad answer.
std::string normalise_answer(Table table, const std::string& question, const std::string& answer);

/// The first question on the path the answers do not cover yet.
std::optional<Question> next_question(Table table, const Answers& answers);

/// Walks the tree and filters on the conjunction of the path's constraints.
/// Throws IncompleteAnswers naming the first unanswered question.
Recommendation decision_tree(const KnowledgeBase& kb, Table table, const Answers& answers);
Recommendation decision_tree_algorithms(const KnowledgeBase& kb, const Answers& answers);
Recommendation decision_tree_indices(const KnowledgeBase& kb, const Answers& answers);

struct ProfileFacts {
  std::optional<profiler::SizeCategory> size;
  std::optional<profiler::DimensionCategory> dimension;
  std::optional<profiler::NoiseVerdict> noise;
  std::optional<bool> convex;
};

/// Fills data-derived questions of `table`'s tree that the user left open.
/// Existing answers win.
void autofill(Table table, Answers& answers, const ProfileFacts& facts);

}  // namespace clusel::kb
