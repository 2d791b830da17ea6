#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clusel/core/dataset.hpp"

namespace clusel::profiler {

/// Symbolic running-time expression over n (samples), m (features) and
/// k (clusters). Grammar: numbers, the three variables, + - * / ^, parentheses
/// and log(...). `log` is base 2 and clamped below at 1 so that expressions
/// stay positive at small arguments. '·' and '×' are accepted for '*'.
class ComplexityExpr {
 public:
  /// Throws ParseError with the 0-based character offset as column.
  static ComplexityExpr parse(std::string_view text);

  double evaluate(double n, double m, double k) const;
  const std::string& text() const noexcept { return text_; }

  struct Node;

 private:
  ComplexityExpr(std::string text, std::shared_ptr<const Node> root)
      : text_(std::move(text)), root_(std::move(root)) {}

  std::string text_;
  std::shared_ptr<const Node> root_;
};

inline constexpr double kDefaultKGrid[] = {2.0, 100.0, 1000.0};

/// One algorithm's recorded running times. Several expressions mean the
/// sources disagree; none means the cell is unknown.
struct ComplexityEntry {
  std::string name;
  std::vector<ComplexityExpr> expressions;
};

struct StepsPerSample {
  std::string name;
  double steps = 0.0;
};

struct VelocityRanking {
  double k = 0.0;
  std::vector<StepsPerSample> ranking;  // ascending steps, ties by name
};

struct VelocityReport {
  std::vector<VelocityRanking> rankings;
  std::vector<std::string> warnings;
};

enum class MissingComplexityPolicy { Fail, Skip };

/// For each k, O(n, m, k) / n per algorithm, sorted ascending. A conflicted
/// entry is ranked by its first expression with a warning. Unknown entries
/// throw MissingComplexity under Fail and become warnings under Skip.
VelocityReport rank_computing_velocity(std::size_t n, std::size_t m,
                                       std::span<const ComplexityEntry> entries,
                                       std::span<const double> k_grid = kDefaultKGrid,
                                       MissingComplexityPolicy policy = MissingComplexityPolicy::Fail);

VelocityReport rank_computing_velocity(const Dataset& data,
                                       std::span<const ComplexityEntry> entries,
                                       std::span<const double> k_grid = kDefaultKGrid,
                                       MissingComplexityPolicy policy = MissingComplexityPolicy::Fail);

}  // namespace clusel::profiler
