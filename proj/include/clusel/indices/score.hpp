#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clusel::indices {

enum class Direction { HigherBetter, LowerBetter };

std::string_view direction_name(Direction d) noexcept;

/// A single index evaluation. An empty `value` means the index is undefined
/// for this partition; `undefined_reason` then says why.
struct IndexScore {
  std::string name;
  std::optional<double> value;
  Direction direction = Direction::HigherBetter;
  std::string undefined_reason;
  std::vector<std::pair<std::string, std::string>> parameters;

  bool defined() const noexcept { return value.has_value(); }
};

}  // namespace clusel::indices
