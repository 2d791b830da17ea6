#pragma once

#include <array>
#include <string_view>

#include "clusel/core/dataset.hpp"
#include "clusel/indices/score.hpp"

namespace clusel::indices {

inline constexpr std::array<std::string_view, 5> kIndexNames = {"silhouette", "dunn", "sdbw",
                                                                "cdbw", "dbcv"};

/// Evaluates an index by name (case-insensitive; "s_dbw" is accepted for
/// "sdbw"). Throws InvalidArgument for unknown names.
IndexScore compute_index(std::string_view name, const Dataset& data, const Partition& part);

}  // namespace clusel::indices
