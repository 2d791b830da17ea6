#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "clusel/core/dataset.hpp"

namespace clusel::profiler {

enum class SizeCategory { Small, Medium, Large };
enum class DimensionCategory { Low, High };

/// SMALL for n <= 50, MEDIUM for n <= 10000, LARGE otherwise.
SizeCategory size_category(std::size_t n) noexcept;
SizeCategory size_category(const Dataset& data) noexcept;

/// LOW for m <= 10, HIGH otherwise.
DimensionCategory dimension_category(std::size_t m) noexcept;
DimensionCategory dimension_category(const Dataset& data) noexcept;

std::string_view to_string(SizeCategory c) noexcept;
std::string_view to_string(DimensionCategory c) noexcept;
std::optional<SizeCategory> parse_size_category(std::string_view text) noexcept;

}  // namespace clusel::profiler
