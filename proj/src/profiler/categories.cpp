#include "clusel/profiler/categories.hpp"

namespace clusel::profiler {

SizeCategory size_category(std::size_t n) noexcept {
  if (n <= 50) return SizeCategory::Small;
  if (n <= 10000) return SizeCategory::Medium;
  return SizeCategory::Large;
}

SizeCategory size_category(const Dataset& data) noexcept { return size_category(data.rows()); }

DimensionCategory dimension_category(std::size_t m) noexcept {
  return m <= 10 ? DimensionCategory::Low : DimensionCategory::High;
}

DimensionCategory dimension_category(const Dataset& data) noexcept {
  return dimension_category(data.cols());
}

std::string_view to_string(SizeCategory c) noexcept {
  switch (c) {
    case SizeCategory::Small: return "SMALL";
    case SizeCategory::Medium: return "MEDIUM";
    case SizeCategory::Large: return "LARGE";
  }
  return "";
}

std::string_view to_string(DimensionCategory c) noexcept {
  return c == DimensionCategory::Low ? "LOW" : "HIGH";
}

std::optional<SizeCategory> parse_size_category(std::string_view text) noexcept {
  if (text == "SMALL" || text == "small") return SizeCategory::Small;
  if (text == "MEDIUM" || text == "medium") return SizeCategory::Medium;
  if (text == "LARGE" || text == "large") return SizeCategory::Large;
  return std::nullopt;
}

}  // namespace clusel::profiler
