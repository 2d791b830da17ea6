#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clusel {

enum class Errc {
  FileNotFound,
  ParseError,
  EmptyDataset,
  ZeroVarianceColumn,
  EmptyCluster,
  LengthMismatch,
  InvalidArgument,
  DegenerateDiameter,
  KTooLarge,
  MissingComplexity,
  DimensionUnsupported,
  DegenerateGeometry,
  NonConvergence,
  SingularShapeMatrix,
  ClusterTooSmall,
  SchemaError,
  DuplicateName,
  UnknownDimension,
  UnknownValue,
  IncompleteAnswers,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library. `row`/`column` are set for parse and
/// schema errors (1-based file line / 0-based column or field index).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::size_t> row = std::nullopt,
        std::optional<std::size_t> column = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> row() const noexcept { return row_; }
  std::optional<std::size_t> column() const noexcept { return column_; }

 private:
  Errc code_;
  std::optional<std::size_t> row_;
  std::optional<std::size_t> column_;
};

}  // namespace clusel
