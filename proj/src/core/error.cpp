#include "clusel/error.hpp"

namespace clusel {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::ParseError: return "ParseError";
    case Errc::EmptyDataset: return "EmptyDataset";
    case Errc::ZeroVarianceColumn: return "ZeroVarianceColumn";
    case Errc::EmptyCluster: return "EmptyCluster";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DegenerateDiameter: return "DegenerateDiameter";
    case Errc::KTooLarge: return "KTooLarge";
    case Errc::MissingComplexity: return "MissingComplexity";
    case Errc::DimensionUnsupported: return "DimensionUnsupported";
    case Errc::DegenerateGeometry: return "DegenerateGeometry";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::SingularShapeMatrix: return "SingularShapeMatrix";
    case Errc::ClusterTooSmall: return "ClusterTooSmall";
    case Errc::SchemaError: return "SchemaError";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::UnknownDimension: return "UnknownDimension";
    case Errc::UnknownValue: return "UnknownValue";
    case Errc::IncompleteAnswers: return "IncompleteAnswers";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string decorate(Errc code, const std::string& message,
                     std::optional<std::size_t> row,
                     std::optional<std::size_t> column) {
  std::string out(errc_name(code));
  if (row) {
    out += "(row=" + std::to_string(*row);
    if (column) out += ", column=" + std::to_string(*column);
    out += ")";
  }
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(Errc code, const std::string& message,
             std::optional<std::size_t> row,
             std::optional<std::size_t> column)
    : std::runtime_error(decorate(code, message, row, column)),
      code_(code),
      row_(row),
      column_(column) {}

}  // namespace clusel
