#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "clusel/core/dataset.hpp"

namespace clusel {

struct CsvOptions {
  char delimiter = ',';
  bool header = false;
};

/// Parses a numeric CSV. Errors: FileNotFound, ParseError (1-based file line,
/// 0-based column), EmptyDataset.
Dataset load_dataset(const std::filesystem::path& path, const CsvOptions& options = {});
Dataset parse_dataset(std::istream& in, const CsvOptions& options = {});

/// One integer label per line; negative labels are noise.
Partition load_partition(const std::filesystem::path& path);
Partition parse_partition(std::istream& in);

/// Writes values with round-trip precision (%.17g).
void write_dataset(std::ostream& out, const Dataset& data, char delimiter = ',');
void write_partition(std::ostream& out, const Partition& part);

std::string format_double(double value);

}  // namespace clusel
