#include "clusel/core/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "clusel/error.hpp"

namespace clusel {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_number(std::string_view cell, double& value) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  if (cell.empty()) return false;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  return ec == std::errc() && ptr == cell.data() + cell.size();
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::FileNotFound, path.string());
  return in;
}

}  // namespace

Dataset parse_dataset(std::istream& in, const CsvOptions& options) {
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  bool header_pending = options.header;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (view.empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    std::size_t col = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t stop = view.find(options.delimiter, start);
      const std::string_view cell =
          trim(view.substr(start, stop == std::string_view::npos ? view.npos : stop - start));
      double v = 0.0;
      if (!parse_number(cell, v)) {
        throw Error(Errc::ParseError, "cannot parse '" + std::string(cell) + "' as a number",
                    line_no, col);
      }
      values.push_back(v);
      ++col;
      if (stop == std::string_view::npos) break;
      start = stop + 1;
    }
    if (rows == 0) {
      cols = col;
    } else if (col != cols) {
      throw Error(Errc::ParseError,
                  "expected " + std::to_string(cols) + " columns, found " + std::to_string(col),
                  line_no);
    }
    ++rows;
  }
  if (rows == 0 || cols == 0) throw Error(Errc::EmptyDataset, "no data rows");
  return Dataset(rows, cols, std::move(values));
}

Dataset load_dataset(const std::filesystem::path& path, const CsvOptions& options) {
  auto in = open_or_throw(path);
  return parse_dataset(in, options);
}

Partition parse_partition(std::istream& in) {
  std::vector<int> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view cell = trim(line);
    if (cell.empty()) continue;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
      throw Error(Errc::ParseError, "cannot parse label '" + std::string(cell) + "'", line_no, 0);
    }
    labels.push_back(v);
  }
  return Partition(std::move(labels));
}

Partition load_partition(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_partition(in);
}

std::string format_double(double value) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

void write_dataset(std::ostream& out, const Dataset& data, char delimiter) {
  for (std::size_t i = 0; i < data.rows(); ++i) {
    for (std::size_t j = 0; j < data.cols(); ++j) {
      if (j > 0) out << delimiter;
      out << format_double(data(i, j));
    }
    out << '\n';
  }
}

void write_partition(std::ostream& out, const Partition& part) {
  for (int label : part.labels()) out << label << '\n';
}

}  // namespace clusel
