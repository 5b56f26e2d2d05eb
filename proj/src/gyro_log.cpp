#include "rotkin/gyro_log.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>
#include <vector>

namespace rotkin {

namespace {

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

double parse_field(const std::string& field, std::size_t line_no, const char* column) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw CsvParseError("line " + std::to_string(line_no) + ": cannot parse " + column +
                            " value '" + field + "'",
                        line_no);
  }
  if (!std::isfinite(value)) {
    throw CsvParseError(
        "line " + std::to_string(line_no) + ": non-finite " + column + " value", line_no);
  }
  return value;
}

}  // namespace

std::vector<GyroSample> parse_gyro_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  // Header must be exactly t,wx,wy,wz.
  if (!std::getline(in, line)) {
    throw CsvFormatError("empty input: expected header 't,wx,wy,wz'", 1);
  }
  ++line_no;
  strip_cr(line);
  const std::vector<std::string> header = split_fields(line);
  const std::vector<std::string> expected{"t", "wx", "wy", "wz"};
  if (header != expected) {
    throw CsvFormatError("line 1: expected header 't,wx,wy,wz', got '" + line + "'", 1);
  }

  std::vector<GyroSample> samples;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (trim(line).empty()) {
      if (in.peek() == std::char_traits<char>::eof()) break;  // trailing blank line
      throw CsvParseError("line " + std::to_string(line_no) + ": blank line inside data",
                          line_no);
    }
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 4) {
      throw CsvParseError("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                              std::to_string(fields.size()),
                          line_no);
    }
    const double t = parse_field(fields[0], line_no, "t");
    const Eigen::Vector3d w(parse_field(fields[1], line_no, "wx"),
                            parse_field(fields[2], line_no, "wy"),
                            parse_field(fields[3], line_no, "wz"));
    if (!samples.empty() && !(t > samples.back().t)) {
      throw CsvOrderingError("line " + std::to_string(line_no) +
                                 ": timestamps must be strictly increasing",
                             line_no);
    }
    samples.push_back(GyroSample{t, AngularVelocity{w, kBody}});
  }
  if (samples.empty()) {
    throw CsvFormatError("no data rows after header", line_no + 1);
  }
  return samples;
}

std::vector<GyroSample> ingest_gyro_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw GyroCsvError("cannot open gyro log '" + path.string() + "'", 0);
  }
  return parse_gyro_csv(in);
}

}  // namespace rotkin
