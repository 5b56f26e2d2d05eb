#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "rotkin/propagation.hpp"

namespace rotkin {

// Malformed gyro CSV input. line() is 1-based (the header is line 1);
// 0 means the problem is not tied to a specific line (e.g. unreadable file).
class GyroCsvError : public Error {
 public:
  GyroCsvError(const std::string& what, std::size_t line) : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Missing or reordered header, or no data rows at all.
class CsvFormatError : public GyroCsvError {
 public:
  using GyroCsvError::GyroCsvError;
};

// A field failed to parse as a finite real, or a row has the wrong shape.
class CsvParseError : public GyroCsvError {
 public:
  using GyroCsvError::GyroCsvError;
};

// Timestamps are not strictly increasing.
class CsvOrderingError : public GyroCsvError {
 public:
  using GyroCsvError::GyroCsvError;
};

// Parses a gyro log with header `t,wx,wy,wz`: t in seconds, rates in rad/s,
// body frame, comma-separated with `.` decimals, LF or CRLF line endings.
// Rows must be strictly increasing in t.
std::vector<GyroSample> parse_gyro_csv(std::istream& in);

// parse_gyro_csv over a file; unreadable path raises GyroCsvError.
std::vector<GyroSample> ingest_gyro_csv(const std::filesystem::path& path);

}  // namespace rotkin
