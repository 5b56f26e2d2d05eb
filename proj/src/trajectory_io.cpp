#include "rotkin/trajectory_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <system_error>

#include <Eigen/LU>
#include <json.hpp>

#include "rotkin/gyro_log.hpp"

namespace rotkin {

std::string format_real(double x) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  if (ec != std::errc{}) {
    throw NumericalError("format_real: conversion failed");
  }
  return std::string(buffer, ptr);
}

namespace {

constexpr char kTrajectoryHeader[] =
    "t,r11,r12,r13,r21,r22,r23,r31,r32,r33,orth_defect";

nlohmann::ordered_json matrix_to_json(const Eigen::Matrix3d& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    rows.push_back({m(i, 0), m(i, 1), m(i, 2)});
  }
  return rows;
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const AttitudeTrajectory& traj) {
  os << kTrajectoryHeader << "\n";
  for (const TrajectoryPoint& p : traj.points()) {
    os << format_real(p.t);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        os << "," << format_real(p.attitude(i, j));
      }
    }
    os << "," << format_real(p.orth_defect) << "\n";
  }
}

void write_trajectory_json(std::ostream& os, const AttitudeTrajectory& traj) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const TrajectoryPoint& p : traj.points()) {
    nlohmann::ordered_json row;
    row["t"] = p.t;
    row["R"] = matrix_to_json(p.attitude);
    row["orth_defect"] = p.orth_defect;
    out.push_back(std::move(row));
  }
  os << out.dump(2) << "\n";
}

namespace {

double parse_real(const std::string& field, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw CsvParseError(
        "line " + std::to_string(line_no) + ": cannot parse value '" + field + "'", line_no);
  }
  return value;
}

}  // namespace

AttitudeTrajectory read_trajectory_csv(std::istream& in, FrameId from, FrameId to) {
  std::string line;
  if (!std::getline(in, line)) {
    throw CsvFormatError("empty input: expected trajectory header", 1);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTrajectoryHeader) {
    throw CsvFormatError("line 1: unexpected trajectory header '" + line + "'", 1);
  }

  AttitudeTrajectory traj(from, to);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (fields.size() != 11) {
      throw CsvParseError("line " + std::to_string(line_no) + ": expected 11 fields, got " +
                              std::to_string(fields.size()),
                          line_no);
    }
    TrajectoryPoint p;
    p.t = parse_real(fields[0], line_no);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        p.attitude(i, j) = parse_real(fields[1 + 3 * i + j], line_no);
      }
    }
    p.orth_defect = parse_real(fields[10], line_no);
    p.det_defect = std::abs(p.attitude.determinant() - 1.0);
    traj.append(p);
  }
  return traj;
}

void write_compare_csv(std::ostream& os, std::span<const CompareRow> rows) {
  os << "integrator,final_distance_vs_expmap_body,max_orth_defect\n";
  for (const CompareRow& row : rows) {
    os << integrator_name(row.integrator) << "," << format_real(row.final_distance) << ","
       << format_real(row.max_orth_defect) << "\n";
  }
}

void write_compare_json(std::ostream& os, std::span<const CompareRow> rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const CompareRow& row : rows) {
    nlohmann::ordered_json entry;
    entry["integrator"] = std::string(integrator_name(row.integrator));
    entry["final_distance_vs_expmap_body"] = row.final_distance;
    entry["max_orth_defect"] = row.max_orth_defect;
    out.push_back(std::move(entry));
  }
  os << out.dump(2) << "\n";
}

}  // namespace rotkin
