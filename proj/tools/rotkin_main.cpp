// Command-line frontend: dead-reckons attitude from gyro CSV logs, compares
// integrator drift, and runs the randomized verification suite.
//
// Exit codes: 0 success, 1 usage/config error, 2 input-format error,
// 3 numerical failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotkin/gyro_log.hpp"
#include "rotkin/properties.hpp"
#include "rotkin/trajectory_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInputFormat = 2;
constexpr int kExitNumerical = 3;

struct RunConfig {
  std::string input_path;
  std::string integrator = "expmap-body";
  std::string init_attitude;  // 9 comma-separated reals, row-major; empty = identity
  std::string format = "csv";
  std::string output_path;
  double tolerance = 1e-9;
  std::uint64_t seed = 42;
  bool serial = false;
};

// Parses the --init-attitude flag and validates the matrix. Any problem here
// is a configuration error.
rotkin::RotationMatrix initial_attitude(const RunConfig& cfg) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  if (!cfg.init_attitude.empty()) {
    std::vector<double> values;
    std::stringstream ss(cfg.init_attitude);
    std::string field;
    while (std::getline(ss, field, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(field, &used));
        if (used != field.size()) throw std::invalid_argument(field);
      } catch (const std::exception&) {
        throw CLI::ValidationError("--init-attitude", "cannot parse '" + field + "'");
      }
    }
    if (values.size() != 9) {
      throw CLI::ValidationError("--init-attitude",
                                 "expected 9 comma-separated reals, got " +
                                     std::to_string(values.size()));
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        m(i, j) = values[static_cast<std::size_t>(3 * i + j)];
      }
    }
  }
  try {
    return rotkin::validate_rotation(m, rotkin::kBody, rotkin::kWorld, cfg.tolerance,
                                     cfg.tolerance);
  } catch (const rotkin::Error& e) {
    throw CLI::ValidationError("--init-attitude", e.what());
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw CLI::ValidationError("--output", "cannot open '" + path + "' for writing");
  }
  return out;
}

int run_deadreckon(const RunConfig& cfg) {
  const auto method = rotkin::integrator_from_name(cfg.integrator);
  if (!method) {
    std::cerr << "error: unknown integrator '" << cfg.integrator << "'\n";
    return kExitUsage;
  }
  const rotkin::RotationMatrix r0 = initial_attitude(cfg);
  const std::vector<rotkin::GyroSample> log = rotkin::ingest_gyro_csv(cfg.input_path);
  const rotkin::AttitudeTrajectory traj = rotkin::propagate(r0, log, *method);
  std::ofstream out = open_output(cfg.output_path);
  if (cfg.format == "json") {
    rotkin::write_trajectory_json(out, traj);
  } else {
    rotkin::write_trajectory_csv(out, traj);
  }
  return kExitOk;
}

int run_compare(const RunConfig& cfg) {
  const rotkin::RotationMatrix r0 = initial_attitude(cfg);
  const std::vector<rotkin::GyroSample> log = rotkin::ingest_gyro_csv(cfg.input_path);
  const auto rows = rotkin::compare_integrators(
      r0, log, cfg.serial ? rotkin::Execution::kSerial : rotkin::Execution::kParallel);
  std::ofstream out = open_output(cfg.output_path);
  if (cfg.format == "json") {
    rotkin::write_compare_json(out, rows);
  } else {
    rotkin::write_compare_csv(out, rows);
  }
  return kExitOk;
}

int run_verify(const RunConfig& cfg) {
  const rotkin::Execution exec =
      cfg.serial ? rotkin::Execution::kSerial : rotkin::Execution::kParallel;
  const std::vector<rotkin::PropertyResult> results =
      rotkin::run_property_suite(cfg.seed, exec);
  std::ostringstream report;
  rotkin::write_property_report(report, results, cfg.seed, exec);
  std::cout << report.str();
  if (!cfg.output_path.empty()) {
    std::ofstream out = open_output(cfg.output_path);
    out << report.str();
  }
  return rotkin::all_passed(results) ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frame-tagged rotational kinematics: gyro dead reckoning, integrator drift "
               "comparison, and a randomized verification suite"};
  app.require_subcommand(1);

  RunConfig cfg;

  CLI::App* deadreckon =
      app.add_subcommand("deadreckon", "Integrate a gyro CSV log into an attitude trajectory");
  deadreckon->add_option("--input", cfg.input_path, "Gyro CSV log (header t,wx,wy,wz)")
      ->required();
  deadreckon->add_option("--integrator", cfg.integrator,
                         "euler-raw | euler-reproject | expmap-body | expmap-world");
  deadreckon->add_option("--init-attitude", cfg.init_attitude,
                         "Initial body->world attitude, 9 comma-separated reals (row-major)");
  deadreckon->add_option("--format", cfg.format, "Output format: csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  deadreckon->add_option("--output", cfg.output_path, "Trajectory output path")->required();
  deadreckon->add_option("--tolerance", cfg.tolerance,
                         "Validation tolerance for the initial attitude");

  CLI::App* compare =
      app.add_subcommand("compare", "Run all four integrators and report drift");
  compare->add_option("--input", cfg.input_path, "Gyro CSV log (header t,wx,wy,wz)")
      ->required();
  compare->add_option("--init-attitude", cfg.init_attitude,
                      "Initial body->world attitude, 9 comma-separated reals (row-major)");
  compare->add_option("--format", cfg.format, "Output format: csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  compare->add_option("--output", cfg.output_path, "Drift report output path")->required();
  compare->add_option("--tolerance", cfg.tolerance,
                      "Validation tolerance for the initial attitude");
  compare->add_flag("--serial", cfg.serial, "Run the four integrations serially");

  CLI::App* verify = app.add_subcommand("verify", "Run the randomized property suite");
  verify->add_option("--seed", cfg.seed, "Seed for the randomized sweeps");
  verify->add_option("--output", cfg.output_path, "Also write the report to this path");
  verify->add_flag("--serial", cfg.serial, "Evaluate cases serially");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(deadreckon)) return run_deadreckon(cfg);
    if (app.got_subcommand(compare)) return run_compare(cfg);
    return run_verify(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const rotkin::GyroCsvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputFormat;
  } catch (const rotkin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
