#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rotkin/sweep.hpp"

namespace rotkin {

// Outcome of one randomized property sweep. A property passes when its worst
// observed defect stays at or below the pinned threshold.
struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  double max_defect = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::size_t worst_index = 0;
  std::string worst_case;  // inputs of the worst case, filled on failure
};

// Names of all properties in suite order.
std::vector<std::string> property_names();

// Runs a single property by name. Throws InvalidInputError for an unknown
// name. Results are a pure function of (name, seed); exec only chooses how
// the cases are scheduled.
PropertyResult run_property(std::string_view name, std::uint64_t seed, Execution exec);

// Runs the full suite in suite order.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed, Execution exec);

// Deterministic plain-text report: one pass/fail line per property with the
// worst defect, then a summary line. Byte-identical for identical inputs.
void write_property_report(std::ostream& os, std::span<const PropertyResult> results,
                           std::uint64_t seed, Execution exec);

bool all_passed(std::span<const PropertyResult> results);

// Per-case defect evaluators exposed for the benchmark target.
double four_formula_case_defect(std::uint64_t seed, std::size_t index);
double conjugation_case_defect(std::uint64_t seed, std::size_t index);

}  // namespace rotkin
