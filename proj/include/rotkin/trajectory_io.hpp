#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "rotkin/propagation.hpp"

namespace rotkin {

// Shortest decimal string that parses back to exactly the same double
// (at most 17 significant digits).
std::string format_real(double x);

// CSV with header `t,r11,r12,r13,r21,r22,r23,r31,r32,r33,orth_defect`,
// row-major matrix entries, LF line endings, format_real() reals.
void write_trajectory_csv(std::ostream& os, const AttitudeTrajectory& traj);

// JSON array of {"t": ..., "R": [[...],[...],[...]], "orth_defect": ...}.
void write_trajectory_json(std::ostream& os, const AttitudeTrajectory& traj);

// Reads the CSV form back (bit-exact thanks to format_real). det_defect is
// recomputed from the parsed matrix. Throws GyroCsvError subclasses on
// malformed input.
AttitudeTrajectory read_trajectory_csv(std::istream& in, FrameId from = kBody,
                                       FrameId to = kWorld);

// Drift report with header `integrator,final_distance_vs_expmap_body,
// max_orth_defect`, one row per integrator in kAllIntegrators order.
void write_compare_csv(std::ostream& os, std::span<const CompareRow> rows);
void write_compare_json(std::ostream& os, std::span<const CompareRow> rows);

}  // namespace rotkin
