#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freefid/sweep.hpp"

namespace freefid {

// CSV header: mu,gamma,F_dmu,F_dgamma,F_min,det_sign,min_singular,singular_flag
// Real values are printed with 12 significant digits; JSON uses the same
// field names and the same rounding, so both formats are byte-stable.

std::string format_records(std::span<const SweepRecord> records, OutputFormat format);

/// Writes format_records(...) to `path`, or to standard output when `path`
/// is empty. Throws IOError.
void emit_records(std::span<const SweepRecord> records, OutputFormat format, const std::string& path);

std::vector<SweepRecord> parse_records(std::string_view text, OutputFormat format);

/// Boundary traces carry the system size as metadata: a leading
/// "# model=complete-graph size=L" line in CSV, an object with "size" and
/// "points" in JSON.
std::string format_boundary(std::span<const BoundaryPoint> points, int size, OutputFormat format);

void write_text(const std::string& text, const std::string& path);

}  // namespace freefid
