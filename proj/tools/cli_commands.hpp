#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_config.hpp"

namespace srrel::cli {

/// Each command writes its CSV to cfg.out (or `fallback` when no path is set) and
/// returns an exit code. Library exceptions propagate to the caller.
int cmd_kernel(const RunConfig& cfg, std::ostream& fallback);
int cmd_transient(const RunConfig& cfg, std::ostream& fallback);

/// Also writes a JSON summary next to the CSV (`<out stem>.json`), or to `summary_fallback`
/// when writing to a stream.
int cmd_scan(const RunConfig& cfg, std::ostream& fallback, std::ostream& summary_fallback);
int cmd_spectrum(const RunConfig& cfg, std::ostream& fallback);

/// Runs the validation suite; writes the JSON report. Returns 0 iff every check passes.
int cmd_validate(const RunConfig& cfg, std::ostream& fallback);

/// delta grid for `scan`: explicit min/max/step when given, default_delta_grid otherwise.
/// A grid that does not start at 0 gets 0 prepended (the metric is normalized there).
std::vector<double> scan_delta_grid(const RunConfig& cfg);

/// Path of the JSON sidecar for a CSV path.
std::string sidecar_path(const std::string& csv_path);

/// Writes `content` to `path` or throws IoError.
void write_file(const std::string& path, const std::string& content);

}  // namespace srrel::cli
