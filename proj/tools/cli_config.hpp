#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "srrel/params.hpp"
#include "srrel/spectrum.hpp"

namespace srrel::cli {

/// Bad user input: unknown keys, unparsable or out-of-range values. Maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File or stream failure. Maps to exit code 3.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kBadInput = 2, kIoFailure = 3 };

/// Raw key/value settings, keyed by long flag name without the leading dashes
/// (e.g. "delta-v-max"). Command-line values are layered over config-file values.
using Settings = std::map<std::string, std::string>;

/// Parses `key = value` lines; '#' starts a comment; blank lines are skipped.
/// Unknown keys are rejected.
Settings parse_config_text(const std::string& text, const std::string& origin = "<config>");
Settings load_config_file(const std::string& path);

/// Every key accepted in a config file or on the command line.
bool is_known_key(const std::string& key);

struct RunConfig {
    double beta = 0.0;
    double delta_v = 0.0;
    double q_max = kDefaultQMax;
    double dq = kDefaultDq;
    std::optional<double> delta_v_min;
    std::optional<double> delta_v_max;
    std::optional<double> delta_v_step;
    double theta = 0.0;
    double phi = 0.0;
    DipoleOrientation orientation = DipoleOrientation::perpendicular;
    Polarization polarization = Polarization::theta;
    double linewidth_ratio = 1e-3;
    double omega_window = 10.0;   ///< spectrum half-window in Lorentzian half-widths
    std::size_t omega_points = 2001;
    std::optional<std::string> out;
    std::optional<std::size_t> workers;
    std::optional<double> tol;
    bool skip_scan = false;
};

/// Converts settings to a typed config and validates every value before any computation.
RunConfig resolve(const Settings& settings);

QGrid grid_of(const RunConfig& cfg);

}  // namespace srrel::cli
