#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "srrel/params.hpp"

namespace srrel::cli {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct ValidationConfig {
    QGrid grid = make_grid();
    double ode_tolerance = 1e-6;
    std::size_t workers = 1;
    bool include_scan = true;  ///< the FWHM checks run three full delta scans
};

/// Every module invariant, evaluated on `grid` where a grid is involved.
std::vector<CheckResult> run_validation(const ValidationConfig& cfg);

/// {"passed": bool, "checks": [{name, measured, tolerance, passed, detail}, ...]}
nlohmann::ordered_json validation_report(const std::vector<CheckResult>& results);

}  // namespace srrel::cli
