#include "cli_commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "csv_writer.hpp"
#include "srrel/coherence.hpp"
#include "srrel/kernel.hpp"
#include "srrel/parallel.hpp"
#include "srrel/spectrum.hpp"
#include "validation.hpp"

namespace srrel::cli {

namespace {

using Clock = std::chrono::steady_clock;

void emit(const RunConfig& cfg, const std::string& content, std::ostream& fallback)
{
    if (cfg.out) {
        write_file(*cfg.out, content);
        return;
    }
    fallback << content;
    if (!fallback) throw IoError("failed to write output stream");
}

std::string grid_field(const QGrid& grid)
{
    return format_number(grid.q_max) + ":" + format_number(grid.dq) + ":" + std::to_string(grid.n);
}

const char* orientation_name(DipoleOrientation o)
{
    return o == DipoleOrientation::parallel ? "parallel" : "perpendicular";
}

const char* polarization_name(Polarization p) { return p == Polarization::theta ? "theta" : "phi"; }

}  // namespace

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.close();
    if (!out) throw IoError("failed writing '" + path + "'");
}

std::string sidecar_path(const std::string& csv_path)
{
    std::filesystem::path p(csv_path);
    p.replace_extension(".json");
    return p.string();
}

int cmd_kernel(const RunConfig& cfg, std::ostream& fallback)
{
    const auto params = make_params(cfg.beta, cfg.delta_v);
    const auto grid = grid_of(cfg);
    KernelTableOptions opts;
    opts.workers = cfg.workers.value_or(1);
    const auto table = build_kernel_table(params, grid, opts);

    std::ostringstream os;
    CsvWriter csv(os);
    csv.metadata("kernel", {{"beta", format_number(params.beta)},
                            {"gamma", format_number(params.gamma)},
                            {"delta_v", format_number(params.delta_v)},
                            {"grid", grid_field(grid)}});
    csv.header({"q", "re_c", "im_c", "abs_c_sq"});
    for (std::size_t j = 0; j < grid.n; ++j) {
        const auto c = table.values[j];
        csv.row({grid.at(j), c.real(), c.imag(), std::norm(c)});
    }
    emit(cfg, os.str(), fallback);
    return kOk;
}

int cmd_transient(const RunConfig& cfg, std::ostream& fallback)
{
    const auto params = make_params(cfg.beta, cfg.delta_v);
    const auto grid = grid_of(cfg);
    KernelTableOptions opts;
    opts.workers = cfg.workers.value_or(1);
    const auto transient = run_transient(params.beta, params.delta_v, grid, opts);

    std::ostringstream os;
    CsvWriter csv(os);
    csv.metadata("transient", {{"beta", format_number(params.beta)},
                               {"gamma", format_number(params.gamma)},
                               {"delta_v", format_number(params.delta_v)},
                               {"grid", grid_field(grid)}});
    csv.header({"q", "rho_ee", "rho_1", "rho_gg", "trace", "rate", "rate_independent"});
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double q = grid.at(j);
        csv.row({q, transient.rho_ee[j], transient.rho_1[j], transient.rho_gg[j], transient.trace[j],
                 transient.rate[j], independent_rate(q)});
    }
    emit(cfg, os.str(), fallback);
    return kOk;
}

std::vector<double> scan_delta_grid(const RunConfig& cfg)
{
    if (!cfg.delta_v_min && !cfg.delta_v_max && !cfg.delta_v_step) return default_delta_grid(cfg.beta);

    const auto fallback = default_delta_grid(cfg.beta);
    const double min = cfg.delta_v_min.value_or(0.0);
    const double max = cfg.delta_v_max.value_or(fallback.back());
    const double step = cfg.delta_v_step.value_or(fallback[1] - fallback[0]);
    if (max < min) throw ConfigError("delta-v-max must not be below delta-v-min");
    auto grid = uniform_delta_grid(min, max, step);
    if (grid.front() != 0.0) grid.insert(grid.begin(), 0.0);
    return grid;
}

int cmd_scan(const RunConfig& cfg, std::ostream& fallback, std::ostream& summary_fallback)
{
    const auto start = Clock::now();
    const auto params = make_params(cfg.beta, 0.0);
    const auto grid = grid_of(cfg);
    const auto deltas = scan_delta_grid(cfg);
    const std::size_t workers = cfg.workers.value_or(available_workers());

    // The half-maximum search may fail after the expensive part; keep the G values regardless.
    auto scan = scan_metric(params.beta, deltas, grid, workers);
    std::optional<std::string> failure;
    try {
        scan.fwhm = 2.0 * half_maximum_crossing(scan.delta_grid, scan.g_values);
    } catch (const HalfMaxNotBracketed& e) {
        failure = e.what();
    }

    std::ostringstream os;
    CsvWriter csv(os);
    csv.metadata("scan", {{"beta", format_number(params.beta)},
                          {"gamma", format_number(params.gamma)},
                          {"delta_v", format_number(deltas.front()) + ":" + format_number(deltas.back()) +
                                          ":" + std::to_string(deltas.size())},
                          {"grid", grid_field(grid)}});
    csv.header({"delta_v", "g"});
    for (std::size_t i = 0; i < deltas.size(); ++i) csv.row({scan.delta_grid[i], scan.g_values[i]});
    emit(cfg, os.str(), fallback);

    nlohmann::ordered_json summary;
    summary["command"] = "scan";
    summary["version"] = SRREL_VERSION;
    summary["inputs"] = {{"beta", params.beta},
                         {"delta_v_min", deltas.front()},
                         {"delta_v_max", deltas.back()},
                         {"delta_v_points", deltas.size()},
                         {"q_max", grid.q_max},
                         {"dq", grid.dq}};
    summary["derived"] = {{"gamma", params.gamma},
                          {"gamma_squared", params.gamma * params.gamma},
                          {"normalization_a", scan.normalization_a}};
    if (failure)
        summary["derived"]["fwhm"] = nullptr;
    else
        summary["derived"]["fwhm"] = scan.fwhm;
    summary["grid"] = {{"q_max", grid.q_max},
                       {"dq", grid.dq},
                       {"n", grid.n},
                       {"time_integral", "trapezoid on [0, q_max]; T -> infinity truncated at q_max"},
                       {"half_maximum", "linear interpolation between bracketing delta samples"}};
    summary["workers"] = workers;
    summary["wall_clock_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
    if (failure) summary["error"] = *failure;

    const std::string text = summary.dump(2) + "\n";
    if (cfg.out)
        write_file(sidecar_path(*cfg.out), text);
    else
        summary_fallback << text;

    if (failure) {
        std::cerr << "srrel scan: " << *failure << '\n';
        return kValidationFailure;
    }
    return kOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& fallback)
{
    const auto emission = make_emission_config(cfg.beta, cfg.orientation, cfg.theta, cfg.phi,
                                               cfg.linewidth_ratio, cfg.polarization);
    const auto samples = sample_spectrum(emission, cfg.omega_window, cfg.omega_points);

    std::ostringstream os;
    CsvWriter csv(os);
    csv.metadata("spectrum", {{"beta", format_number(cfg.beta)},
                              {"gamma", format_number(gamma_from_beta(cfg.beta))},
                              {"delta_v", format_number(0.0)},
                              {"grid", "omega:" + format_number(samples.front().omega_over_omega0) + ":" +
                                           format_number(samples.back().omega_over_omega0) + ":" +
                                           std::to_string(samples.size())},
                              {"theta", format_number(cfg.theta)},
                              {"phi", format_number(cfg.phi)},
                              {"orientation", orientation_name(cfg.orientation)},
                              {"polarization", polarization_name(cfg.polarization)},
                              {"linewidth_ratio", format_number(cfg.linewidth_ratio)},
                              {"doppler_peak", format_number(doppler_peak(cfg.beta, cfg.theta))}});
    csv.header({"omega_over_omega0", "intensity"});
    for (const auto& s : samples) csv.row({s.omega_over_omega0, s.intensity});
    emit(cfg, os.str(), fallback);
    return kOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& fallback)
{
    ValidationConfig vc;
    vc.grid = grid_of(cfg);
    vc.ode_tolerance = cfg.tol.value_or(vc.ode_tolerance);
    vc.workers = cfg.workers.value_or(available_workers());
    vc.include_scan = !cfg.skip_scan;

    const auto start = Clock::now();
    const auto results = run_validation(vc);
    auto report = validation_report(results);
    report["grid"] = {{"q_max", vc.grid.q_max}, {"dq", vc.grid.dq}, {"n", vc.grid.n}};
    report["version"] = SRREL_VERSION;
    report["wall_clock_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();

    emit(cfg, report.dump(2) + "\n", fallback);
    for (const auto& r : results)
        std::cerr << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "  measured=" << r.measured
                  << "  tolerance=" << r.tolerance << '\n';
    return report["passed"].get<bool>() ? kOk : kValidationFailure;
}

}  // namespace srrel::cli
