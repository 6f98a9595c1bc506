#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli_commands.hpp"
#include "cli_config.hpp"

namespace {

using srrel::cli::Settings;

struct Flags {
    std::map<std::string, std::optional<std::string>> values;
    std::optional<std::string> config;
    bool skip_scan = false;
};

void add_flag(CLI::App* sub, Flags& flags, const std::string& key, const std::string& help)
{
    sub->add_option("--" + key, flags.values[key], help);
}

void add_grid_flags(CLI::App* sub, Flags& flags)
{
    add_flag(sub, flags, "q-max", "end of the q grid (default 8)");
    add_flag(sub, flags, "dq", "q grid step (default 1e-3)");
    add_flag(sub, flags, "out", "output path (stdout when omitted)");
    add_flag(sub, flags, "workers", "worker threads");
    sub->add_option("--config", flags.config, "key = value config file; flags override it");
}

Settings collect(const Flags& flags)
{
    Settings settings;
    if (flags.config) settings = srrel::cli::load_config_file(*flags.config);
    for (const auto& [key, value] : flags.values)
        if (value) settings[key] = *value;
    if (flags.skip_scan) settings["skip-scan"] = "true";
    return settings;
}

}  // namespace

int main(int argc, char** argv)
{
    using namespace srrel::cli;

    CLI::App app{"relativistic two-emitter superradiance"};
    app.set_version_flag("--version", SRREL_VERSION);
    app.require_subcommand(1);

    Flags kernel_flags, transient_flags, scan_flags, spectrum_flags, validate_flags;

    auto* kernel = app.add_subcommand("kernel", "coherence kernel over the q grid");
    add_flag(kernel, kernel_flags, "beta", "speed of the relative motion, 0 <= beta < 1");
    add_flag(kernel, kernel_flags, "delta-v", "velocity separation in c Gamma0/omega0 units");
    add_grid_flags(kernel, kernel_flags);

    auto* transient = app.add_subcommand("transient", "density-operator transient and emission rate");
    add_flag(transient, transient_flags, "beta", "speed, 0 <= beta < 1");
    add_flag(transient, transient_flags, "delta-v", "velocity separation");
    add_grid_flags(transient, transient_flags);

    auto* scan = app.add_subcommand("scan", "coherence metric over a delta-v grid");
    add_flag(scan, scan_flags, "beta", "speed, 0 <= beta < 1");
    add_flag(scan, scan_flags, "delta-v-min", "first delta-v (0 is prepended when positive)");
    add_flag(scan, scan_flags, "delta-v-max", "last delta-v");
    add_flag(scan, scan_flags, "delta-v-step", "delta-v spacing");
    add_grid_flags(scan, scan_flags);

    auto* spectrum = app.add_subcommand("spectrum", "single-emitter line shape around the Doppler peak");
    add_flag(spectrum, spectrum_flags, "beta", "speed, 0 <= beta < 1");
    add_flag(spectrum, spectrum_flags, "theta", "observation polar angle in [0, pi]");
    add_flag(spectrum, spectrum_flags, "phi", "observation azimuth in [0, 2 pi)");
    add_flag(spectrum, spectrum_flags, "orientation", "dipole orientation: parallel | perpendicular");
    add_flag(spectrum, spectrum_flags, "polarization", "photon polarization: theta | phi");
    add_flag(spectrum, spectrum_flags, "linewidth-ratio", "Gamma0/omega0 (default 1e-3)");
    add_flag(spectrum, spectrum_flags, "omega-window", "half window in half-widths (default 10)");
    add_flag(spectrum, spectrum_flags, "omega-points", "samples (default 2001)");
    add_flag(spectrum, spectrum_flags, "out", "output path (stdout when omitted)");
    spectrum->add_option("--config", spectrum_flags.config, "key = value config file");

    auto* validate = app.add_subcommand("validate", "run every invariant check and report JSON");
    add_flag(validate, validate_flags, "tol", "ODE oracle tolerance (default 1e-6)");
    validate->add_flag("--skip-scan", validate_flags.skip_scan, "skip the three FWHM scans");
    add_grid_flags(validate, validate_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (*kernel) return cmd_kernel(resolve(collect(kernel_flags)), std::cout);
        if (*transient) return cmd_transient(resolve(collect(transient_flags)), std::cout);
        if (*scan) return cmd_scan(resolve(collect(scan_flags)), std::cout, std::cerr);
        if (*spectrum) return cmd_spectrum(resolve(collect(spectrum_flags)), std::cout);
        if (*validate) return cmd_validate(resolve(collect(validate_flags)), std::cout);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const std::exception& e) {
        // numerical failures: quadrature budget, ODE blow-up, unbracketed half maximum
        std::cerr << "error: " << e.what() << '\n';
        return kValidationFailure;
    }
    return kBadInput;
}
