#include "cli_config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace srrel::cli {

namespace {

constexpr std::array kKnownKeys = {
    "beta",  "delta-v",   "q-max",       "dq",           "delta-v-min",
    "delta-v-max", "delta-v-step", "theta", "phi", "orientation",
    "polarization", "linewidth-ratio", "omega-window", "omega-points", "out",
    "workers", "tol", "skip-scan",
};

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, const std::string& value)
{
    double out = 0.0;
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end || !std::isfinite(out))
        throw ConfigError("invalid number for '" + key + "': '" + value + "'");
    return out;
}

std::size_t to_count(const std::string& key, const std::string& value)
{
    std::size_t out = 0;
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) throw ConfigError("invalid count for '" + key + "': '" + value + "'");
    return out;
}

bool to_bool(const std::string& key, const std::string& value)
{
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError("invalid boolean for '" + key + "': '" + value + "'");
}

}  // namespace

bool is_known_key(const std::string& key)
{
    for (const char* k : kKnownKeys)
        if (key == k) return true;
    return false;
}

Settings parse_config_text(const std::string& text, const std::string& origin)
{
    Settings settings;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!is_known_key(key))
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
        if (key == "out" && value.empty())
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty output path");
        settings[key] = value;
    }
    return settings;
}

Settings load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

RunConfig resolve(const Settings& settings)
{
    RunConfig cfg;
    for (const auto& [key, value] : settings) {
        if (key == "beta") cfg.beta = to_double(key, value);
        else if (key == "delta-v") cfg.delta_v = to_double(key, value);
        else if (key == "q-max") cfg.q_max = to_double(key, value);
        else if (key == "dq") cfg.dq = to_double(key, value);
        else if (key == "delta-v-min") cfg.delta_v_min = to_double(key, value);
        else if (key == "delta-v-max") cfg.delta_v_max = to_double(key, value);
        else if (key == "delta-v-step") cfg.delta_v_step = to_double(key, value);
        else if (key == "theta") cfg.theta = to_double(key, value);
        else if (key == "phi") cfg.phi = to_double(key, value);
        else if (key == "linewidth-ratio") cfg.linewidth_ratio = to_double(key, value);
        else if (key == "omega-window") cfg.omega_window = to_double(key, value);
        else if (key == "omega-points") cfg.omega_points = to_count(key, value);
        else if (key == "out") cfg.out = value;
        else if (key == "workers") cfg.workers = to_count(key, value);
        else if (key == "tol") cfg.tol = to_double(key, value);
        else if (key == "skip-scan") cfg.skip_scan = to_bool(key, value);
        else if (key == "orientation") {
            if (value == "parallel") cfg.orientation = DipoleOrientation::parallel;
            else if (value == "perpendicular") cfg.orientation = DipoleOrientation::perpendicular;
            else throw ConfigError("orientation must be 'parallel' or 'perpendicular'");
        } else if (key == "polarization") {
            if (value == "theta") cfg.polarization = Polarization::theta;
            else if (value == "phi") cfg.polarization = Polarization::phi;
            else throw ConfigError("polarization must be 'theta' or 'phi'");
        } else {
            throw ConfigError("unknown key '" + key + "'");
        }
    }

    try {
        make_params(cfg.beta, cfg.delta_v);
        make_grid(cfg.q_max, cfg.dq);
        make_emission_config(cfg.beta, cfg.orientation, cfg.theta, cfg.phi, cfg.linewidth_ratio,
                             cfg.polarization);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (cfg.delta_v_step && !(*cfg.delta_v_step > 0.0)) throw ConfigError("delta-v-step must be positive");
    if (cfg.delta_v_min && !(*cfg.delta_v_min >= 0.0)) throw ConfigError("delta-v-min must be non-negative");
    if (cfg.delta_v_max && !(*cfg.delta_v_max > 0.0)) throw ConfigError("delta-v-max must be positive");
    if (cfg.workers && *cfg.workers == 0) throw ConfigError("workers must be at least 1");
    if (cfg.tol && !(*cfg.tol > 0.0)) throw ConfigError("tol must be positive");
    if (!(cfg.omega_window > 0.0)) throw ConfigError("omega-window must be positive");
    if (cfg.omega_points < 2) throw ConfigError("omega-points must be at least 2");
    return cfg;
}

QGrid grid_of(const RunConfig& cfg) { return make_grid(cfg.q_max, cfg.dq); }

}  // namespace srrel::cli
