#include "ifa/harness/config.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "ifa/errors.hpp"

namespace ifa {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

struct Field {
    const char* section;
    std::string key;
    double scale;  // file value * scale = stored value
    std::function<double&(SimulationConfig&)> ref;
};

const std::vector<Field>& fields()
{
    static const std::vector<Field> table = [] {
        std::vector<Field> t;
        auto scen = [&](std::string key, double scale, auto member) {
            t.push_back({"scenario", key, scale, member});
        };
        scen("lat_deg", kDeg, [](SimulationConfig& c) -> double& { return c.scenario.initial_position.lat; });
        scen("lon_deg", kDeg, [](SimulationConfig& c) -> double& { return c.scenario.initial_position.lon; });
        scen("h_m", 1.0, [](SimulationConfig& c) -> double& { return c.scenario.initial_position.h; });
        scen("duration_s", 1.0, [](SimulationConfig& c) -> double& { return c.scenario.duration; });
        scen("imu_rate_hz", 1.0, [](SimulationConfig& c) -> double& { return c.scenario.imu_rate; });
        scen("interval_s", 1.0, [](SimulationConfig& c) -> double& { return c.scenario.interval; });
        scen("truth_step_s", 1.0, [](SimulationConfig& c) -> double& { return c.scenario.truth_step; });
        scen("roll_deg", kDeg, [](SimulationConfig& c) -> double& { return c.scenario.mean_attitude.roll; });
        scen("pitch_deg", kDeg, [](SimulationConfig& c) -> double& { return c.scenario.mean_attitude.pitch; });
        scen("yaw_deg", kDeg, [](SimulationConfig& c) -> double& { return c.scenario.mean_attitude.yaw; });

        static const std::array<const char*, 3> att = {"roll", "pitch", "yaw"};
        static const std::array<const char*, 3> vel = {"vN", "vU", "vE"};
        for (int i = 0; i < 3; ++i) {
            scen(std::string(att[i]) + "_amp_deg", kDeg, [i](SimulationConfig& c) -> double& { return c.scenario.attitude_wave[i].amplitude; });
            scen(std::string(att[i]) + "_period_s", 1.0, [i](SimulationConfig& c) -> double& { return c.scenario.attitude_wave[i].period; });
            scen(std::string(att[i]) + "_phase_deg", kDeg, [i](SimulationConfig& c) -> double& { return c.scenario.attitude_wave[i].phase; });
        }
        for (int i = 0; i < 3; ++i) {
            scen(std::string(vel[i]) + "_mps", 1.0, [i](SimulationConfig& c) -> double& { return c.scenario.mean_velocity[i]; });
        }
        for (int i = 0; i < 3; ++i) {
            scen(std::string(vel[i]) + "_amp_mps", 1.0, [i](SimulationConfig& c) -> double& { return c.scenario.velocity_wave[i].amplitude; });
            scen(std::string(vel[i]) + "_period_s", 1.0, [i](SimulationConfig& c) -> double& { return c.scenario.velocity_wave[i].period; });
            scen(std::string(vel[i]) + "_phase_deg", kDeg, [i](SimulationConfig& c) -> double& { return c.scenario.velocity_wave[i].phase; });
        }

        auto sens = [&](std::string key, auto member) {
            t.push_back({"sensors", key, 1.0, member});
        };
        sens("gyro_drift_deg_h", [](SimulationConfig& c) -> double& { return c.sensors.gyro_drift; });
        sens("gyro_noise_deg_h_rthz", [](SimulationConfig& c) -> double& { return c.sensors.gyro_noise_psd; });
        sens("accel_bias_ug", [](SimulationConfig& c) -> double& { return c.sensors.accel_bias; });
        sens("accel_noise_ug_rthz", [](SimulationConfig& c) -> double& { return c.sensors.accel_noise_psd; });
        sens("gps_vel_sigma_mps", [](SimulationConfig& c) -> double& { return c.sensors.gps_vel_sigma; });
        sens("gps_pos_sigma_m", [](SimulationConfig& c) -> double& { return c.sensors.gps_pos_sigma; });
        sens("lever_x_m", [](SimulationConfig& c) -> double& { return c.sensors.lever_arm[0]; });
        sens("lever_y_m", [](SimulationConfig& c) -> double& { return c.sensors.lever_arm[1]; });
        sens("lever_z_m", [](SimulationConfig& c) -> double& { return c.sensors.lever_arm[2]; });
        return t;
    }();
    return table;
}

std::string number(double x, int digits)
{
    std::array<char, 40> buf{};
    auto [end, ec] = digits > 0 ? std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                                std::chars_format::general, digits)
                                : std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), end);
}

double parse_number(const std::string& path, const std::string& text)
{
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (first == last || ec != std::errc() || ptr != last) {
        throw InvalidArgument("config key " + path + ": bad number '" + text + "'");
    }
    return v;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t SimulationConfig::hash() const { return fnv1a64(config_text(*this, 12)); }

std::string config_text(const SimulationConfig& cfg, int digits)
{
    auto c = cfg;
    std::ostringstream os;
    const char* section = "";
    for (const auto& f : fields()) {
        if (std::string_view(section) != f.section) {
            section = f.section;
            os << (os.tellp() > 0 ? "\n[" : "[") << section << "]\n";
        }
        os << f.key << " = " << number(f.ref(c) / f.scale, digits) << '\n';
    }
    os << "random_bias = " << (cfg.sensors.random_bias ? "true" : "false") << '\n';
    os << "seed = " << cfg.sensors.rng_seed << '\n';
    return os.str();
}

SimulationConfig parse_config(std::istream& is)
{
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_ini(is, tree);
    } catch (const pt::ini_parser_error& e) {
        throw FormatError(e.message(), e.line());
    }

    SimulationConfig cfg;
    for (const auto& [section, body] : tree) {
        if (section != "scenario" && section != "sensors") {
            throw InvalidArgument("unknown config section [" + section + "]");
        }
        if (!body.data().empty()) {
            throw InvalidArgument("config key '" + section + "' outside a section");
        }
        for (const auto& [key, value] : body) {
            const std::string path = section + "." + key;
            const std::string text = value.get_value<std::string>();
            if (section == "sensors" && key == "random_bias") {
                if (text == "true" || text == "1") {
                    cfg.sensors.random_bias = true;
                } else if (text == "false" || text == "0") {
                    cfg.sensors.random_bias = false;
                } else {
                    throw InvalidArgument("config key " + path + ": expected true or false");
                }
                continue;
            }
            if (section == "sensors" && key == "seed") {
                std::uint64_t seed = 0;
                auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
                if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
                    throw InvalidArgument("config key " + path + ": bad seed '" + text + "'");
                }
                cfg.sensors.rng_seed = seed;
                continue;
            }
            bool found = false;
            for (const auto& f : fields()) {
                if (section == f.section && key == f.key) {
                    f.ref(cfg) = parse_number(path, text) * f.scale;
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw InvalidArgument("unknown config key " + path);
            }
        }
    }
    cfg.scenario.validate();
    cfg.sensors.validate();
    return cfg;
}

SimulationConfig load_config(const std::string& path)
{
    std::ifstream is(path);
    if (!is) {
        throw Error("cannot open config " + path);
    }
    return parse_config(is);
}

}  // namespace ifa
