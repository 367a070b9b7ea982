#include "srkg/config_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace srkg {

std::string format_double(double v) {
    std::array<char, 32> buf;
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

double parse_double(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    return value;
}

const char* to_string(CouplingMode mode) {
    return mode == CouplingMode::linear ? "linear" : "cornell";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

void set_config_key(PhysicalConfig& cfg, std::string_view key,
                    std::string_view value) {
    if (key == "mode") {
        if (value == "linear")
            cfg.mode = CouplingMode::linear;
        else if (value == "cornell")
            cfg.mode = CouplingMode::cornell;
        else
            throw std::invalid_argument("mode must be linear or cornell, got '" +
                                        std::string(value) + "'");
        return;
    }

    const double v = parse_double(value);
    if (key == "M")
        cfg.M = v;
    else if (key == "e")
        cfg.e = v;
    else if (key == "omega") {
        if (v < 0.0) throw std::invalid_argument("omega must be >= 0");
        cfg.omega = v;
    } else if (key == "Omega")
        cfg.Omega = v;
    else if (key == "B0")
        cfg.B0 = v;
    else if (key == "alpha") {
        if (!(v > 0.0 && v <= 1.0))
            throw std::invalid_argument("alpha must lie in (0, 1], got " +
                                        std::string(value));
        cfg.alpha = v;
    } else if (key == "PhiB")
        cfg.PhiB = v;
    else if (key == "lambda")
        cfg.lambda = v;
    else if (key == "xi1")
        cfg.xi1 = v;
    else if (key == "xi2")
        cfg.xi2 = v;
    else
        throw std::invalid_argument("unknown key '" + std::string(key) + "'");
}

}  // namespace

PhysicalConfig parse_config(std::istream& in, const std::string& name) {
    PhysicalConfig cfg;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::runtime_error(name + ":" + std::to_string(lineno) +
                                     ": expected `key = value`");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::runtime_error(name + ":" + std::to_string(lineno) +
                                     ": expected `key = value`");
        try {
            set_config_key(cfg, key, value);
        } catch (const std::exception& ex) {
            throw std::runtime_error(name + ":" + std::to_string(lineno) +
                                     ": " + ex.what());
        }
    }
    cfg.validate();
    return cfg;
}

PhysicalConfig parse_config_text(const std::string& text,
                                 const std::string& name) {
    std::istringstream in(text);
    return parse_config(in, name);
}

PhysicalConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_config(in, path);
}

void apply_override(PhysicalConfig& cfg, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos)
        throw std::invalid_argument("override must look like key=value, got '" +
                                    std::string(assignment) + "'");
    const std::string_view key = trim(assignment.substr(0, eq));
    const std::string_view value = trim(assignment.substr(eq + 1));
    if (key.empty() || value.empty())
        throw std::invalid_argument("override must look like key=value, got '" +
                                    std::string(assignment) + "'");
    set_config_key(cfg, key, value);
}

std::string render_config(const PhysicalConfig& cfg) {
    std::string out;
    const auto put = [&out](const char* key, double v) {
        out += key;
        out += " = ";
        out += format_double(v);
        out += '\n';
    };
    put("M", cfg.M);
    put("e", cfg.e);
    put("omega", cfg.omega);
    put("Omega", cfg.Omega);
    put("B0", cfg.B0);
    put("alpha", cfg.alpha);
    put("PhiB", cfg.PhiB);
    put("lambda", cfg.lambda);
    put("xi1", cfg.xi1);
    put("xi2", cfg.xi2);
    out += "mode = ";
    out += to_string(cfg.mode);
    out += '\n';
    return out;
}

}  // namespace srkg
