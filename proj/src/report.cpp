#include "latticemap/report.hpp"

#include <chrono>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

#include <json.hpp>

namespace latticemap::cli {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void RunReport::param(const std::string& key, const std::string& value) { parameters.emplace_back(key, value); }

void RunReport::param(const std::string& key, double value) { parameters.emplace_back(key, format_double(value)); }

void RunReport::check(const std::string& name, double value, double tolerance) {
    results.push_back({name, value, tolerance, std::isfinite(value) && value <= tolerance});
}

void RunReport::record(const std::string& name, double value, double tolerance, bool pass) {
    results.push_back({name, value, tolerance, pass});
}

bool RunReport::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string RunReport::to_json(bool with_timestamp) const {
    using json = nlohmann::ordered_json;
    auto num = [](double v) -> json {
        if (std::isfinite(v)) return v;
        return format_double(v);
    };
    json j;
    j["version"] = version;
    j["command"] = command;
    json params = json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = params;
    j["seed"] = seed;
    json res = json::array();
    for (const auto& r : results)
        res.push_back(json{{"name", r.name}, {"value", num(r.value)}, {"tolerance", num(r.tolerance)}, {"pass", r.pass}});
    j["results"] = res;
    j["pass"] = all_pass();
    if (with_timestamp) j["timestamp"] = timestamp;
    return j.dump(2) + "\n";
}

std::string RunReport::to_table() const {
    std::ostringstream os;
    os << command << " (report " << version << ")\n";
    for (const auto& [k, v] : parameters) os << "  " << k << " = " << v << "\n";
    char line[256];
    std::snprintf(line, sizeof line, "  %-36s %14s %10s  %s\n", "check", "value", "tol", "status");
    os << line;
    for (const auto& r : results) {
        std::snprintf(line, sizeof line, "  %-36s %14.6e %10.1e  %s\n", r.name.c_str(), r.value, r.tolerance,
                      r.pass ? "pass" : "FAIL");
        os << line;
    }
    os << "  overall: " << (all_pass() ? "pass" : "FAIL") << "\n";
    return os.str();
}

std::string utc_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace latticemap::cli
