#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace latticemap::cli {

inline constexpr const char* kReportVersion = "1.0";

struct Outcome {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Outcome> results;
    std::uint64_t seed = 0;
    std::string version = kReportVersion;
    std::string timestamp;

    void param(const std::string& key, const std::string& value);
    void param(const std::string& key, double value);
    // pass iff value <= tolerance
    void check(const std::string& name, double value, double tolerance);
    void record(const std::string& name, double value, double tolerance, bool pass);

    bool all_pass() const;
    std::string to_json(bool with_timestamp = true) const;
    std::string to_table() const;
};

std::string utc_timestamp();

// shortest round-trip decimal
std::string format_double(double v);

}  // namespace latticemap::cli
