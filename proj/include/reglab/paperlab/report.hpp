#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace reglab {

inline constexpr int kReportVersion = 1;

struct Assertion {
    std::string id;
    nlohmann::json expected;
    nlohmann::json computed;
    bool pass = false;
};

// Timings are kept out of the hashed content so reports compare byte-for-byte.
class ExperimentReport {
public:
    ExperimentReport(std::string preset, nlohmann::json params);

    const std::string& preset() const { return preset_; }
    const nlohmann::json& params() const { return params_; }
    nlohmann::json& artifacts() { return artifacts_; }
    const nlohmann::json& artifacts() const { return artifacts_; }
    const std::vector<Assertion>& assertions() const { return assertions_; }

    bool check(std::string id, nlohmann::json expected, nlohmann::json computed, bool pass);
    void time(const std::string& label, double seconds) { timings_[label] = seconds; }
    const Assertion* find(const std::string& id) const;

    bool pass() const;
    std::string input_hash() const;
    // Hash of the report without timings.
    std::string content_hash() const;
    nlohmann::json to_json(bool with_timings = true) const;
    std::string to_text() const;

private:
    std::string preset_;
    nlohmann::json params_;
    std::vector<Assertion> assertions_;
    nlohmann::json artifacts_ = nlohmann::json::object();
    nlohmann::json timings_ = nlohmann::json::object();
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace reglab
