#include "reglab/paperlab/report.hpp"

#include <sstream>

#include "reglab/groebner/cache.hpp"

namespace reglab {

ExperimentReport::ExperimentReport(std::string preset, nlohmann::json params)
    : preset_(std::move(preset)), params_(std::move(params)) {}

bool ExperimentReport::check(std::string id, nlohmann::json expected, nlohmann::json computed, bool pass) {
    assertions_.push_back({std::move(id), std::move(expected), std::move(computed), pass});
    return pass;
}

const Assertion* ExperimentReport::find(const std::string& id) const {
    for (const auto& a : assertions_)
        if (a.id == id) return &a;
    return nullptr;
}

bool ExperimentReport::pass() const {
    for (const auto& a : assertions_)
        if (!a.pass) return false;
    return true;
}

std::string ExperimentReport::input_hash() const {
    return hex64(stable_hash(nlohmann::json{{"preset", preset_}, {"params", params_}}.dump()));
}

std::string ExperimentReport::content_hash() const { return hex64(stable_hash(to_json(false).dump())); }

nlohmann::json ExperimentReport::to_json(bool with_timings) const {
    nlohmann::json as = nlohmann::json::array();
    for (const auto& a : assertions_)
        as.push_back({{"id", a.id}, {"expected", a.expected}, {"computed", a.computed},
                      {"verdict", a.pass ? "pass" : "fail"}});
    nlohmann::json j = {{"version", kReportVersion}, {"preset", preset_},   {"params", params_},
                        {"input_hash", input_hash()}, {"assertions", as}, {"artifacts", artifacts_},
                        {"pass", pass()}};
    if (with_timings) j["timings"] = timings_;
    return j;
}

std::string ExperimentReport::to_text() const {
    std::ostringstream os;
    os << preset_ << ' ' << params_.dump() << '\n';
    for (const auto& a : assertions_)
        os << "  [" << (a.pass ? "pass" : "FAIL") << "] " << a.id << ": expected " << a.expected.dump() << ", computed "
           << a.computed.dump() << '\n';
    os << (pass() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

}  // namespace reglab
