#include "reglab/core/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "reglab/core/field.hpp"

namespace reglab {

TermOrder::TermOrder(std::size_t nvars, std::uint32_t eliminate_mask)
    : nvars_(nvars), elim_(eliminate_mask) {
    if (nvars > kMaxVariables) throw std::invalid_argument("too many variables");
    full_ = nvars == 32 ? ~0u : (1u << nvars) - 1;
    if (elim_ & ~full_) throw std::invalid_argument("elimination block outside the ring");
    if (elim_ == full_) elim_ = 0;
}

void RingSpec::validate() const {
    if (characteristic != 0 && !is_prime(characteristic))
        throw std::invalid_argument("characteristic must be 0 or prime");
    if (variables.empty()) throw std::invalid_argument("ring needs at least one variable");
    if (variables.size() > kMaxVariables)
        throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
            throw std::invalid_argument("bad variable name '" + v + "'");
        for (char c : v)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw std::invalid_argument("bad variable name '" + v + "'");
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
    }
    for (const auto& e : eliminate)
        if (!seen.count(e)) throw std::invalid_argument("eliminated variable '" + e + "' not in ring");
    if (bigrading) {
        for (const auto& [name, bd] : *bigrading)
            if (!seen.count(name)) throw std::invalid_argument("bigrading names unknown variable " + name);
    }
}

std::optional<std::size_t> RingSpec::index_of(const std::string& name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variables.begin());
}

TermOrder RingSpec::order() const {
    std::uint32_t mask = 0;
    for (const auto& e : eliminate) mask |= 1u << *index_of(e);
    return TermOrder(variables.size(), mask);
}

RingSpec RingSpec::with_characteristic(std::uint32_t c) const {
    RingSpec r = *this;
    r.characteristic = c;
    r.validate();
    return r;
}

RingSpec RingSpec::with_elimination_variable(const std::string& name) const {
    RingSpec r = *this;
    r.variables.push_back(name);
    r.eliminate = {name};
    r.bigrading.reset();
    r.validate();
    return r;
}

RingSpec make_ring_spec(std::uint32_t characteristic, std::vector<std::string> vars) {
    RingSpec r;
    r.characteristic = characteristic;
    r.variables = std::move(vars);
    r.validate();
    return r;
}

RingSpec ring_spec_from_json(const nlohmann::json& j) {
    RingSpec r;
    r.characteristic = j.at("char").get<std::uint32_t>();
    r.variables = j.at("vars").get<std::vector<std::string>>();
    if (j.contains("order")) {
        const auto& o = j.at("order");
        if (o.is_string()) {
            if (o.get<std::string>() != "degrevlex")
                throw std::invalid_argument("unknown order " + o.get<std::string>());
        } else {
            r.eliminate = o.at("eliminate").get<std::vector<std::string>>();
        }
    }
    if (j.contains("bigrading")) {
        std::map<std::string, std::pair<int, int>> g;
        for (auto& [k, v] : j.at("bigrading").items()) g[k] = {v.at(0).get<int>(), v.at(1).get<int>()};
        r.bigrading = g;
    }
    r.validate();
    return r;
}

nlohmann::json ring_spec_to_json(const RingSpec& spec) {
    nlohmann::json j;
    j["char"] = spec.characteristic;
    j["vars"] = spec.variables;
    if (spec.eliminate.empty())
        j["order"] = "degrevlex";
    else
        j["order"] = {{"eliminate", spec.eliminate}};
    if (spec.bigrading) {
        nlohmann::json g = nlohmann::json::object();
        for (const auto& [k, v] : *spec.bigrading) g[k] = {v.first, v.second};
        j["bigrading"] = g;
    }
    return j;
}

RingSpec parse_ring_argument(const std::string& text) {
    auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '{') return ring_spec_from_json(nlohmann::json::parse(text));
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("ring must be JSON or 'char:vars'");
    RingSpec r;
    r.characteristic = static_cast<std::uint32_t>(std::stoul(text.substr(0, colon)));
    std::stringstream ss(text.substr(colon + 1));
    std::string v;
    while (std::getline(ss, v, ',')) {
        v.erase(std::remove_if(v.begin(), v.end(), [](unsigned char c) { return std::isspace(c); }), v.end());
        if (!v.empty()) r.variables.push_back(v);
    }
    r.validate();
    return r;
}

std::string monomial_to_string(const Monomial& m, const RingSpec& spec) {
    if (m.is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < spec.nvars(); ++i) {
        if (!m[i]) continue;
        if (!out.empty()) out += '*';
        out += spec.variables[i];
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

}  // namespace reglab
