#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "reglab/core/monomial.hpp"

namespace reglab {

// Degree reverse lexicographic order, optionally refined into a two-block
// elimination order: the eliminated block is compared first (degrevlex on
// those variables), ties are broken by degrevlex on the remaining ones.
class TermOrder {
public:
    TermOrder() = default;
    TermOrder(std::size_t nvars, std::uint32_t eliminate_mask);

    std::size_t nvars() const { return nvars_; }
    std::uint32_t eliminate_mask() const { return elim_; }
    bool is_elimination() const { return elim_ != 0; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (elim_ == 0) return degrevlex(a, b, full_);
        auto c = degrevlex(a, b, elim_);
        if (c != 0) return c;
        return degrevlex(a, b, full_ & ~elim_);
    }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
    std::strong_ordering degrevlex(const Monomial& a, const Monomial& b, std::uint32_t mask) const {
        std::uint32_t da = a.degree_in(mask), db = b.degree_in(mask);
        if (da != db) return da <=> db;
        for (std::size_t i = nvars_; i-- > 0;) {
            if (!(mask >> i & 1u)) continue;
            if (a[i] != b[i]) return b[i] <=> a[i];
        }
        return std::strong_ordering::equal;
    }

    std::size_t nvars_ = 0;
    std::uint32_t elim_ = 0;
    std::uint32_t full_ = 0;
};

struct RingSpec {
    std::uint32_t characteristic = 0;
    std::vector<std::string> variables;
    // Names of the eliminated block; empty means plain degrevlex.
    std::vector<std::string> eliminate;
    // Optional bidegree per variable, carried as metadata.
    std::optional<std::map<std::string, std::pair<int, int>>> bigrading;

    // Throws std::invalid_argument when the spec is malformed.
    void validate() const;
    std::size_t nvars() const { return variables.size(); }
    std::optional<std::size_t> index_of(const std::string& name) const;
    TermOrder order() const;

    // Same variables, order and grading in another characteristic.
    RingSpec with_characteristic(std::uint32_t c) const;
    // Appends a fresh variable and makes it the eliminated block.
    RingSpec with_elimination_variable(const std::string& name) const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

RingSpec make_ring_spec(std::uint32_t characteristic, std::vector<std::string> vars);
RingSpec ring_spec_from_json(const nlohmann::json& j);
nlohmann::json ring_spec_to_json(const RingSpec& spec);
// Accepts either a JSON object or a compact "char:vars" form such as "2:x,y,a,b".
RingSpec parse_ring_argument(const std::string& text);

std::string monomial_to_string(const Monomial& m, const RingSpec& spec);

}  // namespace reglab
