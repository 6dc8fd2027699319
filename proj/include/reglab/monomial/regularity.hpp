#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "reglab/monomial/monomial_ideal.hpp"

namespace reglab {

// Graded Betti numbers of R/I: entry (i, j) is beta_{i,j}.
struct BettiTable {
    std::map<std::pair<int, int>, std::uint64_t> entries;

    std::uint64_t at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    int projective_dimension() const;
    // max j - i over nonzero entries; this is reg(R/I).
    int regularity() const;
    std::string to_string() const;
    nlohmann::json to_json() const;
};

class WorkLimitExceeded : public std::runtime_error {
public:
    explicit WorkLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Number of multidegrees scanned by the Koszul-complex method.
inline constexpr std::uint64_t kDefaultBettiCellLimit = 20'000'000;

// beta_{i,b}(I) = dim reduced H_{i-1} of the upper Koszul complex K^b(I),
// homology taken over the field of the given characteristic.
BettiTable betti_numbers(const MonomialIdeal& I, std::uint32_t characteristic = 0,
                         std::uint64_t cell_limit = kDefaultBettiCellLimit);
std::uint64_t betti_cell_count(const MonomialIdeal& I);

// Regularity of the ideal I (= reg(R/I) + 1).
int cm_regularity(const MonomialIdeal& I, std::uint32_t characteristic = 0,
                  std::uint64_t cell_limit = kDefaultBettiCellLimit);

struct RegBracket {
    int lower = 0;
    std::optional<int> upper;
    std::string lower_method;
    std::string upper_method;

    bool exact() const { return upper && *upper == lower; }
    bool valid() const { return !upper || lower <= *upper; }
    std::string to_string() const;
    nlohmann::json to_json() const;
};

// Largest degree of a socle monomial of R/I, if the socle is nonzero.
std::optional<int> monomial_socle_degree_max(const MonomialIdeal& I);

// Upper bound from reg(J + v^q L) <= max(reg J + q - 1, reg(J + L) + q),
// splitting on the hint variables in turn; leaves are computed exactly.
int splitting_upper_bound(const MonomialIdeal& I, const std::vector<std::size_t>& split_vars,
                          std::uint32_t characteristic = 0);

// Bracket for a monomial ideal: socle and generator-degree lower bound,
// splitting upper bound.
RegBracket reg_bracket_splitting(const MonomialIdeal& I, const std::vector<std::size_t>& split_vars,
                                 std::uint32_t characteristic = 0);

}  // namespace reglab
