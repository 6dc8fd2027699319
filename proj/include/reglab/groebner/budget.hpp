#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace reglab {

struct Budget {
    std::uint64_t max_steps = 10'000'000;
    // Defaults to 4 * (max input degree) + 64 when unset.
    std::optional<int> max_degree;
    // Skip S-pairs above max_degree instead of failing. For homogeneous input the
    // result is a degree-truncated basis: it decides membership up to that degree.
    bool truncate = false;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string kind_, std::uint64_t limit_, std::uint64_t reached_)
        : std::runtime_error("budget exceeded (" + kind_ + "): limit " + std::to_string(limit_) + ", reached " +
                             std::to_string(reached_)),
          kind(std::move(kind_)), limit(limit_), reached(reached_) {}
    std::string kind;
    std::uint64_t limit;
    std::uint64_t reached;
};

struct GbStats {
    std::uint64_t pairs_created = 0;
    std::uint64_t pairs_reduced = 0;
    std::uint64_t zero_reductions = 0;
    std::uint64_t pairs_truncated = 0;
    std::uint64_t reduction_steps = 0;
    int max_pair_degree = 0;
    std::size_t basis_size = 0;
    int max_basis_degree = 0;

    nlohmann::json to_json() const {
        return {{"pairs_created", pairs_created},     {"pairs_reduced", pairs_reduced},
                {"zero_reductions", zero_reductions}, {"pairs_truncated", pairs_truncated},
                {"reduction_steps", reduction_steps}, {"max_pair_degree", max_pair_degree},
                {"basis_size", basis_size},           {"max_basis_degree", max_basis_degree}};
    }
    static GbStats from_json(const nlohmann::json& j) {
        GbStats s;
        s.pairs_created = j.value("pairs_created", 0ull);
        s.pairs_reduced = j.value("pairs_reduced", 0ull);
        s.zero_reductions = j.value("zero_reductions", 0ull);
        s.pairs_truncated = j.value("pairs_truncated", 0ull);
        s.reduction_steps = j.value("reduction_steps", 0ull);
        s.max_pair_degree = j.value("max_pair_degree", 0);
        s.basis_size = j.value("basis_size", std::size_t{0});
        s.max_basis_degree = j.value("max_basis_degree", 0);
        return s;
    }
};

}  // namespace reglab
