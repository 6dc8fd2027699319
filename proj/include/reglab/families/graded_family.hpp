#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include <json.hpp>

#include "reglab/families/expression.hpp"
#include "reglab/monomial/monomial_ideal.hpp"

namespace reglab {

// A sequence of monomial ideals I_0 = R, I_1, I_2, ... given by a rule and
// memoized per index. Copies share the memo.
class GradedFamily {
public:
    using Rule = std::function<MonomialIdeal(unsigned n, const GradedFamily& self)>;

    GradedFamily(std::string kind, RingSpec ring, Rule rule, nlohmann::json description);

    const std::string& kind() const { return kind_; }
    const RingSpec& ring() const { return ring_; }
    const nlohmann::json& description() const { return description_; }

    MonomialIdeal member(unsigned n) const;

private:
    struct Memo {
        std::mutex mu;
        std::map<unsigned, MonomialIdeal> members;
    };
    std::string kind_;
    RingSpec ring_;
    Rule rule_;
    nlohmann::json description_;
    std::shared_ptr<Memo> memo_;
};

GradedFamily powers_family(const MonomialIdeal& I);
GradedFamily closure_powers_family(const MonomialIdeal& I);
GradedFamily symbolic_min_family(const MonomialIdeal& I);
// J^{a(n)} I^n
GradedFamily mixed_family(const MonomialIdeal& J, const MonomialIdeal& I, const GrowthExpr& a);
// I_{a,n} = I_n for n <= a, otherwise the sum of I_{a,i} I_{a,n-i} over 0 < i < n.
GradedFamily truncation_family(const GradedFamily& base, unsigned a);
// n -> integral closure of I_n
GradedFamily closure_family(const GradedFamily& base);
GradedFamily explicit_family(RingSpec ring, std::string name, std::function<MonomialIdeal(unsigned)> rule);

// Presets: "ex-diverge" (param f, default n^2), "distinct-lims", "mprimary-counter",
// "ann-not0" (lifted to k[x,a,b]: (a^5,b^2)^n + (xa) for n even, (x b^{2n}) + (xa) for n odd).
GradedFamily preset_family(const std::string& name, const nlohmann::json& params = nlohmann::json::object());
std::string canonical_preset_name(const std::string& name);

GradedFamily family_from_json(const nlohmann::json& j);

}  // namespace reglab
