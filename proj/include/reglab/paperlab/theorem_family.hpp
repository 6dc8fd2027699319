#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reglab/core/field.hpp"
#include "reglab/core/polynomial.hpp"
#include "reglab/monomial/monomial_ideal.hpp"

namespace reglab {

using F2Poly = Polynomial<PrimeField>;

class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// k[x,y,a,b] with degrevlex x > y > a > b.
RingSpec paper_ring_spec(std::uint32_t characteristic = 2);
RingPtr<PrimeField> paper_ring_f2();

// xya + (x^2+y^2)b; over Q the sign of the b-term is negative.
template <class K>
Polynomial<K> paper_f(const RingPtr<K>& R) {
    using P = Polynomial<K>;
    P xya = P::monomial(R, Monomial{1, 1, 1, 0});
    P b_part = P::monomial(R, Monomial{2, 0, 0, 1}) + P::monomial(R, Monomial{0, 2, 0, 1});
    if (R->spec.characteristic == 0) return xya - b_part;
    return xya + b_part;
}

// (x^3, y^3)^e; the zero ideal for e < 0.
MonomialIdeal q_power(const RingSpec& R, int e);

// Q^n generators followed by f^k.
template <class K>
std::vector<Polynomial<K>> paper_input(const RingPtr<K>& R, unsigned n, unsigned k) {
    std::vector<Polynomial<K>> gens;
    const MonomialIdeal Qn = q_power(R->spec, static_cast<int>(n));
    for (const auto& m : Qn.gens()) gens.push_back(Polynomial<K>::monomial(R, m));
    const auto f = paper_f(R);
    if (R->spec.characteristic == 2 && k > 0 && (k & (k - 1)) == 0) {
        unsigned e = 0;
        while ((1u << e) < k) ++e;
        gens.push_back(frobenius_power(f, e));
    } else {
        gens.push_back(power(f, k));
    }
    return gens;
}

enum class TheoremId { TwoPowers, ThreeTimesTwoPower, DoubleOdd, DoubleEven, DoubleSmall };

struct TheoremSpec {
    TheoremId id;
    unsigned n = 0;
    unsigned k = 0;
};

std::string theorem_name(TheoremId id);

// Accepts the canonical names and loose aliases ("gb2powers", "GB_2powers",
// "thm_regbound_2powers", "double2powers", ...). For the double-power family
// without a suffix, the branch is chosen from k. Throws HypothesisError when
// (n, k) is outside the stated range.
TheoremSpec parse_theorem_spec(const std::string& name, unsigned n, std::optional<unsigned> k = std::nullopt);

// The explicit family whose hypotheses cover (n, k), if any.
std::optional<TheoremSpec> theorem_for(unsigned n, unsigned k);

struct TheoremFamily {
    TheoremSpec spec;
    std::vector<F2Poly> gens;
    std::vector<int> type;  // T-index of each generator
    std::size_t expected_count = 0;
    int stated_max_degree = 0;
    MonomialIdeal expected_initial;
    F2Poly witness;
    int witness_degree = 0;
    int stated_lower = 0;
    std::optional<int> stated_upper;
};

TheoremFamily build_theorem_family(const TheoremSpec& spec);

}  // namespace reglab
