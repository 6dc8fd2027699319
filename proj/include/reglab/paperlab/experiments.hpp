#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "reglab/groebner/cache.hpp"
#include "reglab/groebner/ideal.hpp"
#include "reglab/monomial/regularity.hpp"
#include "reglab/paperlab/report.hpp"
#include "reglab/paperlab/theorem_family.hpp"

namespace reglab {

struct RunOptions {
    Budget budget;
    unsigned threads = 1;
    std::optional<GbCache> cache;
    std::uint64_t cell_limit = kDefaultBettiCellLimit;
};

// Computes the basis through the cache when one is configured. Returns true on a hit.
template <class K>
bool ensure_basis(const Ideal<K>& I, const RunOptions& o) {
    if (I.has_groebner_basis()) return false;
    if (o.cache) return cached_groebner_basis(I, *o.cache, o.budget);
    I.groebner_basis(o.budget);
    return false;
}

// d(I) for a homogeneous ideal: largest degree in a minimal generating set.
template <class K>
int minimal_generator_degree_max(const Ideal<K>& I, const Budget& budget = {}) {
    auto G = I.groebner_basis(budget);
    std::stable_sort(G.begin(), G.end(), [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
    std::vector<Polynomial<K>> kept;
    int dmax = 0;
    for (const auto& g : G) {
        if (!kept.empty()) {
            Budget b = budget;
            b.max_degree = g.degree();
            b.truncate = true;
            if (normal_form(g, buchberger(kept, b).basis).is_zero()) continue;
        }
        kept.push_back(g);
        dmax = std::max(dmax, g.degree());
    }
    return dmax;
}

// [max(d(I), top socle degree + 1), reg in(I)] for a homogeneous ideal.
template <class K>
RegBracket computed_bracket(const Ideal<K>& I, const RunOptions& o) {
    ensure_basis(I, o);
    RegBracket b;
    const int d = minimal_generator_degree_max(I, o.budget);
    const auto soc = socle_degree_max(I, o.budget);
    if (soc && *soc + 1 >= d) {
        b.lower = *soc + 1;
        b.lower_method = "socle";
    } else {
        b.lower = d;
        b.lower_method = "generator degree";
    }
    const MonomialIdeal in = initial_ideal(I);
    const std::uint32_t chr = I.ring()->spec.characteristic;
    try {
        b.upper = cm_regularity(in, chr, o.cell_limit);
        b.upper_method = "reg in(I)";
    } catch (const WorkLimitExceeded&) {
        std::vector<std::size_t> hint;
        for (std::size_t v = in.nvars(); v-- > 2;) hint.push_back(v);
        b.upper = splitting_upper_bound(in, hint, chr);
        b.upper_method = "splitting bound on in(I)";
    }
    return b;
}

// Upper bound for reg of a monomial ideal: exact when the Koszul scan fits the
// cell limit, otherwise the splitting bound on the hint variables.
int monomial_reg_upper(const MonomialIdeal& in, std::uint32_t characteristic, std::uint64_t cell_limit,
                       const std::vector<std::size_t>& hint, std::string* method = nullptr);

ExperimentReport verify_theorem(const TheoremSpec& spec, const RunOptions& o = {});

// Decomposition of reg I^(n) for I = Q cap (f, z) in char 2 via the max formula
// over k. cross_check_n > 0 also runs the direct symbolic-power comparison in
// five variables at that index.
ExperimentReport symbolic_reg_bracket(unsigned n, const RunOptions& o = {}, unsigned cross_check_n = 2);

ExperimentReport nolimit_evidence(unsigned max_s, const RunOptions& o = {});

// g(n) + 3n + 1 is the conjectured regularity over Q.
unsigned conjecture_g(unsigned n);
ExperimentReport conjecture_char0_harness(unsigned n_max, const RunOptions& o = {});

}  // namespace reglab
