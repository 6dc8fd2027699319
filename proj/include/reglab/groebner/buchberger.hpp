#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "reglab/groebner/budget.hpp"
#include "reglab/groebner/reduction.hpp"

namespace reglab {

template <class K>
struct GbResult {
    std::vector<Polynomial<K>> basis;
    GbStats stats;
};

// Sorts by leading monomial descending; the sort is stable so equal
// leading monomials keep their insertion order.
template <class K>
void sort_by_leading_monomial(std::vector<Polynomial<K>>& G) {
    if (G.empty()) return;
    const auto& ord = G.front().ring()->order;
    std::stable_sort(G.begin(), G.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
        return ord.greater(a.leading_monomial(), b.leading_monomial());
    });
}

// Replaces G (a Groebner basis) by the reduced Groebner basis of the same ideal.
template <class K>
std::vector<Polynomial<K>> interreduce(std::vector<Polynomial<K>> G, std::uint64_t* steps = nullptr,
                                       std::uint64_t max_steps = Reducer<K>::kNoLimit) {
    G.erase(std::remove_if(G.begin(), G.end(), [](const auto& g) { return g.is_zero(); }), G.end());
    for (auto& g : G) g = g.monic();
    sort_by_leading_monomial(G);
    // Drop elements whose leading monomial is divisible by another one.
    std::vector<Polynomial<K>> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& mi = G[i].leading_monomial();
            const auto& mj = G[j].leading_monomial();
            redundant = mj.divides(mi) && (!(mi == mj) || j < i);
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    std::vector<Polynomial<K>> out = minimal;
    for (std::size_t i = 0; i < out.size(); ++i) {
        Reducer<K> red(out);
        out[i] = red.reduce(out[i], steps, max_steps, nullptr, i).monic();
    }
    sort_by_leading_monomial(out);
    return out;
}

// Buchberger's algorithm with the normal selection strategy, the coprime
// criterion and the Gebauer-Moeller update. Returns the reduced basis.
template <class K>
GbResult<K> buchberger(const std::vector<Polynomial<K>>& gens, const Budget& budget = {}) {
    using P = Polynomial<K>;
    GbResult<K> result;
    GbStats& st = result.stats;
    std::vector<P> input;
    int max_in = 0;
    for (const auto& g : gens)
        if (!g.is_zero()) {
            input.push_back(g.monic());
            max_in = std::max(max_in, g.degree());
        }
    if (input.empty()) return result;
    const RingPtr<K> ring = input.front().ring();
    const TermOrder& ord = ring->order;
    const int deg_limit = budget.max_degree.value_or(4 * max_in + 64);

    std::deque<P> all;            // stable storage, index = insertion order
    std::vector<std::size_t> G;   // active indices, leading monomial descending
    Reducer<K> red;               // mirrors G
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> B;

    auto insert_active = [&](std::size_t idx) {
        const auto& m = all[idx].leading_monomial();
        std::size_t pos = 0;
        while (pos < G.size() && !ord.greater(m, all[G[pos]].leading_monomial())) ++pos;
        G.insert(G.begin() + pos, idx);
        red.insert(pos, all[idx]);
    };

    auto update = [&](std::size_t h) {
        const Monomial& lh = all[h].leading_monomial();
        std::vector<Pair> C, D;
        for (auto g : G) C.push_back({g, h, all[g].leading_monomial().lcm(lh)});
        st.pairs_created += C.size();
        for (std::size_t k = 0; k < C.size(); ++k) {
            const Pair& p = C[k];
            bool keep = lh.coprime(all[p.i].leading_monomial());
            if (!keep) {
                keep = true;
                for (std::size_t l = k + 1; l < C.size() && keep; ++l)
                    if (C[l].lcm.divides(p.lcm)) keep = false;
                for (std::size_t l = 0; l < D.size() && keep; ++l)
                    if (D[l].lcm.divides(p.lcm)) keep = false;
            }
            if (keep) D.push_back(p);
        }
        std::vector<Pair> Bnew;
        for (const auto& p : B) {
            bool drop = lh.divides(p.lcm) && !(all[p.i].leading_monomial().lcm(lh) == p.lcm) &&
                        !(all[p.j].leading_monomial().lcm(lh) == p.lcm);
            if (!drop) Bnew.push_back(p);
        }
        for (const auto& p : D)
            if (!lh.coprime(all[p.i].leading_monomial())) Bnew.push_back(p);
        B = std::move(Bnew);
        for (std::size_t pos = G.size(); pos-- > 0;) {
            if (lh.divides(all[G[pos]].leading_monomial())) {
                G.erase(G.begin() + pos);
                red.erase(pos);
            }
        }
        insert_active(h);
    };

    // Seed smallest leading term first; each input is reduced by what is
    // already active, so nothing is dropped unless it reduces to zero.
    std::uint64_t steps = 0;
    sort_by_leading_monomial(input);
    for (auto it = input.rbegin(); it != input.rend(); ++it) {
        P r = red.reduce(*it, &steps, budget.max_steps);
        if (r.is_zero()) continue;
        all.push_back(r.monic());
        update(all.size() - 1);
    }

    while (!B.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < B.size(); ++k) {
            auto c = ord.compare(B[k].lcm, B[best].lcm);
            if (c < 0 || (c == 0 && std::tie(B[k].j, B[k].i) < std::tie(B[best].j, B[best].i))) best = k;
        }
        Pair p = B[best];
        B.erase(B.begin() + best);
        int d = static_cast<int>(p.lcm.degree());
        if (d > deg_limit) {
            if (budget.truncate) {
                ++st.pairs_truncated;
                continue;
            }
            throw BudgetExceeded("degree", static_cast<std::uint64_t>(deg_limit), static_cast<std::uint64_t>(d));
        }
        st.max_pair_degree = std::max(st.max_pair_degree, d);
        ++st.pairs_reduced;
        P s = s_polynomial(all[p.i], all[p.j]);
        P r = red.reduce(s, &steps, budget.max_steps);
        if (r.is_zero()) {
            ++st.zero_reductions;
            continue;
        }
        all.push_back(r.monic());
        update(all.size() - 1);
    }

    std::vector<P> basis;
    for (auto g : G) basis.push_back(all[g]);
    result.basis = interreduce(std::move(basis), &steps, budget.max_steps);
    st.reduction_steps = steps;
    st.basis_size = result.basis.size();
    for (const auto& g : result.basis) st.max_basis_degree = std::max(st.max_basis_degree, g.degree());
    return result;
}

}  // namespace reglab
