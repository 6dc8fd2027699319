#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "reglab/groebner/ideal.hpp"

namespace reglab {

struct ValuationTable {
    int degree = 0;
    // Exponents of least terms of a triangular basis of I_d, ascending in the term order.
    std::vector<Monomial> values;
};

// Triangularizes a spanning set of I_d with pivots on least terms. The least
// term of a reduced row only moves up, so the loop terminates.
template <class K>
ValuationTable groebner_valuation_values(const Ideal<K>& I, int d) {
    using P = Polynomial<K>;
    ValuationTable table;
    table.degree = d;
    const auto& ring = I.ring();
    const auto& F = ring->field;
    const auto& ord = ring->order;
    auto cmp = [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; };
    std::map<Monomial, P, decltype(cmp)> pivots(cmp);
    MonomialIdeal everything = MonomialIdeal::zero(ring->spec);
    for (const auto& g : I.gens()) {
        if (!g.is_homogeneous()) throw std::invalid_argument("valuation table needs homogeneous generators");
        int e = g.degree();
        if (e > d) continue;
        for (const auto& m : everything.standard_monomials(d - e)) {
            P row = g.mul_term(F.one(), m);
            while (!row.is_zero()) {
                const auto& lt = row.terms().back();
                auto it = pivots.find(lt.mono);
                if (it == pivots.end()) {
                    auto key = lt.mono;
                    pivots.emplace(key, row);
                    break;
                }
                const auto& pl = it->second.terms().back();
                row = row - it->second.scale(F.mul(lt.coeff, F.inv(pl.coeff)));
            }
        }
    }
    for (const auto& [m, row] : pivots) table.values.push_back(m);
    return table;
}

}  // namespace reglab
