#pragma once

#include <random>
#include <vector>

#include "reglab/core/parse.hpp"
#include "reglab/monomial/monomial_ideal.hpp"

namespace reglab::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Monomial random_monomial(std::size_t nvars, int max_exp) {
    Monomial m;
    for (std::size_t i = 0; i < nvars; ++i) m.set(i, uniform(0, max_exp));
    return m;
}

inline Monomial random_monomial_of_degree(std::size_t nvars, int d) {
    Monomial m;
    for (int k = 0; k < d; ++k) {
        const auto v = static_cast<std::size_t>(uniform(0, static_cast<int>(nvars) - 1));
        m.set(v, m[v] + 1);
    }
    return m;
}

template <class K>
typename K::Element random_coefficient(const K& F) {
    if constexpr (std::is_same_v<K, RationalField>)
    {
        mpq_class q(uniform(-5, 5), uniform(1, 3));
        q.canonicalize();
        return q;
    }
    else
        return F.from_long(uniform(0, 1000));
}

template <class K>
Polynomial<K> random_polynomial(const RingPtr<K>& R, int terms, int max_exp) {
    std::vector<Term<K>> t;
    for (int i = 0; i < terms; ++i) t.push_back({random_monomial(R->nvars(), max_exp), random_coefficient(R->field)});
    return Polynomial<K>::from_terms(R, std::move(t));
}

template <class K>
Polynomial<K> random_homogeneous(const RingPtr<K>& R, int terms, int d) {
    std::vector<Term<K>> t;
    for (int i = 0; i < terms; ++i)
        t.push_back({random_monomial_of_degree(R->nvars(), d), random_coefficient(R->field)});
    return Polynomial<K>::from_terms(R, std::move(t));
}

inline MonomialIdeal random_monomial_ideal(const RingSpec& R, int gens, int max_exp) {
    std::vector<Monomial> g;
    for (int i = 0; i < gens; ++i) g.push_back(random_monomial(R.nvars(), max_exp));
    return MonomialIdeal(R, g);
}

// Pure powers of every variable plus random extra generators.
inline MonomialIdeal random_artinian(const RingSpec& R, int extra, int max_exp) {
    std::vector<Monomial> g;
    for (std::size_t v = 0; v < R.nvars(); ++v) g.push_back(Monomial::variable(v, uniform(1, max_exp)));
    for (int i = 0; i < extra; ++i) g.push_back(random_monomial(R.nvars(), max_exp));
    return MonomialIdeal(R, g);
}

}  // namespace reglab::testing
