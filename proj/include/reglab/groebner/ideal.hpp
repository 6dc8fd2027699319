#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "reglab/core/parse.hpp"
#include "reglab/groebner/buchberger.hpp"
#include "reglab/groebner/certificate.hpp"
#include "reglab/monomial/monomial_ideal.hpp"

namespace reglab {

// Generators plus a lazily computed reduced Groebner basis. The basis is
// published once and shared between copies.
template <class K>
class Ideal {
public:
    using P = Polynomial<K>;

    Ideal(RingPtr<K> ring, std::vector<P> gens) : ring_(std::move(ring)), state_(std::make_shared<State>()) {
        for (auto& g : gens) {
            if (!same_ring(g.ring(), ring_)) throw RingMismatch();
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }
    static Ideal parse(RingPtr<K> ring, const std::string& text) {
        return Ideal(ring, parse_polynomial_list(ring, text));
    }
    static Ideal from_monomial(RingPtr<K> ring, const MonomialIdeal& I) {
        std::vector<P> g;
        for (const auto& m : I.gens()) g.push_back(P::monomial(ring, m));
        return Ideal(ring, std::move(g));
    }

    const RingPtr<K>& ring() const { return ring_; }
    const std::vector<P>& gens() const { return gens_; }

    const std::vector<P>& groebner_basis(const Budget& budget = {}) const {
        std::lock_guard<std::mutex> lock(state_->mu);
        if (!state_->basis) {
            auto res = buchberger(gens_, budget);
            state_->stats = res.stats;
            state_->basis = std::move(res.basis);
            state_->provenance = "buchberger";
        }
        return *state_->basis;
    }
    // Installs a basis obtained elsewhere (a certified family or the cache).
    void adopt_groebner_basis(std::vector<P> basis, std::string provenance, GbStats stats = {}) const {
        std::lock_guard<std::mutex> lock(state_->mu);
        state_->basis = std::move(basis);
        state_->provenance = std::move(provenance);
        state_->stats = stats;
    }
    bool has_groebner_basis() const {
        std::lock_guard<std::mutex> lock(state_->mu);
        return state_->basis.has_value();
    }
    std::string provenance() const {
        std::lock_guard<std::mutex> lock(state_->mu);
        return state_->provenance;
    }
    GbStats stats() const {
        std::lock_guard<std::mutex> lock(state_->mu);
        return state_->stats;
    }

    bool is_homogeneous() const {
        for (const auto& g : gens_)
            if (!g.is_homogeneous()) return false;
        return true;
    }

private:
    struct State {
        std::mutex mu;
        std::optional<std::vector<P>> basis;
        std::string provenance;
        GbStats stats;
    };
    RingPtr<K> ring_;
    std::vector<P> gens_;
    std::shared_ptr<State> state_;
};

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const Ideal<K>& I, const Budget& budget = {}) {
    return normal_form(p, I.groebner_basis(budget));
}

template <class K>
bool contains(const Ideal<K>& I, const Polynomial<K>& p, const Budget& budget = {}) {
    return normal_form(p, I, budget).is_zero();
}

// J subset of I
template <class K>
bool contains(const Ideal<K>& I, const Ideal<K>& J, const Budget& budget = {}) {
    for (const auto& g : J.gens())
        if (!contains(I, g, budget)) return false;
    return true;
}

template <class K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J, const Budget& budget = {}) {
    return contains(I, J, budget) && contains(J, I, budget);
}

template <class K>
MonomialIdeal initial_ideal(const Ideal<K>& I, const Budget& budget = {}) {
    std::vector<Monomial> lm;
    for (const auto& g : I.groebner_basis(budget)) lm.push_back(g.leading_monomial());
    return MonomialIdeal(I.ring()->spec, std::move(lm));
}

template <class K>
MonomialIdeal leading_monomial_ideal(const std::vector<Polynomial<K>>& G, const RingSpec& spec) {
    std::vector<Monomial> lm;
    for (const auto& g : G) lm.push_back(g.leading_monomial());
    return MonomialIdeal(spec, std::move(lm));
}

template <class K>
std::uint64_t graded_dimension(const Ideal<K>& I, int d, const Budget& budget = {}) {
    return initial_ideal(I, budget).hilbert_function(d);
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& I, const Ideal<K>& J) {
    auto g = I.gens();
    g.insert(g.end(), J.gens().begin(), J.gens().end());
    return Ideal<K>(I.ring(), std::move(g));
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& I, const Ideal<K>& J) {
    std::vector<Polynomial<K>> g;
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) {
            auto p = a * b;
            if (std::find(g.begin(), g.end(), p) == g.end()) g.push_back(std::move(p));
        }
    return Ideal<K>(I.ring(), std::move(g));
}

template <class K>
Ideal<K> ideal_power(const Ideal<K>& I, unsigned e) {
    Ideal<K> r(I.ring(), {Polynomial<K>::constant(I.ring(), I.ring()->field.one())});
    for (unsigned k = 0; k < e; ++k) r = ideal_product(r, I);
    return r;
}

namespace detail {

inline std::string fresh_variable(const RingSpec& spec) {
    std::string t = "t";
    while (spec.index_of(t)) t += "_";
    return t;
}

template <class K>
Polynomial<K> change_ring(const Polynomial<K>& p, const RingPtr<K>& target) {
    const std::uint32_t full = (1u << target->nvars()) - 1;
    std::vector<Term<K>> terms;
    for (const auto& t : p.terms()) {
        if (t.mono.support() & ~full) throw std::invalid_argument("polynomial uses a variable missing in target ring");
        terms.push_back(t);
    }
    return Polynomial<K>::from_terms(target, std::move(terms));
}

// Elements of a basis free of the last variable, moved to the smaller ring.
template <class K>
std::vector<Polynomial<K>> eliminate_last(const std::vector<Polynomial<K>>& G, const RingPtr<K>& base) {
    const std::size_t t = base->nvars();
    std::vector<Polynomial<K>> out;
    for (const auto& g : G) {
        bool free = true;
        for (const auto& term : g.terms())
            if (term.mono[t]) {
                free = false;
                break;
            }
        if (free) out.push_back(change_ring(g, base));
    }
    return out;
}

}  // namespace detail

// I cap J = (tI + (1-t)J) cap R, with t in the leading elimination block.
template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J, const Budget& budget = {}) {
    using P = Polynomial<K>;
    const auto& base = I.ring();
    if (I.gens().empty() || J.gens().empty()) return Ideal<K>(base, {});
    auto ext = make_ring<K>(base->spec.with_elimination_variable(detail::fresh_variable(base->spec)));
    const std::size_t t = base->nvars();
    P tp = P::monomial(ext, Monomial::variable(t));
    P one_minus_t = P::constant(ext, ext->field.one()) - tp;
    std::vector<P> gens;
    for (const auto& g : I.gens()) gens.push_back(tp * detail::change_ring(g, ext));
    for (const auto& g : J.gens()) gens.push_back(one_minus_t * detail::change_ring(g, ext));
    Budget b = budget;
    if (!b.max_degree) {
        int d = 0;
        for (const auto& g : gens) d = std::max(d, g.degree());
        b.max_degree = 4 * d + 64;
    }
    auto res = buchberger(gens, b);
    auto kept = detail::eliminate_last(res.basis, base);
    Ideal<K> out(base, kept);
    out.adopt_groebner_basis(interreduce(kept), "elimination");
    return out;
}

// I : g^infinity = (I + (1 - t g)) cap R.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Polynomial<K>& g, const Budget& budget = {}) {
    using P = Polynomial<K>;
    const auto& base = I.ring();
    auto ext = make_ring<K>(base->spec.with_elimination_variable(detail::fresh_variable(base->spec)));
    P tp = P::monomial(ext, Monomial::variable(base->nvars()));
    std::vector<P> gens;
    for (const auto& f : I.gens()) gens.push_back(detail::change_ring(f, ext));
    gens.push_back(P::constant(ext, ext->field.one()) - tp * detail::change_ring(g, ext));
    Budget b = budget;
    if (!b.max_degree) {
        int d = 0;
        for (const auto& f : gens) d = std::max(d, f.degree());
        b.max_degree = 4 * d + 64;
    }
    auto res = buchberger(gens, b);
    auto kept = detail::eliminate_last(res.basis, base);
    Ideal<K> out(base, kept);
    out.adopt_groebner_basis(interreduce(kept), "elimination");
    return out;
}

// I : g = (I cap (g)) / g
template <class K>
Ideal<K> colon_element(const Ideal<K>& I, const Polynomial<K>& g, const Budget& budget = {}) {
    using P = Polynomial<K>;
    if (g.is_zero()) return Ideal<K>(I.ring(), {P::constant(I.ring(), I.ring()->field.one())});
    Ideal<K> meet = intersect(I, Ideal<K>(I.ring(), {g}), budget);
    std::vector<P> q;
    for (const auto& h : meet.groebner_basis()) q.push_back(exact_divide(h, g));
    Ideal<K> out(I.ring(), q);
    out.adopt_groebner_basis(interreduce(q), "colon");
    return out;
}

// I : m = intersection of I : x_v over all variables.
template <class K>
Ideal<K> colon_maximal(const Ideal<K>& I, const Budget& budget = {}) {
    using P = Polynomial<K>;
    std::optional<Ideal<K>> acc;
    for (std::size_t v = 0; v < I.ring()->nvars(); ++v) {
        auto c = colon_element(I, P::monomial(I.ring(), Monomial::variable(v)), budget);
        acc = acc ? intersect(*acc, c, budget) : c;
    }
    return *acc;
}

// h is a socle witness: h not in I and h * x_v in I for every variable.
template <class K>
bool socle_witness_check(const Polynomial<K>& h, const std::vector<Polynomial<K>>& gb) {
    Reducer<K> red(gb);
    if (red.reduce(h).is_zero()) return false;
    for (std::size_t v = 0; v < h.ring()->nvars(); ++v) {
        auto hv = h.mul_term(h.field().one(), Monomial::variable(v));
        if (!red.reduce(hv).is_zero()) return false;
    }
    return true;
}

template <class K>
bool socle_witness_check(const Polynomial<K>& h, const Ideal<K>& I, const Budget& budget = {}) {
    return socle_witness_check(h, I.groebner_basis(budget));
}

// Largest degree in which (I : m)/I is nonzero, if any. Valid for homogeneous I.
template <class K>
std::optional<int> socle_degree_max(const Ideal<K>& I, const Budget& budget = {}) {
    auto C = colon_maximal(I, budget);
    Reducer<K> red(I.groebner_basis(budget));
    std::optional<int> best;
    for (const auto& g : C.groebner_basis())
        if (!red.reduce(g).is_zero()) best = std::max(best.value_or(-1), g.degree());
    return best;
}

template <class K>
std::vector<std::string> render(const std::vector<Polynomial<K>>& G) {
    std::vector<std::string> out;
    for (const auto& g : G) out.push_back(to_string(g));
    return out;
}

}  // namespace reglab
