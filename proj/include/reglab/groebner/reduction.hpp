#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "reglab/core/polynomial.hpp"
#include "reglab/groebner/budget.hpp"

namespace reglab {

// Bit signature for quick rejection of divisibility tests:
// 8 bits per variable, bit k set when the exponent is at least 2^k.
inline std::uint64_t divisibility_mask(const Monomial& m) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        unsigned e = m[i];
        for (unsigned k = 0; k < 8 && (1u << k) <= e; ++k) s |= std::uint64_t{1} << (8 * i + k);
    }
    return s;
}

struct ReductionTrace {
    std::vector<std::size_t> divisors;
    std::uint64_t steps = 0;
};

template <class K>
class Reducer {
public:
    using P = Polynomial<K>;

    // The divisor list is searched in the given order.
    explicit Reducer(const std::vector<P>& divisors) {
        for (const auto& g : divisors) add(g);
    }
    Reducer() = default;

    void add(const P& g) {
        if (g.is_zero()) throw std::invalid_argument("zero polynomial in divisor list");
        items_.push_back(&g);
        masks_.push_back(divisibility_mask(g.leading_monomial()));
        inv_lc_.push_back(g.field().inv(g.leading_coefficient()));
    }
    void insert(std::size_t pos, const P& g) {
        items_.insert(items_.begin() + pos, &g);
        masks_.insert(masks_.begin() + pos, divisibility_mask(g.leading_monomial()));
        inv_lc_.insert(inv_lc_.begin() + pos, g.field().inv(g.leading_coefficient()));
    }
    void erase(std::size_t pos) {
        items_.erase(items_.begin() + pos);
        masks_.erase(masks_.begin() + pos);
        inv_lc_.erase(inv_lc_.begin() + pos);
    }
    std::size_t size() const { return items_.size(); }
    const P& at(std::size_t i) const { return *items_[i]; }

    // Index of the first divisor whose leading monomial divides m, or npos.
    std::size_t find(const Monomial& m, std::size_t skip = npos) const {
        const std::uint64_t mm = divisibility_mask(m);
        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (i == skip || (masks_[i] & ~mm)) continue;
            if (items_[i]->leading_monomial().divides(m)) return i;
        }
        return npos;
    }

    // Full reduction: every term of the result is irreducible.
    P reduce(const P& p, std::uint64_t* steps = nullptr, std::uint64_t max_steps = kNoLimit,
             ReductionTrace* trace = nullptr, std::size_t skip = npos) const {
        if (p.is_zero()) return p;
        const K& F = p.field();
        std::vector<Term<K>> cur = p.terms(), next, rem;
        std::size_t head = 0;
        while (head < cur.size()) {
            const auto& lt = cur[head];
            std::size_t i = find(lt.mono, skip);
            if (i == npos) {
                rem.push_back(lt);
                ++head;
                continue;
            }
            const P& g = *items_[i];
            auto c = F.mul(lt.coeff, inv_lc_[i]);
            Monomial q = lt.mono.quotient(g.leading_monomial());
            // next = cur[head+1..] - c*q*tail(g)
            next.clear();
            next.reserve(cur.size() - head + g.size());
            const auto& gt = g.terms();
            const TermOrder& ord = p.ring()->order;
            std::size_t a = head + 1, b = 1;
            Monomial bm;
            if (b < gt.size()) bm = gt[b].mono * q;
            while (a < cur.size() && b < gt.size()) {
                auto cmp = ord.compare(cur[a].mono, bm);
                if (cmp > 0) {
                    next.push_back(std::move(cur[a++]));
                } else if (cmp < 0) {
                    next.push_back({bm, F.neg(F.mul(c, gt[b].coeff))});
                    if (++b < gt.size()) bm = gt[b].mono * q;
                } else {
                    auto s = F.sub(cur[a].coeff, F.mul(c, gt[b].coeff));
                    if (!F.is_zero(s)) next.push_back({bm, std::move(s)});
                    ++a;
                    if (++b < gt.size()) bm = gt[b].mono * q;
                }
            }
            while (a < cur.size()) next.push_back(std::move(cur[a++]));
            while (b < gt.size()) {
                next.push_back({bm, F.neg(F.mul(c, gt[b].coeff))});
                if (++b < gt.size()) bm = gt[b].mono * q;
            }
            std::swap(cur, next);
            head = 0;
            if (trace) {
                trace->divisors.push_back(i);
                ++trace->steps;
            }
            if (steps && ++*steps > max_steps) throw BudgetExceeded("steps", max_steps, *steps);
        }
        return P::from_sorted_terms(p.ring(), std::move(rem));
    }

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    static constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();

private:
    std::vector<const P*> items_;
    std::vector<std::uint64_t> masks_;
    std::vector<typename K::Element> inv_lc_;
};

// Full normal form of p by G, reducing with the first eligible divisor in G's order.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const std::vector<Polynomial<K>>& G,
                          ReductionTrace* trace = nullptr) {
    return Reducer<K>(G).reduce(p, nullptr, Reducer<K>::kNoLimit, trace);
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& g, const Polynomial<K>& h) {
    const auto& F = g.field();
    Monomial l = g.leading_monomial().lcm(h.leading_monomial());
    auto a = g.mul_term(F.inv(g.leading_coefficient()), l.quotient(g.leading_monomial()));
    auto b = h.mul_term(F.inv(h.leading_coefficient()), l.quotient(h.leading_monomial()));
    return a - b;
}

}  // namespace reglab
