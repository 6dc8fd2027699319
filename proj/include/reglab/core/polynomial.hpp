#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "reglab/core/field.hpp"
#include "reglab/core/monomial.hpp"
#include "reglab/core/ring.hpp"

namespace reglab {

template <class K>
struct PolyRing {
    using Field = K;
    PolyRing(RingSpec s, K f) : spec(std::move(s)), field(std::move(f)), order(spec.order()) {}
    RingSpec spec;
    K field;
    TermOrder order;
    std::size_t nvars() const { return spec.nvars(); }
};

template <class K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

template <class K>
RingPtr<K> make_ring(const RingSpec& spec) {
    spec.validate();
    if constexpr (std::is_same_v<K, RationalField>) {
        if (spec.characteristic != 0) throw std::invalid_argument("rational field needs characteristic 0");
        return std::make_shared<const PolyRing<K>>(spec, RationalField{});
    } else {
        if (spec.characteristic == 0) throw std::invalid_argument("prime field needs a prime characteristic");
        return std::make_shared<const PolyRing<K>>(spec, PrimeField(spec.characteristic));
    }
}

template <class K>
struct Term {
    Monomial mono;
    typename K::Element coeff;
};

class RingMismatch : public std::invalid_argument {
public:
    RingMismatch() : std::invalid_argument("operands live in different rings") {}
};

template <class K>
bool same_ring(const RingPtr<K>& a, const RingPtr<K>& b) {
    return a == b || (a && b && a->spec == b->spec);
}

// Terms are kept strictly descending in the ring's term order with no zero coefficients.
template <class K>
class Polynomial {
public:
    using Element = typename K::Element;
    using TermT = Term<K>;

    Polynomial() = default;
    explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

    static Polynomial from_terms(RingPtr<K> ring, std::vector<TermT> terms) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }
    // Caller guarantees the terms are already in canonical form.
    static Polynomial from_sorted_terms(RingPtr<K> ring, std::vector<TermT> terms) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(terms);
        return p;
    }
    static Polynomial monomial(RingPtr<K> ring, const Monomial& m) {
        Element one = ring->field.one();
        return from_sorted_terms(ring, {TermT{m, one}});
    }
    static Polynomial term(RingPtr<K> ring, const Monomial& m, Element c) {
        if (ring->field.is_zero(c)) return Polynomial(ring);
        return from_sorted_terms(ring, {TermT{m, std::move(c)}});
    }
    static Polynomial constant(RingPtr<K> ring, Element c) { return term(ring, Monomial{}, std::move(c)); }

    const RingPtr<K>& ring() const { return ring_; }
    const K& field() const { return ring_->field; }
    const std::vector<TermT>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const TermT& leading_term() const { check_nonzero(); return terms_.front(); }
    const Monomial& leading_monomial() const { check_nonzero(); return terms_.front().mono; }
    const Element& leading_coefficient() const { check_nonzero(); return terms_.front().coeff; }
    const Monomial& least_monomial() const { check_nonzero(); return terms_.back().mono; }

    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max<int>(d, t.mono.degree());
        return d;
    }
    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }
    bool is_monomial() const { return terms_.size() == 1; }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
        return r;
    }
    Polynomial scale(const Element& c) const {
        if (field().is_zero(c)) return Polynomial(ring_);
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
        return r;
    }
    // c * m * this. Multiplication by a monomial preserves the order of terms.
    Polynomial mul_term(const Element& c, const Monomial& m) const {
        if (field().is_zero(c)) return Polynomial(ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
        return r;
    }
    Polynomial monic() const {
        if (is_zero() || field().is_one(leading_coefficient())) return *this;
        return scale(field().inv(leading_coefficient()));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.require_same(b);
        return combine(a, b, a.field().one(), nullptr);
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.require_same(b);
        return combine(a, b, a.field().neg(a.field().one()), nullptr);
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
        if (a.size() == 1) return b.mul_term(a.terms_[0].coeff, a.terms_[0].mono);
        if (b.size() == 1) return a.mul_term(b.terms_[0].coeff, b.terms_[0].mono);
        std::vector<TermT> out;
        out.reserve(a.size() * b.size());
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, a.field().mul(s.coeff, t.coeff)});
        return from_terms(a.ring_, std::move(out));
    }
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    // this - c * m * g, the elementary reduction step.
    Polynomial sub_mul(const Element& c, const Monomial& m, const Polynomial& g) const {
        return combine(*this, g, field().neg(c), &m);
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
        return true;
    }

private:
    void check_nonzero() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    }
    void require_same(const Polynomial& b) const {
        if (!same_ring(ring_, b.ring_)) throw RingMismatch();
    }

    // a + c * shift * b
    static Polynomial combine(const Polynomial& a, const Polynomial& b, const Element& c, const Monomial* shift) {
        const K& F = a.ring_ ? a.field() : b.field();
        const TermOrder& ord = (a.ring_ ? a.ring_ : b.ring_)->order;
        Polynomial r(a.ring_ ? a.ring_ : b.ring_);
        r.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        auto bmono = [&](std::size_t k) { return shift ? b.terms_[k].mono * *shift : b.terms_[k].mono; };
        Monomial bm;
        if (j < b.size()) bm = bmono(j);
        while (i < a.size() && j < b.size()) {
            auto cmp = ord.compare(a.terms_[i].mono, bm);
            if (cmp > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                r.terms_.push_back({bm, F.mul(c, b.terms_[j].coeff)});
                if (++j < b.size()) bm = bmono(j);
            } else {
                auto s = F.add(a.terms_[i].coeff, F.mul(c, b.terms_[j].coeff));
                if (!F.is_zero(s)) r.terms_.push_back({bm, std::move(s)});
                ++i;
                if (++j < b.size()) bm = bmono(j);
            }
        }
        while (i < a.size()) r.terms_.push_back(a.terms_[i++]);
        while (j < b.size()) {
            r.terms_.push_back({bm, F.mul(c, b.terms_[j].coeff)});
            if (++j < b.size()) bm = bmono(j);
        }
        return r;
    }

    void normalize() {
        const auto& ord = ring_->order;
        const auto& F = ring_->field;
        std::sort(terms_.begin(), terms_.end(),
                  [&](const TermT& x, const TermT& y) { return ord.greater(x.mono, y.mono); });
        std::vector<TermT> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff = F.add(out.back().coeff, t.coeff);
            } else {
                if (!out.empty() && F.is_zero(out.back().coeff)) out.pop_back();
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && F.is_zero(out.back().coeff)) out.pop_back();
        terms_ = std::move(out);
    }

    RingPtr<K> ring_;
    std::vector<TermT> terms_;
};

template <class K>
Polynomial<K> power(const Polynomial<K>& p, unsigned e) {
    Polynomial<K> result = Polynomial<K>::constant(p.ring(), p.field().one());
    Polynomial<K> base = p;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

// Maps each term c*m to c^q * m^q with q = char^e. Additive in characteristic p.
template <class K>
Polynomial<K> frobenius_power(const Polynomial<K>& p, unsigned e) {
    const auto chr = p.ring()->spec.characteristic;
    if (chr == 0) throw std::domain_error("Frobenius power needs positive characteristic");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= chr;
        if (q > kMaxExponent) throw std::overflow_error("Frobenius exponent overflow");
    }
    std::vector<Term<K>> out;
    out.reserve(p.size());
    for (const auto& t : p.terms())
        out.push_back({t.mono.pow(static_cast<std::uint32_t>(q)), p.field().pow(t.coeff, q)});
    // m -> m^q preserves any monomial order, so the terms stay sorted.
    return Polynomial<K>::from_sorted_terms(p.ring(), std::move(out));
}

// Exact division p / g; throws when g does not divide p.
template <class K>
Polynomial<K> exact_divide(const Polynomial<K>& p, const Polynomial<K>& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    const auto& F = p.field();
    auto inv = F.inv(g.leading_coefficient());
    Polynomial<K> rem = p, quot(p.ring());
    while (!rem.is_zero()) {
        const auto& lt = rem.leading_term();
        if (!g.leading_monomial().divides(lt.mono)) throw std::domain_error("division is not exact");
        auto c = F.mul(lt.coeff, inv);
        auto m = lt.mono.quotient(g.leading_monomial());
        quot = quot + Polynomial<K>::term(p.ring(), m, c);
        rem = rem.sub_mul(c, m, g);
    }
    return quot;
}

template <class K>
std::string to_string(const Polynomial<K>& p) {
    if (p.is_zero()) return "0";
    const auto& F = p.field();
    const auto& spec = p.ring()->spec;
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        bool neg = F.is_negative(t.coeff);
        auto mag = neg ? F.neg(t.coeff) : t.coeff;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            out += F.to_string(mag);
        } else {
            if (!F.is_one(mag)) out += F.to_string(mag) + "*";
            out += monomial_to_string(t.mono, spec);
        }
    }
    return out;
}

}  // namespace reglab
