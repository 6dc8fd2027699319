#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace reglab {

// Prime field F_p with p < 2^31.
class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == 1; }

    Element add(Element a, Element b) const {
        if (p_ == 2) return a ^ b;
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const {
        if (p_ == 2) return a ^ b;
        return a >= b ? a - b : a + p_ - b;
    }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const {
        if (p_ == 2) return a & b;
        return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Element inv(Element a) const;
    Element pow(Element a, std::uint64_t e) const;

    Element from_integer(const mpz_class& n) const;
    Element from_long(long long n) const;
    // Rationals map through the inverse of the denominator.
    Element from_rational(const mpq_class& q) const;

    std::string to_string(Element a) const { return std::to_string(a); }
    // Signed rendering used by the printer: returns false for a "negative" leading sign.
    bool is_negative(Element) const { return false; }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

// The field Q, backed by GMP rationals.
class RationalField {
public:
    using Element = mpq_class;

    std::uint32_t characteristic() const { return 0; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_one(const Element& a) const { return a == 1; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const;
    Element pow(const Element& a, std::uint64_t e) const;

    Element from_integer(const mpz_class& n) const { return mpq_class(n); }
    Element from_long(long long n) const { return mpq_class(static_cast<long>(n)); }
    Element from_rational(const mpq_class& q) const {
        mpq_class r(q);
        r.canonicalize();
        return r;
    }

    std::string to_string(const Element& a) const { return a.get_str(); }
    bool is_negative(const Element& a) const { return sgn(a) < 0; }

    bool operator==(const RationalField&) const { return true; }
};

bool is_prime(std::uint64_t n);

}  // namespace reglab
