#include "reglab/core/field.hpp"

#include <stdexcept>

namespace reglab {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("characteristic must be 0 or a prime below 2^31, got " +
                                    std::to_string(p));
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
    Element r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    return pow(a, p_ - 2);
}

PrimeField::Element PrimeField::from_integer(const mpz_class& n) const {
    mpz_class r = n % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::from_long(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
    Element den = from_integer(q.get_den());
    if (den == 0) throw std::domain_error("denominator vanishes in F_p");
    return mul(from_integer(q.get_num()), inv(den));
}

RationalField::Element RationalField::inv(const Element& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
    return 1 / a;
}

RationalField::Element RationalField::pow(const Element& a, std::uint64_t e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

}  // namespace reglab
