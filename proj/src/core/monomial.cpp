#include "reglab/core/monomial.hpp"

#include <algorithm>
#include <string>

namespace reglab {

namespace {
std::uint16_t checked_exponent(long long e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e > kMaxExponent) throw std::overflow_error("exponent overflow: " + std::to_string(e));
    return static_cast<std::uint16_t>(e);
}
}  // namespace

Monomial::Monomial(std::initializer_list<int> exps) {
    if (exps.size() > kMaxVariables) throw std::invalid_argument("too many variables");
    std::size_t i = 0;
    for (int e : exps) set(i++, e);
}

Monomial Monomial::from_span(std::span<const int> exps) {
    if (exps.size() > kMaxVariables) throw std::invalid_argument("too many variables");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
}

Monomial Monomial::variable(std::size_t i, int e) {
    Monomial m;
    m.set(i, e);
    return m;
}

void Monomial::set(std::size_t i, int e) {
    if (i >= kMaxVariables) throw std::out_of_range("variable index out of range");
    degree_ -= exps_[i];
    exps_[i] = checked_exponent(e);
    degree_ += exps_[i];
}

std::uint32_t Monomial::degree_in(std::uint32_t mask) const {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (mask >> i & 1u) d += exps_[i];
    return d;
}

std::uint32_t Monomial::support() const {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (exps_[i]) s |= 1u << i;
    return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        std::uint32_t e = std::uint32_t(a.exps_[i]) + b.exps_[i];
        if (e > kMaxExponent) throw std::overflow_error("exponent overflow in product");
        r.exps_[i] = static_cast<std::uint16_t>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
}

Monomial Monomial::pow(std::uint32_t e) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        r.exps_[i] = checked_exponent(static_cast<long long>(exps_[i]) * e);
    r.degree_ = degree_ * e;
    return r;
}

Monomial Monomial::quotient(const Monomial& d) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (d.exps_[i] > exps_[i]) throw std::domain_error("monomial quotient is not exact");
        r.exps_[i] = exps_[i] - d.exps_[i];
    }
    r.degree_ = degree_ - d.degree_;
    return r;
}

Monomial Monomial::colon(const Monomial& d) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        r.exps_[i] = exps_[i] > d.exps_[i] ? exps_[i] - d.exps_[i] : 0;
        r.degree_ += r.exps_[i];
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        r.exps_[i] = std::max(exps_[i], o.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        r.exps_[i] = std::min(exps_[i], o.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (exps_[i] && o.exps_[i]) return false;
    return true;
}

std::size_t Monomial::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : exps_) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace reglab
