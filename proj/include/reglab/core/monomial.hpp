#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>

namespace reglab {

inline constexpr std::size_t kMaxVariables = 8;
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

// Exponent vector with inline storage. Slots past the ring arity stay zero.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::initializer_list<int> exps);
    static Monomial from_span(std::span<const int> exps);
    static Monomial variable(std::size_t i, int e = 1);

    int operator[](std::size_t i) const { return exps_[i]; }
    void set(std::size_t i, int e);
    std::uint32_t degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    // Degree restricted to the variables whose bit is set in mask.
    std::uint32_t degree_in(std::uint32_t mask) const;
    // Bitmask of variables with positive exponent.
    std::uint32_t support() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    Monomial pow(std::uint32_t e) const;

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }
    // this / d, requires d | this.
    Monomial quotient(const Monomial& d) const;
    // Exponentwise max(this - d, 0).
    Monomial colon(const Monomial& d) const;
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    std::size_t hash() const;

    const std::array<std::uint16_t, kMaxVariables>& exponents() const { return exps_; }

private:
    std::array<std::uint16_t, kMaxVariables> exps_{};
    std::uint32_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace reglab
