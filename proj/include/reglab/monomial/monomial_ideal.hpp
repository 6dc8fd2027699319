#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "reglab/core/monomial.hpp"
#include "reglab/core/ring.hpp"
#include "reglab/polyhedra/mono_polyhedron.hpp"

namespace reglab {

// Minimal generators of a monomial ideal, sorted by degree and then
// degrevlex descending. The zero ideal has no generators; the unit ideal is (1).
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(RingSpec ring, std::vector<Monomial> gens);

    static MonomialIdeal zero(RingSpec ring) { return MonomialIdeal(std::move(ring), {}); }
    static MonomialIdeal unit(RingSpec ring) { return MonomialIdeal(std::move(ring), {Monomial{}}); }
    // (x_i : i in mask)
    static MonomialIdeal prime(RingSpec ring, std::uint32_t mask);

    const RingSpec& ring() const { return ring_; }
    std::size_t nvars() const { return ring_.nvars(); }
    const std::vector<Monomial>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& J) const;
    // Every variable has a pure power among the generators.
    bool is_artinian() const;

    int max_gen_degree() const;
    std::size_t num_min_gens() const { return gens_.size(); }

    // dim_k (R/I)_d
    std::uint64_t hilbert_function(int d) const;
    // Standard monomials of degree d.
    std::vector<Monomial> standard_monomials(int d) const;

    std::string to_string() const;
    nlohmann::json to_json() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.ring_.variables == b.ring_.variables && a.gens_ == b.gens_;
    }

private:
    RingSpec ring_;
    std::vector<Monomial> gens_;
};

std::vector<Monomial> minimalize(std::vector<Monomial> gens, std::size_t nvars);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, unsigned e);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m);
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
// Multiply every generator by m.
MonomialIdeal multiply(const MonomialIdeal& a, const Monomial& m);

// Parses "x^3, y^3, x*y" in the given ring; every entry must be a monomial.
MonomialIdeal parse_monomial_ideal(const RingSpec& ring, const std::string& text);

// Variable masks of the minimal primes (minimal vertex covers of the supports).
std::vector<std::uint32_t> minimal_primes(const MonomialIdeal& I);
// Sets the variables outside the mask to 1.
MonomialIdeal localize_at_prime(const MonomialIdeal& I, std::uint32_t prime_mask);
// Intersection over minimal primes P of (I^n R_P) cap R.
MonomialIdeal symbolic_power_min(const MonomialIdeal& I, unsigned n);

MonoPolyhedron newton_polyhedron(const MonomialIdeal& I);
MonomialIdeal integral_closure(const MonomialIdeal& I);

// x^i y^j in (x^3, y^3)^n.
bool q_power_membership(int i, int j, int n);

}  // namespace reglab
