#include <doctest.h>

#include <map>

#include "reglab/monomial/regularity.hpp"
#include "reglab/paperlab/theorem_family.hpp"
#include "support.hpp"

using namespace reglab;
using namespace reglab::testing;

namespace {

const RingSpec kXYAB = make_ring_spec(2, {"x", "y", "a", "b"});
const RingSpec kXY = make_ring_spec(0, {"x", "y"});
const RingSpec kXYZ = make_ring_spec(0, {"x", "y", "z"});
const RingSpec kXAB = make_ring_spec(0, {"x", "a", "b"});

MonomialIdeal mono(const RingSpec& R, const std::string& s) { return parse_monomial_ideal(R, s); }

// (1-t)^r * sum_d H(R/I, d) t^d, truncated at degree D.
std::vector<long long> hilbert_numerator(const MonomialIdeal& I, int D) {
    const int r = static_cast<int>(I.nvars());
    std::vector<long long> h(D + 1), out(D + 1);
    for (int d = 0; d <= D; ++d) h[d] = static_cast<long long>(I.hilbert_function(d));
    std::vector<long long> binom(r + 1, 1);
    for (int k = 1; k <= r; ++k) binom[k] = binom[k - 1] * (r - k + 1) / k;
    for (int d = 0; d <= D; ++d)
        for (int k = 0; k <= r && k <= d; ++k) out[d] += (k % 2 ? -1 : 1) * binom[k] * h[d - k];
    return out;
}

}  // namespace

TEST_CASE("regularity of basic ideals") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(cm_regularity(q_power(kXYAB, n), 2) == 3 * n + 2);
        CHECK(cm_regularity(q_power(kXYAB, n), 0) == 3 * n + 2);
    }
    for (unsigned d = 1; d <= 8; ++d) CHECK(cm_regularity(power(mono(kXY, "x, y"), d)) == static_cast<int>(d));
    CHECK(cm_regularity(mono(kXYAB, "a^4*b^2, a^3*b^3, a^2*b^4")) == 6);
    for (unsigned n = 1; n <= 3; ++n) {
        const auto A = sum(power(mono(kXAB, "a^5, b^2"), n), mono(kXAB, "x*a"));
        CHECK(cm_regularity(A) == static_cast<int>(5 * n + 1));
        const auto B = mono(kXAB, "x*b^" + std::to_string(2 * n) + ", x*a");
        CHECK(cm_regularity(B) == static_cast<int>(2 * n + 1));
    }
    CHECK(cm_regularity(mono(kXY, "x^2, y^2")) == 3);
    CHECK(cm_regularity(mono(kXYZ, "x*y, x*z, y*z")) == 2);
}

TEST_CASE("Betti numbers match the Hilbert series numerator") {
    for (int t = 0; t < 60; ++t) {
        const RingSpec& R = t % 2 ? kXYZ : kXYAB;
        const auto I = random_monomial_ideal(R, uniform(1, 6), 4);
        if (I.is_unit()) continue;
        const auto B = betti_numbers(I);
        int top = 0;
        for (const auto& [k, v] : B.entries) top = std::max(top, k.second);
        const auto num = hilbert_numerator(I, top + 2);
        std::vector<long long> alt(top + 3);
        for (const auto& [k, v] : B.entries) alt[k.second] += (k.first % 2 ? -1 : 1) * static_cast<long long>(v);
        CHECK(num == alt);
        CHECK(cm_regularity(I) == B.regularity() + 1);
    }
    const auto ci = betti_numbers(mono(kXY, "x^3, y^3"));
    CHECK(ci.at(1, 3) == 2);
    CHECK(ci.at(2, 6) == 1);
    CHECK(ci.projective_dimension() == 2);
}

TEST_CASE("artinian regularity oracle") {
    for (int t = 0; t < 200; ++t) {
        const RingSpec& R = t % 3 == 0 ? kXY : kXYZ;
        const auto I = random_artinian(R, uniform(0, 5), 6);
        REQUIRE(I.is_artinian());
        if (I.is_unit()) continue;
        int top = 0;
        for (int d = 0; d <= 3 * 6; ++d)
            if (I.hilbert_function(d) > 0) top = d;
        CHECK(cm_regularity(I) - 1 == top);
        CHECK(monomial_socle_degree_max(I) == top);
    }
}

TEST_CASE("containment reverses regularity for artinian ideals") {
    for (int t = 0; t < 100; ++t) {
        const auto L = random_artinian(kXYZ, uniform(0, 3), 5);
        // pure powers of degree 9 lie in L, whose pure powers have degree <= 5
        const auto H = sum(multiply(L, random_monomial(3, 2)), mono(kXYZ, "x^9, y^9, z^9"));
        if (L.is_unit()) continue;
        REQUIRE(L.contains(H));
        CHECK(cm_regularity(H) >= cm_regularity(L));
    }
}

TEST_CASE("splitting bracket contains the exact value") {
    for (int t = 0; t < 60; ++t) {
        const auto I = random_monomial_ideal(kXYAB, uniform(2, 6), 5);
        const int r = cm_regularity(I);
        const auto b = reg_bracket_splitting(I, {3, 2});
        CHECK(b.lower <= r);
        REQUIRE(b.upper);
        CHECK(r <= *b.upper);
        CHECK(splitting_upper_bound(I, {3, 2}) >= r);
    }
}

TEST_CASE("ideal operations") {
    CHECK(intersect(mono(kXY, "x^3"), mono(kXY, "y^3")) == mono(kXY, "x^3*y^3"));
    const auto P = product(mono(kXYAB, "a^4, a^3*b, a*b^3, b^4"), power(mono(kXYAB, "x, y"), 2));
    CHECK(P.num_min_gens() == 12);
    CHECK(colon(q_power(kXYAB, 1), Monomial{1, 0, 0, 0}) == mono(kXYAB, "x^2, y^3"));
    CHECK(power(mono(kXY, "x^3, y^3"), 2) == mono(kXY, "x^6, x^3*y^3, y^6"));
    CHECK(q_power(kXYAB, 3).max_gen_degree() == 9);
    CHECK(mono(kXY, "x").max_gen_degree() == 1);
    for (int t = 0; t < 100; ++t) {
        const auto A = random_monomial_ideal(kXYZ, 3, 4), B = random_monomial_ideal(kXYZ, 3, 4);
        const auto M = intersect(A, B);
        CHECK(A.contains(M));
        CHECK(B.contains(M));
        CHECK(M.contains(product(A, B)));
        const auto m = random_monomial(3, 3);
        CHECK(A.contains(multiply(colon(A, m), m)));
    }
}

TEST_CASE("membership in powers of (x^3, y^3)") {
    CHECK_FALSE(q_power_membership(2, 1, 1));
    CHECK(q_power_membership(15, 9, 8));
    CHECK_FALSE(q_power_membership(14, 11, 8));
    const RingSpec R = make_ring_spec(2, {"x", "y"});
    for (int n = 1; n <= 8; ++n) {
        const auto Qn = q_power(R, n);
        for (int i = 0; i <= 40; ++i)
            for (int j = 0; j <= 40; ++j) CHECK(q_power_membership(i, j, n) == Qn.contains(Monomial{i, j}));
    }
}

TEST_CASE("minimal primes and localization") {
    auto primes = minimal_primes(mono(kXYZ, "x*y, x*z, y*z"));
    std::sort(primes.begin(), primes.end());
    CHECK(primes == std::vector<std::uint32_t>{0b011, 0b101, 0b110});
    CHECK(minimal_primes(mono(kXY, "x^3, y^3")) == std::vector<std::uint32_t>{0b11});
    CHECK(minimal_primes(mono(kXY, "x")) == std::vector<std::uint32_t>{0b01});
    CHECK(localize_at_prime(mono(kXYZ, "x^2*y, z^3"), 0b101) == mono(kXYZ, "x^2, z^3"));
    CHECK(localize_at_prime(mono(kXYZ, "x*y, x*z, y*z"), 0b011) == mono(kXYZ, "x, y"));
    const auto I = mono(kXYZ, "x^2*y, y*z^3");
    CHECK(localize_at_prime(I, 0b111) == I);
}

TEST_CASE("symbolic powers") {
    const auto I = mono(kXYZ, "x*y, x*z, y*z");
    CHECK(symbolic_power_min(I, 2) == sum(power(I, 2), mono(kXYZ, "x*y*z")));
    CHECK(symbolic_power_min(q_power(kXYAB, 1), 3) == q_power(kXYAB, 3));
    for (int t = 0; t < 10; ++t) {
        const auto J = random_monomial_ideal(kXYZ, uniform(2, 4), 2);
        if (J.is_unit() || J.is_zero()) continue;
        for (unsigned a = 1; a <= 3; ++a)
            for (unsigned b = 1; a + b <= 6; ++b)
                CHECK(symbolic_power_min(J, a + b).contains(product(symbolic_power_min(J, a), symbolic_power_min(J, b))));
    }
}

TEST_CASE("integral closure") {
    CHECK(integral_closure(mono(kXY, "x^2, y^2")) == mono(kXY, "x^2, x*y, y^2"));
    CHECK(integral_closure(mono(kXY, "x^3, y^3")) == mono(kXY, "x^3, x^2*y, x*y^2, y^3"));
    for (int t = 0; t < 30; ++t) {
        const auto I = random_monomial_ideal(kXYZ, uniform(1, 4), 4);
        const auto C = integral_closure(I);
        CHECK(C.contains(I));
        CHECK(integral_closure(C) == C);
        CHECK(newton_polyhedron(C).equals(newton_polyhedron(I)));
    }
}
