#include <doctest.h>

#include "reglab/core/parse.hpp"
#include "support.hpp"

using namespace reglab;
using namespace reglab::testing;

namespace {

RingPtr<PrimeField> f2() { return make_ring<PrimeField>(make_ring_spec(2, {"x", "y", "a", "b"})); }
RingPtr<RationalField> qq() { return make_ring<RationalField>(make_ring_spec(0, {"x", "y", "a", "b"})); }

}  // namespace

TEST_CASE("degrevlex comparisons") {
    const TermOrder ord = make_ring_spec(2, {"x", "y", "a", "b"}).order();
    CHECK(ord.greater(Monomial{1, 1, 1, 0}, Monomial{2, 0, 0, 1}));
    CHECK(ord.greater(Monomial{2, 0, 0, 1}, Monomial{0, 2, 0, 1}));
    CHECK(ord.compare(Monomial{1, 2, 3, 4}, Monomial{1, 2, 3, 4}) == 0);
    CHECK(ord.greater(Monomial{0, 0, 0, 3}, Monomial{1, 0, 0, 0}));
}

TEST_CASE("term order is multiplicative and degree compatible") {
    const TermOrder ord = make_ring_spec(2, {"x", "y", "a", "b"}).order();
    for (int t = 0; t < 10000; ++t) {
        const Monomial m1 = random_monomial(4, 6), m2 = random_monomial(4, 6), m = random_monomial(4, 4);
        if (ord.greater(m1, m2)) CHECK(ord.greater(m1 * m, m2 * m));
        if (m1.degree() > m2.degree()) CHECK(ord.greater(m1, m2));
    }
}

TEST_CASE("xy-degree of an lcm") {
    const std::uint32_t xy = 0b11;
    for (int t = 0; t < 5000; ++t) {
        const Monomial m1 = random_monomial(4, 8), m2 = random_monomial(4, 8);
        const int q = static_cast<int>(m2.degree_in(xy));
        const int lhs = static_cast<int>(m1.lcm(m2).degree_in(xy));
        CHECK(lhs >= q + std::max(m1[0] - m2[0], m1[1] - m2[1]));
        const int d1 = static_cast<int>(m1.degree_in(xy));
        if (m1[0] > m2[0] || m1[1] > m2[1]) CHECK(lhs >= q + 1);
        if (d1 == q && (m1[0] != m2[0] || m1[1] != m2[1])) CHECK(lhs >= q + 1);
        if (d1 >= q - 1 && m1[0] != m2[0] && m1[1] != m2[1]) CHECK(lhs >= q + 1);
    }
}

TEST_CASE("polynomial arithmetic in characteristic 2") {
    auto R = f2();
    const auto f = parse_polynomial(R, "x*y*a + x^2*b + y^2*b");
    CHECK((f + f).is_zero());
    CHECK(parse_polynomial(R, "(x+y)*(x+y)") == parse_polynomial(R, "x^2+y^2"));
    CHECK(f * parse_polynomial(R, "x^3") == parse_polynomial(R, "x^4*y*a + x^5*b + x^3*y^2*b"));
    CHECK(f.leading_monomial() == Monomial{1, 1, 1, 0});
}

TEST_CASE("parsing") {
    auto R = f2();
    CHECK(parse_polynomial(R, "x*y*a - (x^2+y^2)*b") == parse_polynomial(R, "x*y*a + x^2*b + y^2*b"));
    CHECK(parse_polynomial(R, "0").is_zero());
    auto R3 = make_ring<PrimeField>(make_ring_spec(3, {"x", "y"}));
    CHECK(parse_polynomial(R3, "x^3 + 3*y^3") == parse_polynomial(R3, "x^3"));
    auto Q = qq();
    const auto p = parse_polynomial(Q, "1/2*x^2 - 3*y*b + 7");
    CHECK(parse_polynomial(Q, to_string(p)) == p);
    CHECK_THROWS_AS(parse_polynomial(R, "x^"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(R, "z"), ParseError);
}

TEST_CASE("frobenius power") {
    auto R = f2();
    const auto f = parse_polynomial(R, "x*y*a + x^2*b + y^2*b");
    CHECK(frobenius_power(f, 3) == parse_polynomial(R, "x^8*y^8*a^8 + x^16*b^8 + y^16*b^8"));
    CHECK(frobenius_power(f, 0) == f);
    const auto s = parse_polynomial(R, "x+y");
    CHECK(frobenius_power(s, 2) == s * s * s * s);
    for (int t = 0; t < 30; ++t) {
        const auto p = random_polynomial(R, uniform(1, 4), 3);
        auto q = p;
        for (unsigned e = 1; e <= 3; ++e) {
            q = q * q;
            CHECK(frobenius_power(p, e) == q);
        }
    }
}

TEST_CASE_TEMPLATE("ring axioms on random triples", K, PrimeField, RationalField) {
    RingPtr<K> R;
    if constexpr (std::is_same_v<K, PrimeField>)
        R = f2();
    else
        R = qq();
    for (int t = 0; t < 60; ++t) {
        const auto a = random_polynomial(R, 4, 3), b = random_polynomial(R, 4, 3), c = random_polynomial(R, 4, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("prime field arithmetic") {
    PrimeField F(7);
    for (std::uint32_t a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.from_long(-1) == 6);
    CHECK(F.from_rational(mpq_class(1, 2)) == 4);
    CHECK_THROWS(PrimeField(6));
}

TEST_CASE("ring specs") {
    const RingSpec r = parse_ring_argument("2:x,y,a,b");
    CHECK(r.characteristic == 2);
    CHECK(r.nvars() == 4);
    CHECK(ring_spec_from_json(ring_spec_to_json(r)) == r);
    CHECK(r.with_characteristic(0).characteristic == 0);
    CHECK_THROWS(parse_ring_argument("2:x,x"));
}
