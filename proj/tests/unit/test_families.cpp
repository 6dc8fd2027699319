#include <doctest.h>

#include "reglab/families/asymptotics.hpp"
#include "reglab/families/valuation.hpp"
#include "reglab/monomial/regularity.hpp"
#include "support.hpp"

using namespace reglab;
using namespace reglab::testing;

namespace {

const RingSpec kXY = make_ring_spec(0, {"x", "y"});
const RingSpec kXYZ = make_ring_spec(0, {"x", "y", "z"});

MonomialIdeal mono(const RingSpec& R, const std::string& s) { return parse_monomial_ideal(R, s); }

Point pt(long a, long b) { return {Rational(a), Rational(b)}; }

std::uint64_t binom(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// Largest degree of a minimal generator and number of minimal generators.
std::pair<int, std::size_t> d_mu(const MonomialIdeal& I) { return {I.max_gen_degree(), I.num_min_gens()}; }

}  // namespace

TEST_CASE("family members") {
    const auto P = powers_family(mono(kXY, "x^3, y^3"));
    CHECK(P.member(2) == mono(kXY, "x^6, x^3*y^3, y^6"));
    const auto M = preset_family("mprimary-counter");
    for (unsigned n = 1; n <= 4; ++n) {
        const int m = static_cast<int>(n);
        const MonoPolyhedron Pn(2, {pt(5 * m, 0), pt(3 * m + 1, 1), pt(0, 2 * m)});
        const auto In = M.member(n);
        for (int i = 0; i <= 5 * m + 2; ++i)
            for (int j = 0; j <= 2 * m + 2; ++j) CHECK(In.contains(Monomial{i, j}) == Pn.contains(pt(i, j)));
    }
    const auto J = mono(kXY, "x"), I = mono(kXY, "x^2, y^2");
    const auto X = mixed_family(J, I, GrowthExpr::parse("sqrt(n)"));
    CHECK(X.member(4) == product(power(J, 2), power(I, 4)));
    CHECK(X.member(8) == product(power(J, 2), power(I, 8)));
    CHECK(GrowthExpr::parse("n^2 + 3*n - 1")(4) == 27);
    CHECK(canonical_preset_name("ex_diverge") == "ex-diverge");
    CHECK_THROWS(preset_family("nope"));
}

TEST_CASE("family specs round trip through JSON") {
    const auto F = preset_family("ex-diverge", {{"f", "n^2"}});
    const auto G = family_from_json(F.description());
    for (unsigned n = 1; n <= 3; ++n) CHECK(G.member(n) == F.member(n));
    const auto T = truncation_family(preset_family("mprimary-counter"), 2);
    const auto T2 = family_from_json(T.description());
    for (unsigned n = 1; n <= 4; ++n) CHECK(T2.member(n) == T.member(n));
}

TEST_CASE("gradedness checks") {
    CHECK(check_graded(preset_family("ex-diverge"), 6).pass);
    CHECK(check_graded(preset_family("mprimary-counter"), 8).pass);
    CHECK(check_graded(preset_family("distinct-lims"), 6).pass);
    const auto bad = explicit_family(kXY, "bad", [](unsigned n) { return n == 1 ? mono(kXY, "x") : mono(kXY, "y"); });
    const auto c = check_graded(bad, 2);
    CHECK_FALSE(c.pass);
    REQUIRE(c.counterexample);
    CHECK(*c.counterexample == std::pair<unsigned, unsigned>{1, 1});
}

TEST_CASE("Noetherian stabilization evidence") {
    CHECK(noetherian_stabilization_test(powers_family(mono(kXY, "x^3, y^3")), 6).c == 1u);
    CHECK_FALSE(noetherian_stabilization_test(preset_family("mprimary-counter"), 12).c.has_value());
    CHECK(noetherian_stabilization_test(symbolic_min_family(mono(kXYZ, "x*y, x*z, y*z")), 6).c == 2u);
}

TEST_CASE("truncations are graded and stabilize") {
    for (unsigned a = 1; a <= 3; ++a) {
        const auto T = truncation_family(preset_family("mprimary-counter"), a);
        CHECK(check_graded(T, 8).pass);
        const auto v = noetherian_stabilization_test(T, 8);
        REQUIRE(v.c);
        const unsigned c = *v.c;
        for (unsigned m = 1; c * m <= 8; ++m) CHECK(T.member(c * m) == power(T.member(c), m));
    }
}

TEST_CASE("delta of the m-primary counterexample") {
    const auto s = delta_family_sample(preset_family("mprimary-counter"), 12);
    for (const auto& d : s.per_n) CHECK(d == 5);
    CHECK(s.running_inf.back() == 5);
    CHECK(s.union_delta == 5);
    CHECK(s.region_delta == 3);
    const auto s20 = delta_family_sample(preset_family("mprimary-counter"), 20);
    CHECK(s20.running_inf.back() == 5);
}

TEST_CASE("delta is invariant under integral closure") {
    for (const std::string name : {"mprimary-counter", "distinct-lims", "ex-diverge"}) {
        const auto F = preset_family(name);
        const auto a = delta_family_sample(F, 6), b = delta_family_sample(closure_family(F), 6);
        CHECK(a.per_n == b.per_n);
        CHECK(a.union_delta == b.union_delta);
        CHECK(a.region_delta == b.region_delta);
    }
}

TEST_CASE("mixed families sample the Newton polyhedron of I") {
    const auto J = mono(kXY, "x*y"), I = mono(kXY, "x^3, x*y, y^4");
    const auto s = delta_family_sample(mixed_family(J, I, GrowthExpr::parse("sqrt(n)")), 12);
    const MonoPolyhedron region(2, s.region_vertices);
    const auto NP = newton_polyhedron(I);
    for (const auto& v : NP.vertices()) CHECK(region.contains(v));
}

TEST_CASE("ex-diverge and distinct-lims invariants") {
    // values frozen from a Koszul homology computation done independently
    const auto D = preset_family("ex-diverge");
    for (unsigned n = 1; n <= 6; ++n) {
        const int n2 = static_cast<int>(n * n);
        const auto In = D.member(n);
        CHECK(cm_regularity(In) == n2 + 4);
        CHECK(d_mu(In) == std::pair<int, std::size_t>{n2 + 4, static_cast<std::size_t>(n2 + 4 * n + 5)});
    }
    const auto L = preset_family("distinct-lims");
    const RingSpec R = L.ring();
    for (unsigned n = 1; n <= 6; ++n) {
        const int m = static_cast<int>(n);
        const auto In = L.member(n);
        if (n >= 2) CHECK(cm_regularity(In) == 2 * m + 3);
        CHECK(In.max_gen_degree() == m + 4);
        const auto C = integral_closure(In);
        CHECK(C == product(power(mono(R, "a, b"), 4), power(mono(R, "x, y"), n)));
        CHECK(cm_regularity(C) == m + 4);
    }
}

TEST_CASE("asymptotic report") {
    const auto r = asymptotic_report(preset_family("ex-diverge"), 4, RegMode::Exact, false);
    REQUIRE(r.rows.size() == 4);
    CHECK(r.rows[2].reg == 13);
    CHECK(r.rows[2].mu == 26u);
    CHECK(r.fekete_inf_d_over_n == 4);
    const auto b = asymptotic_report(preset_family("ann-not0"), 4, RegMode::Bracket, false);
    for (const auto& row : b.rows) {
        REQUIRE(row.bracket);
        const int exact = row.n % 2 ? static_cast<int>(2 * row.n + 1) : static_cast<int>(5 * row.n + 1);
        CHECK(row.bracket->lower <= exact);
        CHECK(exact <= row.bracket->upper.value());
    }
    CHECK(r.to_json().contains("rows"));
}

TEST_CASE("Hilbert function from valuation values") {
    auto R2 = make_ring<RationalField>(make_ring_spec(0, {"x", "y"}));
    const auto V = groebner_valuation_values(Ideal<RationalField>::parse(R2, "x^2+y^2, x*y"), 2).values;
    CHECK(V.size() == 2);
    CHECK(std::find(V.begin(), V.end(), Monomial{1, 1}) != V.end());
    CHECK(std::find(V.begin(), V.end(), Monomial{0, 2}) != V.end());
    CHECK(groebner_valuation_values(Ideal<RationalField>::parse(R2, "x^2, x*y, y^2"), 2).values.size() == 3);
    CHECK(groebner_valuation_values(Ideal<RationalField>::parse(R2, "x^3, y^3"), 2).values.empty());

    auto R = make_ring<PrimeField>(make_ring_spec(3, {"x", "y", "z"}));
    for (int t = 0; t < 50; ++t) {
        std::vector<Polynomial<PrimeField>> gens;
        for (std::size_t v = 0; v < 3; ++v) {
            const int e = uniform(2, 4);
            gens.push_back(Polynomial<PrimeField>::monomial(R, Monomial::variable(v, e)) + random_homogeneous(R, 2, e));
        }
        for (int i = uniform(0, 2); i > 0; --i) gens.push_back(random_homogeneous(R, 3, uniform(2, 4)));
        const Ideal<PrimeField> J(R, gens);
        for (int k = 0; k <= 10; ++k)
            CHECK(graded_dimension(J, k) == binom(k + 2, 2) - groebner_valuation_values(J, k).values.size());
    }
}

TEST_CASE("regularity is subadditive on m-primary families") {
    std::vector<GradedFamily> fams = {preset_family("mprimary-counter"), powers_family(mono(kXY, "x^3, x*y^2, y^5")),
                                      closure_family(powers_family(mono(kXYZ, "x^2, y^3, z^4, x*y*z"))),
                                      truncation_family(preset_family("mprimary-counter"), 2)};
    for (const auto& F : fams) {
        std::vector<int> reg(9);
        for (unsigned n = 1; n <= 8; ++n) reg[n] = cm_regularity(F.member(n));
        for (unsigned m = 1; m <= 8; ++m)
            for (unsigned n = 1; m + n <= 8; ++n) CHECK(reg[m + n] <= reg[m] + reg[n]);
    }
}
