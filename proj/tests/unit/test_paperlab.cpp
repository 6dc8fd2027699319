#include <doctest.h>

#include "reglab/paperlab/experiments.hpp"

using namespace reglab;

namespace {

unsigned log2u(unsigned n) {
    unsigned s = 0;
    while ((1u << s) < n) ++s;
    return s;
}

// Stated cardinalities, with {q} the fractional part.
std::size_t stated_count(const TheoremSpec& t) {
    switch (t.id) {
        case TheoremId::TwoPowers: {
            const unsigned s = log2u(t.n);
            return (5 * t.n + 8 + (s % 2 ? 0 : 2)) / 3;
        }
        case TheoremId::ThreeTimesTwoPower: return (19 * t.n + 111) / 9;
        default: {
            const unsigned u = log2u(t.k);
            return u % 2 ? 3 * t.n + 1 - (2 * t.k - 1) / 3 : 3 * t.n + 1 - (2 * t.k - 2) / 3;
        }
    }
}

int stated_witness_degree(const TheoremSpec& t) {
    const int n = static_cast<int>(t.n), k = static_cast<int>(t.k);
    switch (t.id) {
        case TheoremId::TwoPowers: return 5 * n - 1;
        case TheoremId::ThreeTimesTwoPower: return 6 * n - 1;
        case TheoremId::DoubleSmall: return -1;
        default: return 3 * n + 3 * k - 2;
    }
}

const std::vector<TheoremSpec> kSpecs = {
    {TheoremId::TwoPowers, 8, 8},         {TheoremId::TwoPowers, 16, 16},       {TheoremId::TwoPowers, 32, 32},
    {TheoremId::ThreeTimesTwoPower, 24, 24}, {TheoremId::DoubleOdd, 16, 8},     {TheoremId::DoubleOdd, 32, 8},
    {TheoremId::DoubleEven, 8, 4},        {TheoremId::DoubleEven, 16, 4},       {TheoremId::DoubleEven, 32, 16},
    {TheoremId::DoubleSmall, 4, 1},       {TheoremId::DoubleSmall, 4, 2},       {TheoremId::DoubleSmall, 8, 1},
    {TheoremId::DoubleSmall, 8, 2},       {TheoremId::DoubleSmall, 16, 2},      {TheoremId::DoubleSmall, 32, 1}};

}  // namespace

TEST_CASE("paper objects") {
    const auto R = paper_ring_f2();
    CHECK(to_string(paper_f(R)) == "x*y*a + x^2*b + y^2*b");
    const auto R0 = make_ring<RationalField>(paper_ring_spec(0));
    CHECK(paper_f(R0) == parse_polynomial(R0, "x*y*a - x^2*b - y^2*b"));
    CHECK(q_power(R->spec, 2) == parse_monomial_ideal(R->spec, "x^6, x^3*y^3, y^6"));
    CHECK(q_power(R->spec, -1).is_zero());
    const auto in = paper_input(R, 8, 8);
    CHECK(in.back() == frobenius_power(paper_f(R), 3));
    CHECK(paper_input(R, 3, 3).back() == power(paper_f(R), 3));
}

TEST_CASE("theorem names and hypotheses") {
    CHECK(parse_theorem_spec("gb2powers", 8, std::nullopt).id == TheoremId::TwoPowers);
    CHECK(parse_theorem_spec("GB_3times2power", 24, std::nullopt).id == TheoremId::ThreeTimesTwoPower);
    CHECK(parse_theorem_spec("limregge6", 24, std::nullopt).id == TheoremId::ThreeTimesTwoPower);
    CHECK(parse_theorem_spec("double2powers", 16, 8u).id == TheoremId::DoubleOdd);
    CHECK(parse_theorem_spec("double2powers", 8, 4u).id == TheoremId::DoubleEven);
    CHECK(parse_theorem_spec("double2powers", 8, 2u).id == TheoremId::DoubleSmall);
    CHECK(parse_theorem_spec("GB_double2powers_odd", 16, 8u).k == 8);
    CHECK(theorem_name(TheoremId::DoubleEven) == "GB_double2powers_even");
    CHECK_THROWS_AS(parse_theorem_spec("gb2powers", 12, std::nullopt), HypothesisError);
    CHECK_THROWS_AS(parse_theorem_spec("gb2powers", 4, std::nullopt), HypothesisError);
    CHECK_THROWS_AS(parse_theorem_spec("3times2power", 48, std::nullopt), HypothesisError);
    CHECK_THROWS_AS(parse_theorem_spec("double2powers-odd", 16, 4u), HypothesisError);
    CHECK_THROWS_AS(parse_theorem_spec("double2powers", 8, 8u), HypothesisError);
    CHECK_THROWS_AS(parse_theorem_spec("double2powers", 8, 3u), HypothesisError);
    CHECK_THROWS(parse_theorem_spec("unknown", 8, std::nullopt));
    CHECK(theorem_for(8, 8).has_value());
    CHECK(theorem_for(8, 4)->id == TheoremId::DoubleEven);
    CHECK_FALSE(theorem_for(8, 3).has_value());
    CHECK_FALSE(theorem_for(6, 6).has_value());
}

TEST_CASE("explicit families are Groebner bases of the stated shape") {
    for (const auto& t : kSpecs) {
        CAPTURE(theorem_name(t.id));
        CAPTURE(t.n);
        CAPTURE(t.k);
        const auto F = build_theorem_family(t);
        CHECK(F.gens.size() == stated_count(t));
        CHECK(F.expected_count == stated_count(t));
        CHECK(verify_gb_certificate(F.gens).pass);
        CHECK(leading_monomial_ideal(F.gens, F.gens.front().ring()->spec) == F.expected_initial);
        CHECK(socle_witness_check(F.witness, F.gens));
        if (stated_witness_degree(t) > 0) CHECK(F.witness.degree() == stated_witness_degree(t));
        int md = 0;
        for (const auto& g : F.gens) md = std::max(md, g.degree());
        CHECK(md <= F.stated_max_degree);
        Reducer<PrimeField> red(F.gens);
        for (const auto& g : paper_input(paper_ring_f2(), t.n, t.k)) CHECK(red.reduce(g).is_zero());
    }
    CHECK(build_theorem_family({TheoremId::TwoPowers, 8, 8}).stated_max_degree == 33);
    CHECK(build_theorem_family({TheoremId::ThreeTimesTwoPower, 24, 24}).stated_max_degree == 137);
}

TEST_CASE("explicit families match Buchberger when small") {
    for (const TheoremSpec t : {TheoremSpec{TheoremId::TwoPowers, 8, 8}, TheoremSpec{TheoremId::DoubleEven, 8, 4},
                                TheoremSpec{TheoremId::DoubleSmall, 8, 1}, TheoremSpec{TheoremId::DoubleSmall, 4, 2}}) {
        const auto F = build_theorem_family(t);
        const Ideal<PrimeField> I(paper_ring_f2(), paper_input(paper_ring_f2(), t.n, t.k));
        CHECK(I.groebner_basis() == interreduce(F.gens));
    }
}

TEST_CASE("verify_theorem") {
    RunOptions o;
    const auto r = verify_theorem({TheoremId::DoubleOdd, 16, 8}, o);
    CHECK(r.pass());
    const auto b = r.artifacts().at("bracket");
    CHECK(b.at("lower") == 71);
    CHECK(b.at("upper").get<int>() <= 74);
    CHECK(r.artifacts().at("witness") == "x^40*y^8*a^7*b^15 + x^8*y^40*a^7*b^15");
    const auto r8 = verify_theorem({TheoremId::TwoPowers, 8, 8}, o);
    CHECK(r8.pass());
    CHECK(r8.find("gb.reduced_match") != nullptr);
    CHECK(r8.artifacts().at("witness") == "x^8*y^17*a^7*b^7");
}

TEST_CASE("reports are deterministic") {
    RunOptions o;
    const auto a = verify_theorem({TheoremId::DoubleEven, 8, 4}, o);
    const auto b = verify_theorem({TheoremId::DoubleEven, 8, 4}, o);
    CHECK(a.to_json(false).dump() == b.to_json(false).dump());
    CHECK(a.content_hash() == b.content_hash());
    CHECK(a.input_hash() == b.input_hash());
    const auto j = a.to_json(true);
    for (const char* key : {"version", "preset", "params", "assertions", "artifacts", "timings", "input_hash"})
        CHECK(j.contains(key));
    for (const auto& x : j.at("assertions")) {
        CHECK(x.contains("id"));
        CHECK(x.contains("expected"));
        CHECK(x.contains("computed"));
        CHECK(x.contains("verdict"));
    }
    CHECK_FALSE(a.to_json(false).contains("timings"));
    CHECK(a.input_hash() != verify_theorem({TheoremId::DoubleEven, 16, 4}, o).input_hash());
}

TEST_CASE("report verdicts") {
    ExperimentReport r("unit", {{"x", 1}});
    CHECK(r.pass());
    CHECK(r.check("one", 1, 1, true));
    CHECK(r.pass());
    CHECK_FALSE(r.check("two", 2, 3, false));
    CHECK_FALSE(r.pass());
    REQUIRE(r.find("two"));
    CHECK(r.find("two")->computed == 3);
    CHECK(r.to_text().find("[FAIL] two") != std::string::npos);
}

TEST_CASE("symbolic power brackets at small n") {
    RunOptions o;
    CHECK_THROWS_AS(symbolic_reg_bracket(1, o), HypothesisError);
    for (unsigned n = 2; n <= 3; ++n) {
        const auto r = symbolic_reg_bracket(n, o, n);
        CHECK(r.pass());
        CHECK(r.artifacts().at("formula_applicable") == true);
        const auto b = r.artifacts().at("bracket");
        CHECK(b.at("lower").get<int>() <= b.at("upper").get<int>());
    }
}

TEST_CASE("no-limit evidence") {
    RunOptions o;
    const auto r3 = nolimit_evidence(3, o);
    CHECK(r3.pass());
    CHECK(r3.artifacts().at("gap").at("liminf_at_most") == "5");
    CHECK(r3.artifacts().at("gap").at("limsup_at_least") == "6");
    const auto r4 = nolimit_evidence(4, o);
    CHECK(r4.pass());
    // a larger range never weakens the gap
    CHECK(mpq_class(r4.artifacts().at("gap").at("liminf_at_most").get<std::string>()) <= 5);
    CHECK(mpq_class(r4.artifacts().at("gap").at("limsup_at_least").get<std::string>()) >= 6);
    CHECK_THROWS_AS(nolimit_evidence(2, o), HypothesisError);
}

TEST_CASE("conjectured values") {
    CHECK(conjecture_g(1) == 1);
    CHECK(conjecture_g(4) == 9);
    CHECK(conjecture_g(4) + 3 * 4 + 1 == 22);
    CHECK(conjecture_g(2) == 3);
    CHECK(conjecture_g(3) == 7);
    RunOptions o;
    const auto r = conjecture_char0_harness(2, o);
    CHECK(r.pass());
    CHECK(r.artifacts().at("label") == "EVIDENCE");
    for (const auto& row : r.artifacts().at("rows")) CHECK(row.contains("conjectured_inside_bracket"));
}
