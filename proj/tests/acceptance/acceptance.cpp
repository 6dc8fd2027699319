#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

#include "reglab/families/asymptotics.hpp"
#include "reglab/monomial/regularity.hpp"
#include "reglab/paperlab/experiments.hpp"

using namespace reglab;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) pass = false;
        notes.push_back((ok ? "ok " : "MISMATCH ") + what);
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::string str(const json& j) { return j.dump(); }

RunOptions options() {
    RunOptions o;
    if (const char* env = std::getenv("REGLAB_CACHE"); env && *env) o.cache.emplace(env);
    return o;
}

MonomialIdeal times(const MonomialIdeal& I, const Monomial& m) { return multiply(I, m); }

// Initial ideal of Q^n + (f^n), n = 2^s, read off the stated formula.
MonomialIdeal stated_initial_two_powers(unsigned n) {
    const RingSpec R = paper_ring_spec(2);
    const int m = static_cast<int>(n);
    MonomialIdeal I = sum(q_power(R, m), MonomialIdeal(R, {Monomial{m, m, m, 0}}));
    unsigned s = 0;
    while ((1u << s) < n) ++s;
    if (s % 2) {
        I = sum(I, times(q_power(R, (m - 2) / 3), Monomial{2 * m + 1, 1, 0, m}));
        I = sum(I, times(q_power(R, (m - 2) / 3), Monomial{2, 2 * m + 1, 0, m}));
    } else {
        I = sum(I, times(q_power(R, (m - 4) / 3), Monomial{2 * m + 2, 2, 0, m}));
        I = sum(I, times(q_power(R, (m - 1) / 3), Monomial{2, 2 * m, 0, m}));
        I = sum(I, MonomialIdeal(R, {Monomial{2 * m, m + 1, 0, m}}));
    }
    return I;
}

Outcome gb_replication(unsigned n, std::size_t count) {
    Outcome out;
    const auto R = paper_ring_f2();
    const auto res = buchberger(paper_input(R, n, n));
    out.expect(res.basis.size() == count,
               "basis size " + std::to_string(res.basis.size()) + " (stated " + std::to_string(count) + ")");
    const auto in = leading_monomial_ideal(res.basis, R->spec);
    out.expect(in == stated_initial_two_powers(n), "initial ideal equals the stated formula");
    out.expect(verify_gb_certificate(res.basis).pass, "certificate");
    return out;
}

void expect_report(Outcome& out, const ExperimentReport& r, const std::string& label) {
    for (const auto& a : r.assertions())
        if (!a.pass) out.expect(false, label + " " + a.id + ": expected " + str(a.expected) + ", computed " + str(a.computed));
    out.expect(r.pass(), label + " report verdict");
}

Outcome criterion_mixed_powers() {
    Outcome out;
    const auto o = options();
    const auto r1 = verify_theorem({TheoremId::DoubleOdd, 16, 8}, o);
    expect_report(out, r1, "(16,8)");
    const auto b1 = r1.artifacts().at("bracket");
    out.expect(b1.at("lower") == 71, "(16,8) lower bound " + str(b1.at("lower")) + " from the witness");
    out.expect(b1.at("upper").get<int>() <= 74, "(16,8) bracket " + str(b1) + " inside [71,74]");
    const auto r2 = verify_theorem({TheoremId::DoubleEven, 8, 4}, o);
    expect_report(out, r2, "(8,4)");
    const auto b2 = r2.artifacts().at("bracket");
    out.expect(b2.at("lower").get<int>() >= 35 && b2.at("upper").get<int>() <= 38,
               "(8,4) bracket " + str(b2) + " inside [35,38]");
    expect_report(out, verify_theorem({TheoremId::DoubleSmall, 8, 1}, o), "(8,1)");
    expect_report(out, verify_theorem({TheoremId::DoubleSmall, 8, 2}, o), "(8,2)");
    return out;
}

Outcome criterion_monomial() {
    Outcome out;
    const RingSpec R = paper_ring_spec(2);
    for (int n = 1; n <= 6; ++n) {
        const int r = cm_regularity(q_power(R, n), 2);
        out.expect(r == 3 * n + 2, "reg Q^" + std::to_string(n) + " = " + std::to_string(r));
    }
    const RingSpec XY = make_ring_spec(2, {"x", "y"});
    for (unsigned d = 1; d <= 8; ++d) {
        const int r = cm_regularity(power(parse_monomial_ideal(XY, "x, y"), d), 2);
        out.expect(r == static_cast<int>(d), "reg (x,y)^" + std::to_string(d) + " = " + std::to_string(r));
    }
    const int r6 = cm_regularity(parse_monomial_ideal(R, "a^4*b^2, a^3*b^3, a^2*b^4"), 2);
    out.expect(r6 == 6, "reg a^2b^2(a^2,ab,b^2) = " + std::to_string(r6));
    const RingSpec XAB = make_ring_spec(2, {"x", "a", "b"});
    for (unsigned n = 1; n <= 3; ++n) {
        const auto A = sum(power(parse_monomial_ideal(XAB, "a^5, b^2"), n), parse_monomial_ideal(XAB, "x*a"));
        const auto B = parse_monomial_ideal(XAB, "x*b^" + std::to_string(2 * n) + ", x*a");
        const int ra = cm_regularity(A, 2), rb = cm_regularity(B, 2);
        out.expect(ra == static_cast<int>(5 * n + 1), "n=" + std::to_string(n) + ": reg (a^5,b^2)^n+(xa) = " + std::to_string(ra));
        out.expect(rb == static_cast<int>(2 * n + 1), "n=" + std::to_string(n) + ": reg (xb^2n)+(xa) = " + std::to_string(rb));
    }
    return out;
}

Outcome criterion_counterexamples() {
    Outcome out;
    const auto D = preset_family("ex-diverge", {{"f", "n^2"}});
    for (unsigned n = 1; n <= 6; ++n) {
        const int f = static_cast<int>(n * n);
        const auto I = D.member(n);
        const int r = cm_regularity(I);
        const std::string tag = "ex-diverge n=" + std::to_string(n) + ": ";
        out.expect(r == f + 5, tag + "reg " + std::to_string(r) + " (stated " + std::to_string(f + 5) + ")");
        out.expect(I.max_gen_degree() == f + 4, tag + "d " + std::to_string(I.max_gen_degree()));
        out.expect(I.num_min_gens() == static_cast<std::size_t>(f + 4 * static_cast<int>(n) + 5),
                   tag + "mu " + std::to_string(I.num_min_gens()));
    }
    const auto L = preset_family("distinct-lims");
    const RingSpec R = L.ring();
    for (unsigned n = 1; n <= 6; ++n) {
        const int m = static_cast<int>(n);
        const auto I = L.member(n);
        const auto C = integral_closure(I);
        const std::string tag = "distinct-lims n=" + std::to_string(n) + ": ";
        const int r = cm_regularity(I);
        out.expect(r == 2 * m + 4, tag + "reg " + std::to_string(r) + " (stated " + std::to_string(2 * m + 4) + ")");
        out.expect(I.max_gen_degree() == m + 4, tag + "d " + std::to_string(I.max_gen_degree()));
        out.expect(C == product(power(parse_monomial_ideal(R, "a, b"), 4), power(parse_monomial_ideal(R, "x, y"), n)),
                   tag + "closure (a,b)^4(x,y)^n");
        const int rc = cm_regularity(C);
        out.expect(rc == m + 4, tag + "reg closure " + std::to_string(rc));
    }
    return out;
}

Outcome criterion_polyhedral() {
    Outcome out;
    const auto F = preset_family("mprimary-counter");
    const auto g = check_graded(F, 8);
    out.expect(g.pass, "graded to N=8" + (g.pass ? std::string() : ": " + g.detail));
    const auto s = delta_family_sample(F, 20);
    bool all5 = true;
    for (const auto& d : s.per_n) all5 = all5 && d == 5;
    out.expect(all5, "per-n delta = 5 for n <= 20");
    out.expect(s.running_inf.back() == 5, "inf delta over n <= 20 = " + rational_string(s.running_inf.back()));
    out.expect(s.region_delta == 3, "sampled-region delta = " + rational_string(s.region_delta));
    return out;
}

Outcome criterion_nolimit() {
    Outcome out;
    const auto r = nolimit_evidence(3, options());
    expect_report(out, r, "nolimit");
    const auto& a = r.artifacts();
    const auto& row8 = a.at("two_powers").at(0);
    const mpq_class lo(row8.at("ratio_lower").get<std::string>()), hi(row8.at("ratio_upper").get<std::string>());
    out.expect(row8.at("n") == 8 && lo >= 5 && hi <= mpq_class(21, 4),
               "n=8: reg/n in [" + lo.get_str() + "," + hi.get_str() + "] inside [5,21/4]");
    const auto& row24 = a.at("three_times_two_powers").at(0);
    const mpq_class lo24(row24.at("ratio_lower").get<std::string>());
    out.expect(row24.at("n") == 24 && lo24 >= 6, "n=24: reg/n >= " + lo24.get_str());
    const auto& x8 = a.at("intersection_n8");
    out.expect(x8.at("reg_J").at("lower") == x8.at("reg_sum_plus_one").at("lower") &&
                   x8.at("reg_J").at("upper") == x8.at("reg_sum_plus_one").at("upper"),
               "n=8: reg(Q^8 cap (f^8)) " + str(x8.at("reg_J").at("lower")) + " = reg(Q^8+(f^8)) + 1 " +
                   str(x8.at("reg_sum_plus_one").at("lower")));
    out.expect(row24.at("intersection_lower_by_identity") == row24.at("lower").get<int>() + 1,
               "n=24: reg(Q^24 cap (f^24)) >= " + str(row24.at("intersection_lower_by_identity")) + " by the identity");
    return out;
}

Outcome criterion_symbolic() {
    Outcome out;
    const auto r = symbolic_reg_bracket(8, options(), 2);
    const auto& a = r.artifacts();
    out.expect(a.at("formula_applicable") == true, "hypothesis reg(Q^8+(f^8)) > 26");
    const auto b = a.at("bracket");
    out.expect(b.at("lower") == 41 && b.at("upper") == 43,
               "bracket [" + str(b.at("lower")) + "," + str(b.at("upper")) + "] (stated [41,43])");
    out.expect(b.at("lower").get<int>() >= 41 && b.at("upper").get<int>() <= 43, "bracket inside [41,43]");
    out.expect(a.at("lower_argmax_k") == json::array({8}),
               "term attaining the lower bound: k in " + str(a.at("lower_argmax_k")) + " (stated k=8)");
    out.notes.push_back("info refined bracket " + str(a.at("refined_bracket")));
    for (const char* id : {"cross_check.n2.z_saturation_is_Q_power", "cross_check.n2.x_saturation_is_fz_power",
                           "cross_check.n2.symbolic_equals_intersection"}) {
        const auto* x = r.find(id);
        out.expect(x && x->pass, id);
    }
    return out;
}

Outcome criterion_properties() {
    Outcome out;
    const std::string filter =
        "Buchberger output is self-certifying and order independent,Macaulay*,membership in powers of*,"
        "artinian regularity oracle,Hilbert function from valuation values,"
        "regularity is subadditive on m-primary families";
    std::ostringstream count_out;
    {
        const std::string tc = "--test-case=" + filter;
        const char* argv[] = {"acceptance", "--count", tc.c_str()};
        doctest::Context c(3, argv);
        c.setCout(&count_out);
        c.run();
    }
    std::smatch m;
    const std::string counted = count_out.str();
    const int selected = std::regex_search(counted, m, std::regex("current filters: (\\d+)")) ? std::stoi(m[1]) : -1;
    out.expect(selected == 6, std::to_string(selected) + " of 6 property suites selected");
    std::ostringstream log;
    doctest::Context c;
    c.setOption("test-case", filter.c_str());
    c.setOption("no-intro", true);
    c.setOption("no-version", true);
    c.setCout(&log);
    const int rc = c.run();
    out.expect(rc == 0, "property suites");
    if (rc) std::cout << log.str();
    return out;
}

Outcome criterion_char0() {
    Outcome out;
    const auto r = conjecture_char0_harness(3, options());
    expect_report(out, r, "char0");
    out.expect(r.artifacts().at("label") == "EVIDENCE", "labelled as evidence");
    for (const auto& row : r.artifacts().at("rows")) {
        const auto& b = row.at("bracket");
        out.notes.push_back("info n=" + str(row.at("n")) + ": bracket [" + str(b.at("lower")) + "," +
                            str(b.value("upper", json())) + "], conjectured " + str(row.at("conjectured")) +
                            (row.at("conjectured_inside_bracket").get<bool>() ? " inside" : " outside"));
    }
    return out;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "GB replication n=8", 30, [] { return gb_replication(8, 16); }},
        {2, "GB replication n=16", 600, [] { return gb_replication(16, 30); }},
        {3, "n=24 certificate", 3600,
         [] {
             Outcome out;
             const auto r = verify_theorem({TheoremId::ThreeTimesTwoPower, 24, 24}, options());
             expect_report(out, r, "(24,24)");
             out.expect(r.artifacts().at("witness") == "x^17*y^56*a^7*b^63", "witness " + str(r.artifacts().at("witness")));
             out.expect(r.artifacts().at("bracket").at("lower") == 144, "reg >= " + str(r.artifacts().at("bracket").at("lower")));
             return out;
         }},
        {4, "mixed powers", 600, criterion_mixed_powers},
        {5, "monomial regularity engine", 60, criterion_monomial},
        {6, "counterexample families", 60, criterion_counterexamples},
        {7, "polyhedral asymptotics", 60, criterion_polyhedral},
        {8, "no-limit evidence", 5400, criterion_nolimit},
        {9, "symbolic powers", 900, criterion_symbolic},
        {10, "property suites", 600, criterion_properties},
        {11, "char-0 harness (evidence)", 1800, criterion_char0},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = out.pass && in_time;
        all = all && pass;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " (" << secs << " s, limit "
             << c.limit_seconds << " s)";
        std::cout << line.str() << "\n";
        for (const auto& n : out.notes)
            if (!pass || n.rfind("info", 0) == 0) std::cout << "    " << n << "\n";
        if (!in_time) std::cout << "    MISMATCH time limit exceeded\n";
        std::cout.flush();
    }
    return all ? 0 : 1;
}
