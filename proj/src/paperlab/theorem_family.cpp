#include "reglab/paperlab/theorem_family.hpp"

#include <algorithm>
#include <cctype>

#include "reglab/core/parse.hpp"

namespace reglab {

RingSpec paper_ring_spec(std::uint32_t characteristic) {
    return make_ring_spec(characteristic, {"x", "y", "a", "b"});
}

RingPtr<PrimeField> paper_ring_f2() {
    static const RingPtr<PrimeField> R = make_ring<PrimeField>(paper_ring_spec(2));
    return R;
}

MonomialIdeal q_power(const RingSpec& R, int e) {
    if (e < 0) return MonomialIdeal::zero(R);
    std::vector<Monomial> g;
    for (int i = 0; i <= e; ++i) g.push_back(Monomial{3 * i, 3 * (e - i)});
    return MonomialIdeal(R, std::move(g));
}

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::TwoPowers: return "GB_2powers";
        case TheoremId::ThreeTimesTwoPower: return "GB_3times2power";
        case TheoremId::DoubleOdd: return "GB_double2powers_odd";
        case TheoremId::DoubleEven: return "GB_double2powers_even";
        case TheoremId::DoubleSmall: return "GB_double2powers_12";
    }
    return "?";
}

namespace {

std::optional<unsigned> log2_exact(unsigned v) {
    if (v == 0 || (v & (v - 1)) != 0) return std::nullopt;
    unsigned e = 0;
    while ((1u << e) < v) ++e;
    return e;
}

int exact_third(int v) {
    if (v % 3 != 0) throw std::logic_error("exponent not divisible by 3");
    return v / 3;
}

void validate(const TheoremSpec& t) {
    const auto s = log2_exact(t.n);
    switch (t.id) {
        case TheoremId::TwoPowers:
            if (!s || *s < 3 || t.k != t.n) throw HypothesisError("GB_2powers needs n = k = 2^s with s >= 3");
            return;
        case TheoremId::ThreeTimesTwoPower: {
            const auto st = t.n % 3 == 0 ? log2_exact(t.n / 3) : std::nullopt;
            if (!st || *st < 3 || *st % 2 == 0 || t.k != t.n)
                throw HypothesisError("GB_3times2power needs n = k = 3*2^s with s >= 3 odd");
            return;
        }
        case TheoremId::DoubleOdd:
        case TheoremId::DoubleEven:
        case TheoremId::DoubleSmall: {
            const auto u = log2_exact(t.k);
            if (!s || !u || *u >= *s) throw HypothesisError("double-power families need n = 2^s, k = 2^u, u < s");
            if (t.id == TheoremId::DoubleOdd && (*u < 3 || *u % 2 == 0))
                throw HypothesisError("GB_double2powers_odd needs u odd and u >= 3");
            if (t.id == TheoremId::DoubleEven && (*u < 2 || *u % 2 == 1))
                throw HypothesisError("GB_double2powers_even needs u even and u >= 2");
            if (t.id == TheoremId::DoubleSmall && (t.k > 2 || *s < 2))
                throw HypothesisError("GB_double2powers_12 needs k in {1,2} and n = 2^s with s >= 2");
            return;
        }
    }
}

std::string normalize(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != '_' && c != '-' && c != '.') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

}  // namespace

std::optional<TheoremSpec> theorem_for(unsigned n, unsigned k) {
    for (auto id : {TheoremId::TwoPowers, TheoremId::ThreeTimesTwoPower, TheoremId::DoubleOdd, TheoremId::DoubleEven,
                    TheoremId::DoubleSmall}) {
        TheoremSpec t{id, n, k};
        try {
            validate(t);
            return t;
        } catch (const HypothesisError&) {
        }
    }
    return std::nullopt;
}

TheoremSpec parse_theorem_spec(const std::string& name, unsigned n, std::optional<unsigned> k) {
    const std::string s = normalize(name);
    TheoremSpec t{TheoremId::TwoPowers, n, k.value_or(n)};
    if (s.find("3times2power") != std::string::npos || s.find("limregge6") != std::string::npos) {
        t.id = TheoremId::ThreeTimesTwoPower;
    } else if (s.find("double2powers") != std::string::npos || s.find("qnfk") != std::string::npos) {
        if (!k) throw HypothesisError("double-power families need k");
        if (s.size() >= 3 && s.compare(s.size() - 3, 3, "odd") == 0) {
            t.id = TheoremId::DoubleOdd;
        } else if (s.size() >= 4 && s.compare(s.size() - 4, 4, "even") == 0) {
            t.id = TheoremId::DoubleEven;
        } else if (s.size() >= 2 && s.compare(s.size() - 2, 2, "12") == 0) {
            t.id = TheoremId::DoubleSmall;
        } else {
            const auto u = log2_exact(*k);
            if (!u) throw HypothesisError("k must be a power of 2");
            t.id = *u <= 1 ? TheoremId::DoubleSmall : (*u % 2 ? TheoremId::DoubleOdd : TheoremId::DoubleEven);
        }
    } else if (s.find("2powers") != std::string::npos) {
        t.id = TheoremId::TwoPowers;
    } else {
        throw std::invalid_argument("unknown theorem id '" + name + "'");
    }
    validate(t);
    return t;
}

namespace {

struct Builder {
    RingPtr<PrimeField> R = paper_ring_f2();
    TheoremFamily fam;

    F2Poly mono(int x, int y, int a = 0, int b = 0) const { return F2Poly::monomial(R, Monomial{x, y, a, b}); }
    MonomialIdeal Q(int e) const { return q_power(R->spec, e); }
    MonomialIdeal principal(int x, int y, int a = 0, int b = 0) const {
        return MonomialIdeal(R->spec, {Monomial{x, y, a, b}});
    }
    MonomialIdeal pure_pair(int e, int p) const {
        // (x^e, y^e)^p; zero when p < 0
        if (p < 0) return MonomialIdeal::zero(R->spec);
        return power(MonomialIdeal(R->spec, {Monomial{e, 0}, Monomial{0, e}}), static_cast<unsigned>(p));
    }
    // Natural generators c * m * g over the minimal generators g of M.
    void add(int type, const F2Poly& c, const Monomial& m, const MonomialIdeal& M) {
        for (const auto& g : M.gens()) {
            fam.gens.push_back(c.mul_term(R->field.one(), m * g));
            fam.type.push_back(type);
        }
    }
    void add(int type, const F2Poly& c) {
        fam.gens.push_back(c);
        fam.type.push_back(type);
    }
};

MonomialIdeal times(const Monomial& m, const MonomialIdeal& I) { return multiply(I, m); }

void build_two_powers(Builder& B) {
    const int n = static_cast<int>(B.fam.spec.n);
    const bool s_odd = *log2_exact(B.fam.spec.n) % 2 == 1;
    const F2Poly one = B.mono(0, 0);
    const F2Poly sum2n = B.mono(2 * n, 0) + B.mono(0, 2 * n);
    const auto& R = B.R->spec;
    B.add(1, one, Monomial{}, B.Q(n));
    B.add(2, frobenius_power(paper_f(B.R), *log2_exact(B.fam.spec.n)));
    MonomialIdeal in = sum(B.Q(n), B.principal(n, n, n, 0));
    if (s_odd) {
        const int e = exact_third(n - 2);
        B.add(3, sum2n, Monomial{1, 1, 0, n}, B.Q(e));
        B.add(4, one, Monomial{2, 2 * n + 1, 0, n}, B.Q(e));
        in = sum(in, times(Monomial{2 * n + 1, 1, 0, n}, B.Q(e)));
        in = sum(in, times(Monomial{2, 2 * n + 1, 0, n}, B.Q(e)));
        B.fam.expected_count = static_cast<std::size_t>((5 * n + 8) / 3);
        B.fam.witness = B.mono(n, 2 * n + 1, n - 1, n - 1);
    } else {
        B.add(3, sum2n, Monomial{2, 2, 0, n}, B.Q(exact_third(n - 4)));
        MonomialIdeal t4 = sum(times(Monomial{2, 2 * n}, B.Q(exact_third(n - 1))), B.principal(2 * n, n + 1));
        B.add(4, one, Monomial{0, 0, 0, n}, t4);
        in = sum(in, times(Monomial{2 * n + 2, 2, 0, n}, B.Q(exact_third(n - 4))));
        in = sum(in, times(Monomial{0, 0, 0, n}, t4));
        B.fam.expected_count = static_cast<std::size_t>((5 * n + 10) / 3);
        B.fam.witness = B.mono(n + 1, 2 * n, n - 1, n - 1);
    }
    (void)R;
    B.fam.expected_initial = in;
    B.fam.stated_max_degree = 4 * n + 1;
    B.fam.witness_degree = 5 * n - 1;
    B.fam.stated_lower = 5 * n;
    B.fam.stated_upper = 5 * n + 2;
}

void build_three_times(Builder& B) {
    const int n = static_cast<int>(B.fam.spec.n);
    const int t = n / 3;
    const auto& R = B.R;
    auto P = [&](const char* text) { return parse_polynomial(R, text); };
    const F2Poly one = B.mono(0, 0);
    const F2Poly F3 = P("(x^3*y+x*y^3)*a^2+(x^4+y^4)*a*b+(x^3*y+x*y^3)*b^2");
    const F2Poly F5 = P("y^3*a^2+x^3*a*b+y^3*b^2");
    const F2Poly F7 = P("x*y^5*a^3+y^6*a^2*b+x^3*y^3*a*b^2+(x^6+x^4*y^2+y^6)*b^3");
    const F2Poly F9 = P("y^6*a^2+x^3*y^3*a*b+x^6*b^2");
    const F2Poly F10 = P("y^6*a^2+x^3*y^3*a*b+(x^6+y^6)*b^2");
    const F2Poly F12 = P("y^3*a+x^3*b");
    const F2Poly F13 = P("x^3*a+y^3*b");
    const unsigned s = *log2_exact(static_cast<unsigned>(t));
    auto fp = [&](const F2Poly& g) { return frobenius_power(g, s); };
    const F2Poly f = paper_f(R);

    B.add(1, one, Monomial{}, B.Q(3 * t));
    B.add(2, power(frobenius_power(f, s), 3));
    B.add(3, fp(F3), Monomial{t, t, 0, t}, B.Q(t));
    B.add(4, B.mono(6 * t, 0) + B.mono(0, 6 * t), Monomial{t, t, t, 2 * t}, B.Q(exact_third(t + 1)));
    B.add(5, fp(F5), Monomial{2 * t + 1, 2 * t + 4, 0, t}, B.Q(exact_third(2 * t - 4)));
    B.add(6, B.mono(8 * t, 0) + B.mono(0, 8 * t), Monomial{1, 1, 0, 4 * t}, B.Q(exact_third(t - 2)));
    B.add(7, fp(F7), Monomial{t, t + 2, 0, t}, B.Q(exact_third(t - 2)));
    B.add(8, one, Monomial{2, 8 * t + 1, 0, 4 * t}, B.Q(exact_third(t - 2)));
    B.add(9, fp(F9).mul_term(R->field.one(), Monomial{t, 2 * t + 1, 0, 2 * t}));
    B.add(10, fp(F10), Monomial{t + 3, t + 3, 0, 2 * t}, B.Q(exact_third(t - 5)));
    B.add(11, B.mono(2 * t + 1, 7 * t, t, 4 * t));
    B.add(12, fp(F12).mul_term(R->field.one(), Monomial{4 * t, 2 * t + 1, 0, 5 * t}));
    B.add(13, fp(F13).mul_term(R->field.one(), Monomial{2 * t + 1, 4 * t, 0, 5 * t}));
    B.add(14, one, Monomial{4 * t, 4 * t, 0, 7 * t}, B.pure_pair(t + 1, 1));
    B.add(15, one, Monomial{2 * t + 1, 2 * t + 1, 0, 8 * t}, B.pure_pair(5 * t - 1, 1));

    // Leading-term ideals of the 15 types, written out monomially.
    MonomialIdeal in = B.Q(n);
    auto acc = [&](const Monomial& m, const MonomialIdeal& M) { in = sum(in, times(m, M)); };
    const MonomialIdeal unit = MonomialIdeal::unit(R->spec);
    acc(Monomial{n, n, n, 0}, unit);
    acc(Monomial{4 * t, 2 * t, 2 * t, t}, B.Q(t));
    acc(Monomial{7 * t, t, t, 2 * t}, B.Q(exact_third(t + 1)));
    acc(Monomial{2 * t + 1, 5 * t + 4, 2 * t, t}, B.Q(exact_third(2 * t - 4)));
    acc(Monomial{8 * t + 1, 1, 0, 4 * t}, B.Q(exact_third(t - 2)));
    acc(Monomial{2 * t, 6 * t + 2, 3 * t, t}, B.Q(exact_third(t - 2)));
    acc(Monomial{2, 8 * t + 1, 0, 4 * t}, B.Q(exact_third(t - 2)));
    acc(Monomial{t, 8 * t + 1, 2 * t, 2 * t}, unit);
    acc(Monomial{t + 3, 7 * t + 3, 2 * t, 2 * t}, B.Q(exact_third(t - 5)));
    acc(Monomial{2 * t + 1, 7 * t, t, 4 * t}, unit);
    acc(Monomial{4 * t, 5 * t + 1, t, 5 * t}, unit);
    acc(Monomial{5 * t + 1, 4 * t, t, 5 * t}, unit);
    acc(Monomial{4 * t, 4 * t, 0, 7 * t}, B.pure_pair(t + 1, 1));
    acc(Monomial{2 * t + 1, 2 * t + 1, 0, 8 * t}, B.pure_pair(5 * t - 1, 1));
    B.fam.expected_initial = in;
    B.fam.expected_count = static_cast<std::size_t>((19 * n + 111) / 9);
    B.fam.stated_max_degree = 17 * n / 3 + 1;
    B.fam.witness = B.mono(2 * t + 1, 7 * t, t - 1, 8 * t - 1);
    B.fam.witness_degree = 6 * n - 1;
    B.fam.stated_lower = 6 * n;
}

// Initial ideal, witness and bracket of Q^n + (f^k) for n = 2^s, k = 2^u, u < s.
void double_initial(Builder& B, bool u_odd) {
    const int n = static_cast<int>(B.fam.spec.n), k = static_cast<int>(B.fam.spec.k);
    MonomialIdeal in = sum(B.Q(n), B.principal(k, k, k, 0));
    auto acc = [&](const Monomial& m, const MonomialIdeal& M) { in = sum(in, times(m, M)); };
    auto Qf = [&](int num) { return num < 0 ? B.Q(-1) : B.Q(exact_third(num)); };
    const int r = n / (2 * k);
    if (u_odd) {
        acc(Monomial{2 * k + 1, 1, 0, k}, Qf(3 * n - 2 * k - 2));
        acc(Monomial{2, 3 * n - 2 * k + 3, 0, k}, Qf(2 * k - 4));
        acc(Monomial{4 * k + 2, 2, 0, 2 * k}, product(B.pure_pair(6 * k, r - 1), Qf(2 * k - 4)));
        acc(Monomial{6 * k + 1, 2 * k + 1, 0, 2 * k}, product(B.pure_pair(6 * k, r - 2), Qf(4 * k - 2)));
        acc(Monomial{1, 3 * n - k + 1, k, k}, Qf(k - 2));
        acc(Monomial{2, 3 * n - k + 3, k, 2 * k}, Qf(k - 5));
    } else {
        acc(Monomial{2 * k + 2, 2, 0, k}, Qf(3 * n - 2 * k - 4));
        acc(Monomial{2, 3 * n - 2 * k + 1, 0, k}, Qf(2 * k - 2));
        acc(Monomial{4 * k + 1, 1, 0, 2 * k}, product(B.pure_pair(6 * k, r - 1), Qf(2 * k - 2)));
        acc(Monomial{6 * k + 2, 2 * k + 2, 0, 2 * k}, product(B.pure_pair(6 * k, r - 2), Qf(4 * k - 4)));
        acc(Monomial{2, 3 * n - k + 2, k, k}, Qf(k - 4));
        acc(Monomial{1, 3 * n - k + 3, k, 2 * k}, Qf(k - 4));
    }
    B.fam.expected_initial = in;
    B.fam.witness = (B.mono(3 * n - k, k) + B.mono(k, 3 * n - k)).mul_term(B.R->field.one(), Monomial{0, 0, k - 1, 2 * k - 1});
    B.fam.witness_degree = 3 * n + 3 * k - 2;
    B.fam.stated_lower = 3 * n + 3 * k - 1;
    B.fam.stated_upper = 3 * n + 3 * k + 2;
    B.fam.stated_max_degree = 3 * (n + k);
    B.fam.expected_count = static_cast<std::size_t>(u_odd ? 3 * n + 1 - (2 * k - 1) / 3 : 3 * n + 1 - (2 * k - 2) / 3);
}

void build_double(Builder& B) {
    const int n = static_cast<int>(B.fam.spec.n), k = static_cast<int>(B.fam.spec.k);
    const unsigned u = *log2_exact(B.fam.spec.k);
    const bool u_odd = u % 2 == 1;
    const F2Poly one = B.mono(0, 0);
    auto binom = [&](int e) { return B.mono(e, 0) + B.mono(0, e); };
    auto Qf = [&](int num) { return num < 0 ? B.Q(-1) : B.Q(exact_third(num)); };
    B.add(1, one, Monomial{}, B.Q(n));
    B.add(2, frobenius_power(paper_f(B.R), u));
    if (B.fam.spec.id == TheoremId::DoubleSmall) {
        if (k == 1) {
            B.add(3, binom(2), Monomial{2, 2, 0, 1}, B.Q(n - 2));
            B.add(4, B.mono(2, 3 * n - 1, 0, 1));
            for (int tau = 0; tau <= n / 2 - 1; ++tau) B.add(5, binom(6 * tau + 4).mul_term(B.R->field.one(), Monomial{1, 3 * n - 5 - 6 * tau, 0, 2}));
            for (int l = 1; l <= n / 2 - 1; ++l) B.add(6, binom(6 * l).mul_term(B.R->field.one(), Monomial{2, 3 * n - 2 - 6 * l, 0, 2}));
        } else {
            B.add(3, binom(4), Monomial{1, 1, 0, 2}, B.Q(n - 2));
            B.add(4, B.mono(2, 3 * n - 1, 0, 2));
            for (int tau = 0; tau <= n / 4 - 1; ++tau) B.add(5, binom(12 * tau + 8).mul_term(B.R->field.one(), Monomial{2, 3 * n - 10 - 12 * tau, 0, 4}));
            for (int l = 1; l <= n / 4 - 1; ++l) B.add(6, binom(12 * l), Monomial{1, 3 * n - 7 - 12 * l, 0, 4}, B.Q(2));
            B.add(7, (B.mono(0, 6, 2, 0) + B.mono(6, 0, 0, 2)).mul_term(B.R->field.one(), Monomial{1, 3 * n - 7, 0, 2}));
        }
    } else if (u_odd) {
        B.add(3, binom(2 * k), Monomial{1, 1, 0, k}, Qf(3 * n - 2 * k - 2));
        B.add(4, one, Monomial{2, 3 * n - 2 * k + 3, 0, k}, Qf(2 * k - 4));
        for (int tau = 0; tau <= n / (2 * k) - 1; ++tau)
            B.add(5, binom(6 * k * tau + 4 * k), Monomial{2, 3 * n - 6 * k + 2 - 6 * k * tau, 0, 2 * k}, Qf(2 * k - 4));
        for (int l = 1; l <= n / (2 * k) - 1; ++l)
            B.add(6, binom(6 * k * l), Monomial{1, 3 * n - 4 * k + 1 - 6 * k * l, 0, 2 * k}, Qf(4 * k - 2));
        B.add(7, B.mono(0, 3 * k, k, 0) + B.mono(3 * k, 0, 0, k), Monomial{1, 3 * n - 4 * k + 1, 0, k}, Qf(k - 2));
        B.add(8, B.mono(0, k, k, 0) + B.mono(k, 0, 0, k), Monomial{2, 3 * n - 2 * k + 3, 0, 2 * k}, Qf(k - 5));
    } else {
        B.add(3, binom(2 * k), Monomial{2, 2, 0, k}, Qf(3 * n - 2 * k - 4));
        B.add(4, one, Monomial{2, 3 * n - 2 * k + 1, 0, k}, Qf(2 * k - 2));
        for (int tau = 0; tau <= n / (2 * k) - 1; ++tau)
            B.add(5, binom(6 * k * tau + 4 * k), Monomial{1, 3 * n - 6 * k + 1 - 6 * k * tau, 0, 2 * k}, Qf(2 * k - 2));
        for (int l = 1; l <= n / (2 * k) - 1; ++l)
            B.add(6, binom(6 * k * l), Monomial{2, 3 * n - 4 * k + 2 - 6 * k * l, 0, 2 * k}, Qf(4 * k - 4));
        B.add(7, B.mono(0, 3 * k, k, 0) + B.mono(3 * k, 0, 0, k), Monomial{2, 3 * n - 4 * k + 2, 0, k}, Qf(k - 4));
        B.add(8, B.mono(0, k, k, 0) + B.mono(k, 0, 0, k), Monomial{1, 3 * n - 2 * k + 3, 0, 2 * k}, Qf(k - 4));
    }
    double_initial(B, u_odd);
}

}  // namespace

TheoremFamily build_theorem_family(const TheoremSpec& spec) {
    validate(spec);
    Builder B;
    B.fam.spec = spec;
    B.fam.expected_initial = MonomialIdeal::zero(B.R->spec);
    B.fam.witness = F2Poly(B.R);
    switch (spec.id) {
        case TheoremId::TwoPowers: build_two_powers(B); break;
        case TheoremId::ThreeTimesTwoPower: build_three_times(B); break;
        default: build_double(B); break;
    }
    return std::move(B.fam);
}

}  // namespace reglab
