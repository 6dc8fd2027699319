#include "reglab/families/graded_family.hpp"

#include <algorithm>
#include <stdexcept>

namespace reglab {

GradedFamily::GradedFamily(std::string kind, RingSpec ring, Rule rule, nlohmann::json description)
    : kind_(std::move(kind)), ring_(std::move(ring)), rule_(std::move(rule)),
      description_(std::move(description)), memo_(std::make_shared<Memo>()) {}

MonomialIdeal GradedFamily::member(unsigned n) const {
    if (n == 0) return MonomialIdeal::unit(ring_);
    {
        std::lock_guard<std::mutex> lock(memo_->mu);
        if (auto it = memo_->members.find(n); it != memo_->members.end()) return it->second;
    }
    // Computed outside the lock: rules may recurse into smaller indices.
    MonomialIdeal I = rule_(n, *this);
    std::lock_guard<std::mutex> lock(memo_->mu);
    return memo_->members.emplace(n, std::move(I)).first->second;
}

GradedFamily powers_family(const MonomialIdeal& I) {
    return GradedFamily("powers", I.ring(),
                        [I](unsigned n, const GradedFamily& self) {
                            return n == 1 ? I : product(self.member(n - 1), I);
                        },
                        {{"kind", "powers"}, {"ideal", I.to_string()}});
}

GradedFamily closure_powers_family(const MonomialIdeal& I) {
    return GradedFamily("closure_powers", I.ring(),
                        [I](unsigned n, const GradedFamily&) { return integral_closure(power(I, n)); },
                        {{"kind", "closure_powers"}, {"ideal", I.to_string()}});
}

GradedFamily symbolic_min_family(const MonomialIdeal& I) {
    return GradedFamily("symbolic_min", I.ring(),
                        [I](unsigned n, const GradedFamily&) { return symbolic_power_min(I, n); },
                        {{"kind", "symbolic_min"}, {"ideal", I.to_string()}});
}

GradedFamily mixed_family(const MonomialIdeal& J, const MonomialIdeal& I, const GrowthExpr& a) {
    return GradedFamily("mixed", I.ring(),
                        [J, I, a](unsigned n, const GradedFamily&) {
                            long long an = a(n);
                            if (an < 0) throw std::domain_error("mixed family exponent a(n) is negative");
                            return product(power(J, static_cast<unsigned>(an)), power(I, n));
                        },
                        {{"kind", "mixed"}, {"J", J.to_string()}, {"I", I.to_string()}, {"a", a.text()}});
}

GradedFamily truncation_family(const GradedFamily& base, unsigned a) {
    if (a < 1) throw std::invalid_argument("truncation index must be at least 1");
    return GradedFamily("truncation", base.ring(),
                        [base, a](unsigned n, const GradedFamily& self) {
                            if (n <= a) return base.member(n);
                            MonomialIdeal acc = MonomialIdeal::zero(base.ring());
                            for (unsigned i = 1; i <= n / 2; ++i)
                                acc = sum(acc, product(self.member(i), self.member(n - i)));
                            return acc;
                        },
                        {{"kind", "truncation"}, {"base", base.description()}, {"a", a}});
}

GradedFamily closure_family(const GradedFamily& base) {
    return GradedFamily("closure", base.ring(),
                        [base](unsigned n, const GradedFamily&) { return integral_closure(base.member(n)); },
                        {{"kind", "closure"}, {"base", base.description()}});
}

GradedFamily explicit_family(RingSpec ring, std::string name, std::function<MonomialIdeal(unsigned)> rule) {
    return GradedFamily("explicit", std::move(ring),
                        [rule](unsigned n, const GradedFamily&) { return rule(n); },
                        {{"kind", "explicit"}, {"name", name}});
}

std::string canonical_preset_name(const std::string& name) {
    std::string s;
    for (char c : name) s += c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "ex-diverge" || s == "diverge") return "ex-diverge";
    if (s == "distinct-lims" || s == "ex-distinct-lims") return "distinct-lims";
    if (s == "mprimary-counter" || s == "ex-mprimarycounter" || s == "ex.mprimarycounter") return "mprimary-counter";
    if (s == "ann-not0" || s == "ex-annnot0" || s == "ex.annnot0") return "ann-not0";
    throw std::invalid_argument("unknown preset '" + name + "'");
}

namespace {

// (x,y)^d in the ring whose first two variables are x, y.
MonomialIdeal xy_power(const RingSpec& R, unsigned d) {
    std::vector<Monomial> g;
    for (unsigned i = 0; i <= d; ++i) g.push_back(Monomial{static_cast<int>(i), static_cast<int>(d - i)});
    return MonomialIdeal(R, g);
}

}  // namespace

GradedFamily preset_family(const std::string& name, const nlohmann::json& params) {
    const std::string id = canonical_preset_name(name);
    const std::uint32_t chr = params.value("char", 0u);
    nlohmann::json desc = {{"kind", "preset"}, {"name", id}};
    if (id == "ex-diverge" || id == "distinct-lims") {
        RingSpec R = make_ring_spec(chr, {"x", "y", "a", "b"});
        MonomialIdeal A = parse_monomial_ideal(R, "a^4, a^3*b, a*b^3, b^4");
        Monomial a2b2{0, 0, 2, 2};
        if (id == "ex-diverge") {
            GrowthExpr f = GrowthExpr::parse(params.value("f", std::string("n^2")));
            desc["f"] = f.text();
            return GradedFamily("preset", R,
                                [R, A, a2b2, f](unsigned n, const GradedFamily&) {
                                    long long fn = f(n);
                                    if (fn < 0) throw std::domain_error("f(n) must be nonnegative");
                                    return sum(product(A, xy_power(R, n)),
                                               multiply(xy_power(R, static_cast<unsigned>(fn)), a2b2));
                                },
                                desc);
        }
        return GradedFamily("preset", R,
                            [R, A, a2b2](unsigned n, const GradedFamily&) {
                                int e = static_cast<int>(n);
                                MonomialIdeal B(R, {Monomial{e, 0, 2, 2}, Monomial{0, e, 2, 2}});
                                return sum(product(A, xy_power(R, n)), B);
                            },
                            desc);
    }
    if (id == "mprimary-counter") {
        RingSpec R = make_ring_spec(chr, {"x", "y"});
        // Lattice points of conv{(5n,0),(3n+1,1),(0,2n)} + orthant.
        return GradedFamily("preset", R,
                            [R](unsigned n, const GradedFamily&) {
                                int m = static_cast<int>(n);
                                MonomialIdeal V(R, {Monomial{5 * m, 0}, Monomial{3 * m + 1, 1}, Monomial{0, 2 * m}});
                                return integral_closure(V);
                            },
                            desc);
    }
    RingSpec R = make_ring_spec(chr, {"x", "a", "b"});
    return GradedFamily("preset", R,
                        [R](unsigned n, const GradedFamily&) {
                            MonomialIdeal xa(R, {Monomial{1, 1, 0}});
                            if (n % 2 == 0) return sum(power(MonomialIdeal(R, {Monomial{0, 5, 0}, Monomial{0, 0, 2}}), n), xa);
                            return sum(MonomialIdeal(R, {Monomial{1, 0, 2 * static_cast<int>(n)}}), xa);
                        },
                        desc);
}

namespace {
RingSpec ring_field(const nlohmann::json& j) {
    if (!j.contains("ring")) throw std::invalid_argument("family spec needs a ring");
    const auto& r = j.at("ring");
    return r.is_string() ? parse_ring_argument(r.get<std::string>()) : ring_spec_from_json(r);
}
}  // namespace

GradedFamily family_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "preset") return preset_family(j.at("name").get<std::string>(), j);
    if (kind == "truncation") return truncation_family(family_from_json(j.at("base")), j.at("a").get<unsigned>());
    if (kind == "closure") return closure_family(family_from_json(j.at("base")));
    RingSpec R = ring_field(j);
    if (kind == "powers") return powers_family(parse_monomial_ideal(R, j.at("ideal").get<std::string>()));
    if (kind == "closure_powers")
        return closure_powers_family(parse_monomial_ideal(R, j.at("ideal").get<std::string>()));
    if (kind == "symbolic_min") return symbolic_min_family(parse_monomial_ideal(R, j.at("ideal").get<std::string>()));
    if (kind == "mixed")
        return mixed_family(parse_monomial_ideal(R, j.at("J").get<std::string>()),
                            parse_monomial_ideal(R, j.at("I").get<std::string>()),
                            GrowthExpr::parse(j.at("a").get<std::string>()));
    throw std::invalid_argument("unknown family kind '" + kind + "'");
}

}  // namespace reglab
