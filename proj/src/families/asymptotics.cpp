#include "reglab/families/asymptotics.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace reglab {

std::string rational_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

namespace {
Rational ratio(long a, long b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

nlohmann::json points_json(const std::vector<Point>& pts) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : pts) a.push_back(point_to_string(p));
    return a;
}
}  // namespace

GradedCheck check_graded(const GradedFamily& F, unsigned N) {
    GradedCheck out;
    for (unsigned s = 2; s <= N; ++s) {
        const MonomialIdeal target = F.member(s);
        for (unsigned p = 1; p <= s / 2; ++p) {
            const unsigned q = s - p;
            const MonomialIdeal A = F.member(p), B = F.member(q);
            for (const auto& g : A.gens())
                for (const auto& h : B.gens())
                    if (!target.contains(g * h)) {
                        out.pass = false;
                        out.counterexample = {p, q};
                        out.detail = monomial_to_string(g * h, F.ring()) + " not in I_" + std::to_string(s);
                        return out;
                    }
        }
    }
    return out;
}

nlohmann::json StabilizationVerdict::to_json() const {
    nlohmann::json j = {{"N", N}};
    j["stabilized_at"] = c ? nlohmann::json(*c) : nlohmann::json(nullptr);
    return j;
}

StabilizationVerdict noetherian_stabilization_test(const GradedFamily& F, unsigned N) {
    StabilizationVerdict v;
    v.N = N;
    std::vector<std::optional<MonoPolyhedron>> scaled(N + 1);
    auto get = [&](unsigned n) -> const MonoPolyhedron& {
        if (!scaled[n]) scaled[n] = newton_polyhedron(F.member(n)).scaled(Rational(1, n));
        return *scaled[n];
    };
    for (unsigned c = 1; 2 * c <= N; ++c) {
        bool ok = true;
        for (unsigned m = 2; m * c <= N && ok; ++m) ok = get(c).equals(get(m * c));
        if (ok) {
            v.c = c;
            break;
        }
    }
    return v;
}

nlohmann::json DeltaSample::to_json() const {
    nlohmann::json pn = nlohmann::json::array(), inf = nlohmann::json::array();
    for (const auto& d : per_n) pn.push_back(rational_string(d));
    for (const auto& d : running_inf) inf.push_back(rational_string(d));
    return {{"N", N},
            {"per_n_delta", pn},
            {"running_inf", inf},
            {"union_vertices", points_json(union_vertices)},
            {"union_delta", rational_string(union_delta)},
            {"limit_points", points_json(limit_points)},
            {"region_vertices", points_json(region_vertices)},
            {"region_delta", rational_string(region_delta)}};
}

DeltaSample delta_family_sample(const GradedFamily& F, unsigned N) {
    if (N < 1) throw std::invalid_argument("N must be at least 1");
    DeltaSample s;
    s.N = N;
    const std::size_t r = F.ring().nvars();
    std::vector<Point> pool;
    std::vector<std::vector<Point>> raw(N + 1);
    for (unsigned n = 1; n <= N; ++n) {
        auto NP = newton_polyhedron(F.member(n));
        raw[n] = NP.vertices();
        auto P = NP.scaled(Rational(1, n));
        s.per_n.push_back(P.delta());
        s.running_inf.push_back(n == 1 ? s.per_n.back() : std::min(s.running_inf.back(), s.per_n.back()));
        pool.insert(pool.end(), P.vertices().begin(), P.vertices().end());
    }
    MonoPolyhedron U(r, pool);
    s.union_vertices = U.vertices();
    s.union_delta = U.delta();
    if (N >= 3) {
        for (const auto& v : raw[N])
            for (const auto& u : raw[N - 1]) {
                Point step(r);
                bool nonneg = true;
                for (std::size_t i = 0; i < r; ++i) {
                    step[i] = v[i] - u[i];
                    nonneg = nonneg && sgn(step[i]) >= 0;
                }
                if (!nonneg) continue;
                for (const auto& w : raw[N - 2]) {
                    bool same = true;
                    for (std::size_t i = 0; i < r && same; ++i) same = u[i] - w[i] == step[i];
                    if (same && std::find(s.limit_points.begin(), s.limit_points.end(), step) == s.limit_points.end())
                        s.limit_points.push_back(step);
                }
            }
        std::sort(s.limit_points.begin(), s.limit_points.end());
    }
    std::vector<Point> all = s.union_vertices;
    all.insert(all.end(), s.limit_points.begin(), s.limit_points.end());
    MonoPolyhedron region(r, all);
    s.region_vertices = region.vertices();
    s.region_delta = region.delta();
    return s;
}

nlohmann::json AsymptoticReport::to_json() const {
    nlohmann::json rj = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json j = {{"n", row.n}, {"d", row.d}, {"mu", row.mu},
                            {"d_over_n", rational_string(ratio(row.d, row.n))}};
        if (row.reg) {
            j["reg"] = *row.reg;
            j["reg_over_n"] = rational_string(ratio(*row.reg, row.n));
        } else if (row.bracket) {
            j["reg_bracket"] = row.bracket->to_json();
        }
        rj.push_back(j);
    }
    nlohmann::json j = {{"family", family}, {"N", N}, {"rows", rj},
                        {"fekete_inf_d_over_n", rational_string(fekete_inf_d_over_n)}};
    if (delta) j["delta"] = delta->to_json();
    return j;
}

std::string AsymptoticReport::to_text() const {
    std::ostringstream os;
    os << std::left << std::setw(5) << "n" << std::setw(12) << "reg" << std::setw(8) << "d" << std::setw(8) << "mu"
       << std::setw(12) << "reg/n" << std::setw(10) << "d/n";
    if (delta) os << "delta";
    os << '\n';
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& row = rows[k];
        std::string reg = row.reg ? std::to_string(*row.reg) : (row.bracket ? row.bracket->to_string() : "?");
        std::string reg_n = row.reg ? rational_string(ratio(*row.reg, row.n)) : "-";
        os << std::setw(5) << row.n << std::setw(12) << reg << std::setw(8) << row.d << std::setw(8) << row.mu
           << std::setw(12) << reg_n << std::setw(10) << rational_string(ratio(row.d, row.n));
        if (delta && k < delta->per_n.size()) os << rational_string(delta->per_n[k]);
        os << '\n';
    }
    os << "inf d/n (n <= " << N << "): " << rational_string(fekete_inf_d_over_n) << '\n';
    if (delta) {
        os << "inf delta (n <= " << N << "): " << rational_string(delta->running_inf.back()) << '\n';
        os << "delta of sampled union hull: " << rational_string(delta->union_delta) << '\n';
        os << "delta of sampled region (with limit points): " << rational_string(delta->region_delta) << '\n';
    }
    return os.str();
}

AsymptoticReport asymptotic_report(const GradedFamily& F, unsigned N, RegMode mode, bool with_delta) {
    if (N < 1) throw std::invalid_argument("N must be at least 1");
    AsymptoticReport rep;
    rep.family = F.description();
    rep.N = N;
    const std::uint32_t chr = F.ring().characteristic;
    for (unsigned n = 1; n <= N; ++n) {
        MonomialIdeal I = F.member(n);
        ReportRow row;
        row.n = n;
        row.d = I.max_gen_degree();
        row.mu = I.num_min_gens();
        bool exact_done = false;
        if (mode == RegMode::Exact) {
            try {
                row.reg = cm_regularity(I, chr);
                exact_done = true;
            } catch (const WorkLimitExceeded&) {
            }
        }
        if (!exact_done) {
            std::vector<std::size_t> hint;
            for (std::size_t v = I.nvars(); v-- > 2;) hint.push_back(v);
            row.bracket = reg_bracket_splitting(I, hint, chr);
        }
        Rational q = ratio(row.d, n);
        if (n == 1 || q < rep.fekete_inf_d_over_n) rep.fekete_inf_d_over_n = q;
        rep.rows.push_back(std::move(row));
    }
    if (with_delta) rep.delta = delta_family_sample(F, N);
    return rep;
}

}  // namespace reglab
