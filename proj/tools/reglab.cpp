#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

#include "reglab/families/asymptotics.hpp"
#include "reglab/paperlab/experiments.hpp"

using namespace reglab;
using nlohmann::json;

namespace {

constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Globals {
    std::string ring = "x,y,a,b";
    std::optional<std::uint32_t> characteristic;
    bool json = false;
    std::optional<std::uint64_t> budget_steps;
    std::optional<int> budget_degree;
    unsigned threads = 1;
    std::string cache_dir;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

RingSpec ring_spec(const Globals& g) {
    RingSpec r;
    const auto first = g.ring.find_first_not_of(" \t");
    if (first != std::string::npos && (g.ring[first] == '{' || g.ring.find(':') != std::string::npos)) {
        r = parse_ring_argument(g.ring);
    } else {
        r = parse_ring_argument("0:" + g.ring);
        r.characteristic = 2;
    }
    if (g.characteristic) r = r.with_characteristic(*g.characteristic);
    r.validate();
    return r;
}

RunOptions run_options(const Globals& g) {
    RunOptions o;
    if (g.budget_steps) o.budget.max_steps = *g.budget_steps;
    if (g.budget_degree) o.budget.max_degree = *g.budget_degree;
    o.threads = std::max(1u, g.threads);
    if (!g.cache_dir.empty()) o.cache.emplace(g.cache_dir);
    return o;
}

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

template <class K>
std::string join_polys(const std::vector<Polynomial<K>>& G) {
    std::string out;
    for (const auto& p : G) out += to_string(p) + "\n";
    return out;
}

// Runs fn with a ring over Q or F_p depending on the characteristic.
template <class Fn>
int with_ring(const Globals& g, Fn&& fn) {
    const RingSpec spec = ring_spec(g);
    if (spec.characteristic == 0) return fn(make_ring<RationalField>(spec));
    return fn(make_ring<PrimeField>(spec));
}

std::string bracket_text(const RegBracket& b) {
    std::ostringstream os;
    os << b.to_string() << "  (lower: " << b.lower_method;
    if (b.upper) os << ", upper: " << b.upper_method;
    os << ")";
    return os.str();
}

std::vector<std::size_t> split_indices(const RingSpec& spec, const std::string& names) {
    std::vector<std::size_t> out;
    if (names.empty()) {
        for (std::size_t v = spec.nvars(); v-- > 2;) out.push_back(v);
        return out;
    }
    for (const auto& n : split_top_level(names)) {
        std::string t = n;
        t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
        auto i = spec.index_of(t);
        if (!i) throw UsageError("unknown variable '" + t + "'");
        out.push_back(*i);
    }
    return out;
}

json parse_params(const std::vector<std::string>& items) {
    json p = json::object();
    for (const auto& s : items) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw UsageError("parameter must be key=value: " + s);
        const std::string key = s.substr(0, eq), val = s.substr(eq + 1);
        try {
            std::size_t used = 0;
            long long v = std::stoll(val, &used);
            if (used == val.size()) {
                p[key] = v;
                continue;
            }
        } catch (const std::exception&) {
        }
        p[key] = val;
    }
    return p;
}

GradedFamily load_family(const Globals& g, const std::string& name, const std::string& spec_json,
                         const std::vector<std::string>& params) {
    if (!spec_json.empty()) return family_from_json(json::parse(spec_json));
    if (name.empty()) throw UsageError("give --family or --spec");
    json p = parse_params(params);
    if (g.characteristic && !p.contains("char")) p["char"] = *g.characteristic;
    return preset_family(name, p);
}

std::string polyhedron_text(const MonoPolyhedron& P) {
    std::ostringstream os;
    os << "vertices:";
    for (const auto& v : P.vertices()) os << " " << point_to_string(v);
    os << "\nhalfspaces:\n";
    for (const auto& h : P.to_halfspaces()) {
        os << "  ";
        for (std::size_t i = 0; i < h.normal.size(); ++i) os << (i ? " " : "") << h.normal[i].get_str();
        os << " >= " << h.rhs.get_str() << "\n";
    }
    os << "delta: " << rational_string(P.delta());
    return os.str();
}

int report_exit(const Globals& g, const ExperimentReport& rep) {
    emit(g, rep.to_json(true), rep.to_text());
    return rep.pass() ? 0 : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reglab: Groebner bases, monomial regularity and asymptotic experiments"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--ring", g.ring, "variables 'x,y,a,b', 'char:vars' or a JSON ring spec")->capture_default_str();
    app.add_option("--char", g.characteristic, "field characteristic (0 = rationals)");
    app.add_flag("--json", g.json, "JSON output");
    app.add_option("--budget-steps", g.budget_steps, "reduction step limit");
    app.add_option("--budget-degree", g.budget_degree, "S-pair degree limit");
    app.add_option("--threads", g.threads, "worker threads")->capture_default_str();
    app.add_option("--cache-dir", g.cache_dir, "Groebner basis cache directory");

    std::string ideal, other, poly, mono, split, witness;
    bool saturate_flag = false;
    std::function<int()> action;

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
    gb->add_option("--ideal,-I", ideal, "comma separated generators")->required();
    gb->callback([&] {
        action = [&] {
            return with_ring(g, [&](auto R) {
                using K = typename decltype(R)::element_type::Field;
                Ideal<K> I = Ideal<K>::parse(R, ideal);
                const auto o = run_options(g);
                const bool hit = ensure_basis(I, o);
                const auto& G = I.groebner_basis(o.budget);
                emit(g, {{"basis", render(G)}, {"stats", I.stats().to_json()}, {"cache_hit", hit}}, join_polys(G));
                return 0;
            });
        };
    });

    auto* nf = app.add_subcommand("nf", "normal form modulo an ideal");
    nf->add_option("--ideal,-I", ideal)->required();
    nf->add_option("--poly,-p", poly)->required();
    nf->callback([&] {
        action = [&] {
            return with_ring(g, [&](auto R) {
                using K = typename decltype(R)::element_type::Field;
                Ideal<K> I = Ideal<K>::parse(R, ideal);
                const auto r = normal_form(parse_polynomial(R, poly), I, run_options(g).budget);
                emit(g, {{"normal_form", to_string(r)}, {"member", r.is_zero()}}, to_string(r));
                return 0;
            });
        };
    });

    auto* initial = app.add_subcommand("initial", "initial ideal");
    initial->add_option("--ideal,-I", ideal)->required();
    initial->callback([&] {
        action = [&] {
            return with_ring(g, [&](auto R) {
                using K = typename decltype(R)::element_type::Field;
                Ideal<K> I = Ideal<K>::parse(R, ideal);
                const auto o = run_options(g);
                ensure_basis(I, o);
                const auto in = initial_ideal(I, o.budget);
                emit(g, in.to_json(), in.to_string());
                return 0;
            });
        };
    });

    auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
    auto* reg_mono = reg->add_option("--mono,-m", mono, "monomial ideal");
    auto* reg_ideal = reg->add_option("--ideal,-I", ideal, "homogeneous ideal");
    reg_mono->excludes(reg_ideal);
    reg->callback([&] {
        action = [&] {
            if (!mono.empty()) {
                const RingSpec spec = ring_spec(g);
                const auto I = parse_monomial_ideal(spec, mono);
                const int r = cm_regularity(I, spec.characteristic);
                emit(g, {{"reg", r}}, std::to_string(r));
                return 0;
            }
            if (ideal.empty()) throw UsageError("give --mono or --ideal");
            return with_ring(g, [&](auto R) {
                using K = typename decltype(R)::element_type::Field;
                Ideal<K> I = Ideal<K>::parse(R, ideal);
                if (!I.is_homogeneous()) throw UsageError("regularity needs a homogeneous ideal");
                const auto b = computed_bracket(I, run_options(g));
                json j = {{"bracket", b.to_json()}};
                if (b.exact()) j["reg"] = b.lower;
                emit(g, j, b.exact() ? std::to_string(b.lower) : bracket_text(b));
                return 0;
            });
        };
    });

    auto* regb = app.add_subcommand("reg-bracket", "regularity bracket");
    auto* regb_mono = regb->add_option("--mono,-m", mono, "monomial ideal");
    auto* regb_ideal = regb->add_option("--ideal,-I", ideal, "homogeneous ideal");
    regb->add_option("--split", split, "split variables for the monomial bound, e.g. 'b,a'");
    regb_mono->excludes(regb_ideal);
    regb->callback([&] {
        action = [&] {
            if (!mono.empty()) {
                const RingSpec spec = ring_spec(g);
                const auto I = parse_monomial_ideal(spec, mono);
                const auto b = reg_bracket_splitting(I, split_indices(spec, split), spec.characteristic);
                emit(g, b.to_json(), bracket_text(b));
                return 0;
            }
            if (ideal.empty()) throw UsageError("give --mono or --ideal");
            return with_ring(g, [&](auto R) {
                using K = typename decltype(R)::element_type::Field;
                Ideal<K> I = Ideal<K>::parse(R, ideal);
                if (!I.is_homogeneous()) throw UsageError("regularity needs a homogeneous ideal");
                const auto b = computed_bracket(I, run_options(g));
                emit(g, b.to_json(), bracket_text(b));
                return 0;
            });
        };
    });

    auto* socle = app.add_subcommand("socle", "top socle degree, or check a socle witness");
    socle->add_option("--ideal,-I", ideal)->required();
    socle->add_option("--witness,-w", witness, "candidate socle element");
    socle->callback([&] {
        action = [&] {
            return with_ring(g, [&](auto R) {
                using K = typename decltype(R)::element_type::Field;
                Ideal<K> I = Ideal<K>::parse(R, ideal);
                const auto o = run_options(g);
                ensure_basis(I, o);
                if (!witness.empty()) {
                    const auto h = parse_polynomial(R, witness);
                    const bool ok = socle_witness_check(h, I, o.budget);
                    emit(g, {{"witness", to_string(h)}, {"degree", h.degree()}, {"socle", ok}},
                         ok ? "socle element of degree " + std::to_string(h.degree()) : "not a socle element");
                    return ok ? 0 : kExitAssertion;
                }
                const auto d = socle_degree_max(I, o.budget);
                emit(g, {{"socle_degree_max", d ? json(*d) : json(nullptr)}}, d ? std::to_string(*d) : "none");
                return 0;
            });
        };
    });

    auto* inter = app.add_subcommand("intersect", "intersection of two ideals");
    inter->add_option("--ideal,-I", ideal)->required();
    inter->add_option("--with,-J", other)->required();
    inter->callback([&] {
        action = [&] {
            return with_ring(g, [&](auto R) {
                using K = typename decltype(R)::element_type::Field;
                const auto o = run_options(g);
                auto M = intersect(Ideal<K>::parse(R, ideal), Ideal<K>::parse(R, other), o.budget);
                const auto& G = M.groebner_basis();
                emit(g, {{"basis", render(G)}}, join_polys(G));
                return 0;
            });
        };
    });

    auto* colon = app.add_subcommand("colon", "colon ideal I : g, or saturation");
    colon->add_option("--ideal,-I", ideal)->required();
    colon->add_option("--by,-g", poly, "element; 'm' for the maximal ideal")->required();
    colon->add_flag("--saturate", saturate_flag, "compute I : g^infinity");
    colon->callback([&] {
        action = [&] {
            return with_ring(g, [&](auto R) {
                using K = typename decltype(R)::element_type::Field;
                const auto o = run_options(g);
                Ideal<K> I = Ideal<K>::parse(R, ideal);
                std::optional<Ideal<K>> C;
                if (poly == "m") {
                    if (saturate_flag) throw UsageError("saturation by the maximal ideal is not supported");
                    C = colon_maximal(I, o.budget);
                } else {
                    const auto h = parse_polynomial(R, poly);
                    C = saturate_flag ? saturate(I, h, o.budget) : colon_element(I, h, o.budget);
                }
                const auto& G = C->groebner_basis();
                emit(g, {{"basis", render(G)}}, join_polys(G));
                return 0;
            });
        };
    });

    auto* np = app.add_subcommand("np", "Newton polyhedron of a monomial ideal");
    np->add_option("--mono,-m", mono)->required();
    np->callback([&] {
        action = [&] {
            const auto I = parse_monomial_ideal(ring_spec(g), mono);
            const auto P = newton_polyhedron(I);
            json j = P.to_json();
            j["delta"] = rational_string(P.delta());
            emit(g, j, polyhedron_text(P));
            return 0;
        };
    });

    std::string family_name, family_spec;
    std::vector<std::string> family_params;
    unsigned N = 12;
    std::string mode = "exact";
    bool no_delta = false;
    auto add_family_opts = [&](CLI::App* c, unsigned default_N) {
        c->add_option("--family,-f", family_name, "preset: mprimary-counter, ex-diverge, distinct-lims, ann-not0");
        c->add_option("--spec", family_spec, "family as JSON");
        c->add_option("--param", family_params, "preset parameter key=value");
        c->add_option("--N", N, "largest index")->default_val(default_N);
    };

    auto* delta = app.add_subcommand("delta", "delta of scaled Newton polyhedra of a family");
    add_family_opts(delta, 12);
    delta->callback([&] {
        action = [&] {
            const auto F = load_family(g, family_name, family_spec, family_params);
            const auto s = delta_family_sample(F, N);
            std::ostringstream os;
            os << "per-n delta at n=" << N << ": " << rational_string(s.per_n.back()) << "\n";
            os << "inf over n<=" << N << ": " << rational_string(s.running_inf.back()) << "\n";
            os << "sampled-region delta: " << rational_string(s.region_delta);
            emit(g, s.to_json(), os.str());
            return 0;
        };
    });

    auto* family = app.add_subcommand("family", "graded families");
    family->require_subcommand(1);
    auto* frep = family->add_subcommand("report", "asymptotic table of reg, d, mu");
    add_family_opts(frep, 8);
    frep->add_option("--mode", mode, "exact or bracket")->check(CLI::IsMember({"exact", "bracket"}));
    frep->add_flag("--no-delta", no_delta, "skip the polyhedral sample");
    frep->callback([&] {
        action = [&] {
            const auto F = load_family(g, family_name, family_spec, family_params);
            const auto r = asymptotic_report(F, N, mode == "exact" ? RegMode::Exact : RegMode::Bracket, !no_delta);
            emit(g, r.to_json(), r.to_text());
            return 0;
        };
    });
    auto* fgr = family->add_subcommand("check-graded", "test I_p I_q in I_{p+q}");
    add_family_opts(fgr, 8);
    fgr->callback([&] {
        action = [&] {
            const auto F = load_family(g, family_name, family_spec, family_params);
            const auto c = check_graded(F, N);
            json j = {{"pass", c.pass}, {"detail", c.detail}};
            if (c.counterexample) j["counterexample"] = {c.counterexample->first, c.counterexample->second};
            emit(g, j, (c.pass ? "graded up to N=" + std::to_string(N) : "not graded: " + c.detail));
            return c.pass ? 0 : kExitAssertion;
        };
    });
    auto* fst = family->add_subcommand("stabilize", "finite Noetherian stabilization evidence");
    add_family_opts(fst, 12);
    fst->callback([&] {
        action = [&] {
            const auto F = load_family(g, family_name, family_spec, family_params);
            const auto v = noetherian_stabilization_test(F, N);
            emit(g, v.to_json(),
                 v.c ? "stabilizes from c=" + std::to_string(*v.c) + " (checked to N=" + std::to_string(N) + ")"
                     : "no stabilization up to N=" + std::to_string(N));
            return 0;
        };
    });

    auto* paper = app.add_subcommand("paper", "replication drivers for x y a + (x^2+y^2) b over (x^3,y^3)");
    paper->require_subcommand(1);
    std::string thm;
    unsigned n = 8;
    std::optional<unsigned> k;
    unsigned max_s = 3, max_n = 3, cross = 2;
    auto* pv = paper->add_subcommand("verify", "verify an explicit Groebner basis family");
    pv->add_option("--thm", thm, "gb2powers, 3times2power, double2powers[-odd|-even|-12]")->required();
    pv->add_option("--n", n)->required();
    pv->add_option("--k", k, "defaults to n");
    pv->callback([&] {
        action = [&] { return report_exit(g, verify_theorem(parse_theorem_spec(thm, n, k), run_options(g))); };
    });
    auto* pn = paper->add_subcommand("nolimit", "reg/n bounds along 2^s and 3*2^s");
    pn->add_option("--max-s", max_s)->capture_default_str();
    pn->callback([&] { action = [&] { return report_exit(g, nolimit_evidence(max_s, run_options(g))); }; });
    auto* ps = paper->add_subcommand("symbolic", "bracket for reg of the n-th symbolic power");
    ps->add_option("--n", n)->required();
    ps->add_option("--cross-check", cross, "direct check in 5 variables at this n (0 = off)")->capture_default_str();
    ps->callback([&] { action = [&] { return report_exit(g, symbolic_reg_bracket(n, run_options(g), cross)); }; });
    auto* pc = paper->add_subcommand("conj-char0", "characteristic 0 brackets (evidence only)");
    pc->add_option("--max-n", max_n)->capture_default_str();
    pc->callback([&] { action = [&] { return report_exit(g, conjecture_char0_harness(max_n, run_options(g))); }; });

    auto* cache = app.add_subcommand("cache", "Groebner basis cache");
    cache->require_subcommand(1);
    auto cache_dir = [&] { return g.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(g.cache_dir); };
    cache->add_subcommand("ls", "list entries")->callback([&] {
        action = [&] {
            GbCache c(cache_dir());
            json j = json::array();
            std::ostringstream os;
            for (const auto& e : c.list()) {
                j.push_back({{"key", e.key}, {"basis_size", e.basis_size}, {"bytes", e.bytes}});
                os << e.key << "  " << e.basis_size << " elements  " << e.bytes << " bytes\n";
            }
            emit(g, {{"dir", c.dir().string()}, {"entries", j}}, os.str().empty() ? "(empty)" : os.str());
            return 0;
        };
    });
    cache->add_subcommand("clear", "remove all entries")->callback([&] {
        action = [&] {
            GbCache c(cache_dir());
            const auto removed = c.clear();
            emit(g, {{"removed", removed}}, "removed " + std::to_string(removed) + " entries");
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    try {
        return action ? action() : kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const WorkLimitExceeded& e) {
        std::cerr << "work limit exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAssertion;
    }
}
