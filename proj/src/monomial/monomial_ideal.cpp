#include "reglab/monomial/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "reglab/core/field.hpp"
#include "reglab/core/parse.hpp"

namespace reglab {

std::vector<Monomial> minimalize(std::vector<Monomial> gens, std::size_t nvars) {
    TermOrder ord(nvars, 0);
    std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return ord.greater(a, b);
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    return out;
}

MonomialIdeal::MonomialIdeal(RingSpec ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
    const std::uint32_t full = (1u << ring_.nvars()) - 1;
    for (const auto& g : gens)
        if (g.support() & ~full) throw std::invalid_argument("monomial uses variables outside the ring");
    gens_ = minimalize(std::move(gens), ring_.nvars());
}

MonomialIdeal MonomialIdeal::prime(RingSpec ring, std::uint32_t mask) {
    std::vector<Monomial> g;
    for (std::size_t i = 0; i < ring.nvars(); ++i)
        if (mask >> i & 1u) g.push_back(Monomial::variable(i));
    return MonomialIdeal(std::move(ring), std::move(g));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& J) const {
    for (const auto& g : J.gens_)
        if (!contains(g)) return false;
    return true;
}

bool MonomialIdeal::is_artinian() const {
    for (std::size_t i = 0; i < nvars(); ++i) {
        bool found = false;
        for (const auto& g : gens_)
            if (g.support() == (1u << i) || g.is_one()) found = true;
        if (!found) return false;
    }
    return true;
}

int MonomialIdeal::max_gen_degree() const {
    int d = -1;
    for (const auto& g : gens_) d = std::max<int>(d, g.degree());
    return d;
}

namespace {
template <class F>
void for_each_monomial(std::size_t nvars, int d, F&& f) {
    Monomial m;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == nvars) {
            m.set(i, left);
            f(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m.set(i, e);
            rec(i + 1, left - e);
        }
        m.set(i, 0);
    };
    if (nvars == 0) {
        if (d == 0) f(m);
        return;
    }
    rec(0, d);
}
}  // namespace

std::uint64_t MonomialIdeal::hilbert_function(int d) const {
    if (d < 0) return 0;
    std::uint64_t count = 0;
    for_each_monomial(nvars(), d, [&](const Monomial& m) {
        if (!contains(m)) ++count;
    });
    return count;
}

std::vector<Monomial> MonomialIdeal::standard_monomials(int d) const {
    std::vector<Monomial> out;
    if (d < 0) return out;
    for_each_monomial(nvars(), d, [&](const Monomial& m) {
        if (!contains(m)) out.push_back(m);
    });
    return out;
}

std::string MonomialIdeal::to_string() const {
    if (gens_.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += monomial_to_string(gens_[i], ring_);
    }
    return out + ")";
}

nlohmann::json MonomialIdeal::to_json() const {
    nlohmann::json g = nlohmann::json::array();
    for (const auto& m : gens_) g.push_back(monomial_to_string(m, ring_));
    return {{"ring", ring_spec_to_json(ring_)}, {"gens", g}};
}

namespace {
void require_same(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ring().variables != b.ring().variables) throw std::invalid_argument("monomial ideals in different rings");
}
}  // namespace

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same(a, b);
    auto g = a.gens();
    g.insert(g.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same(a, b);
    std::vector<Monomial> g;
    g.reserve(a.gens().size() * b.gens().size());
    for (const auto& x : a.gens())
        for (const auto& y : b.gens()) g.push_back(x * y);
    return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal power(const MonomialIdeal& a, unsigned e) {
    MonomialIdeal r = MonomialIdeal::unit(a.ring());
    for (unsigned i = 0; i < e; ++i) r = product(r, a);
    return r;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same(a, b);
    std::vector<Monomial> g;
    for (const auto& x : a.gens())
        for (const auto& y : b.gens()) g.push_back(x.lcm(y));
    return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m) {
    std::vector<Monomial> g;
    for (const auto& x : a.gens()) g.push_back(x.colon(m));
    return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same(a, b);
    if (b.is_zero()) return MonomialIdeal::unit(a.ring());
    MonomialIdeal r = colon(a, b.gens()[0]);
    for (std::size_t i = 1; i < b.gens().size(); ++i) r = intersect(r, colon(a, b.gens()[i]));
    return r;
}

MonomialIdeal multiply(const MonomialIdeal& a, const Monomial& m) {
    std::vector<Monomial> g;
    for (const auto& x : a.gens()) g.push_back(x * m);
    return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal parse_monomial_ideal(const RingSpec& ring, const std::string& text) {
    RingSpec r2 = ring.characteristic == 0 ? ring.with_characteristic(2) : ring;
    auto R = make_ring<PrimeField>(r2);
    std::vector<Monomial> g;
    for (const auto& piece : split_top_level(text)) {
        auto p = parse_polynomial(R, piece);
        if (p.is_zero()) continue;
        if (!p.is_monomial()) throw std::invalid_argument("'" + piece + "' is not a monomial");
        g.push_back(p.leading_monomial());
    }
    return MonomialIdeal(ring, std::move(g));
}

std::vector<std::uint32_t> minimal_primes(const MonomialIdeal& I) {
    if (I.is_unit()) return {};
    const std::size_t r = I.nvars();
    std::vector<std::uint32_t> supports;
    for (const auto& g : I.gens()) supports.push_back(g.support());
    std::vector<std::uint32_t> masks((1u << r));
    for (std::uint32_t s = 0; s < masks.size(); ++s) masks[s] = s;
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    std::vector<std::uint32_t> out;
    for (auto s : masks) {
        bool covers = true;
        for (auto sup : supports)
            if (!(sup & s)) {
                covers = false;
                break;
            }
        if (!covers) continue;
        bool minimal = true;
        for (auto p : out)
            if ((p & s) == p) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

MonomialIdeal localize_at_prime(const MonomialIdeal& I, std::uint32_t prime_mask) {
    std::vector<Monomial> g;
    for (const auto& m : I.gens()) {
        Monomial h = m;
        for (std::size_t i = 0; i < I.nvars(); ++i)
            if (!(prime_mask >> i & 1u)) h.set(i, 0);
        g.push_back(h);
    }
    return MonomialIdeal(I.ring(), std::move(g));
}

MonomialIdeal symbolic_power_min(const MonomialIdeal& I, unsigned n) {
    MonomialIdeal In = power(I, n);
    auto primes = minimal_primes(I);
    if (primes.empty()) return In;
    MonomialIdeal r = localize_at_prime(In, primes[0]);
    for (std::size_t i = 1; i < primes.size(); ++i) r = intersect(r, localize_at_prime(In, primes[i]));
    return r;
}

MonoPolyhedron newton_polyhedron(const MonomialIdeal& I) {
    if (I.is_zero()) throw std::invalid_argument("Newton polyhedron of the zero ideal");
    return newton_polyhedron(I.gens(), I.nvars());
}

MonomialIdeal integral_closure(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) return I;
    const std::size_t r = I.nvars();
    const auto NP = newton_polyhedron(I);
    // Minimal generators of the closure lie in the bounding box of the generators.
    std::vector<int> hi(r, 0);
    for (const auto& g : I.gens())
        for (std::size_t i = 0; i < r; ++i) hi[i] = std::max(hi[i], g[i]);
    std::vector<Monomial> found;
    Monomial m;
    Point p(r);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == r) {
            if (I.contains(m)) {
                found.push_back(m);
                return;
            }
            for (const auto& f : found)
                if (f.divides(m)) return;
            for (std::size_t k = 0; k < r; ++k) p[k] = m[k];
            if (NP.contains(p)) found.push_back(m);
            return;
        }
        for (int e = 0; e <= hi[i]; ++e) {
            m.set(i, e);
            rec(i + 1);
        }
        m.set(i, 0);
    };
    rec(0);
    return MonomialIdeal(I.ring(), std::move(found));
}

bool q_power_membership(int i, int j, int n) {
    if (i < 0 || j < 0 || n < 0) throw std::invalid_argument("negative exponent");
    if (n == 0) return true;
    int s = i + j;
    if (s < 3 * n) return i / 3 + j / 3 >= n;
    if (s == 3 * n) return (static_cast<long long>(i) * j) % 3 == 0;
    if (s == 3 * n + 1) return !(i % 3 == 2 && j % 3 == 2);
    return true;
}

}  // namespace reglab
