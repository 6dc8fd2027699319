#include "reglab/monomial/regularity.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <sstream>
#include <unordered_map>

#include "reglab/polyhedra/linear.hpp"

namespace reglab {

int BettiTable::projective_dimension() const {
    int p = 0;
    for (const auto& [k, v] : entries)
        if (v) p = std::max(p, k.first);
    return p;
}

int BettiTable::regularity() const {
    int r = INT_MIN;
    for (const auto& [k, v] : entries)
        if (v) r = std::max(r, k.second - k.first);
    return r;
}

std::string BettiTable::to_string() const {
    std::ostringstream os;
    int pd = projective_dimension(), reg = regularity();
    os << "     ";
    for (int i = 0; i <= pd; ++i) os << ' ' << i;
    os << '\n';
    for (int row = 0; row <= reg; ++row) {
        os << (row < 10 ? "   " : "  ") << row << ':';
        for (int i = 0; i <= pd; ++i) {
            auto v = at(i, i + row);
            os << ' ' << (v ? std::to_string(v) : std::string("."));
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::json BettiTable::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, v] : entries)
        if (v) arr.push_back({{"i", k.first}, {"j", k.second}, {"beta", v}});
    return arr;
}

namespace {

// Rank of a 0/+-1 matrix over F_p or Q.
std::size_t matrix_rank(std::vector<std::vector<int>> M, std::uint32_t p) {
    if (M.empty()) return 0;
    const std::size_t cols = M[0].size();
    if (p != 0) {
        std::size_t rank = 0;
        for (auto& row : M)
            for (auto& v : row) v = ((v % static_cast<int>(p)) + static_cast<int>(p)) % static_cast<int>(p);
        for (std::size_t c = 0; c < cols && rank < M.size(); ++c) {
            std::size_t piv = rank;
            while (piv < M.size() && M[piv][c] == 0) ++piv;
            if (piv == M.size()) continue;
            std::swap(M[piv], M[rank]);
            long long inv = 1, base = M[rank][c], e = p - 2;
            while (e) {
                if (e & 1) inv = inv * base % p;
                base = base * base % p;
                e >>= 1;
            }
            for (auto& v : M[rank]) v = static_cast<int>(v * inv % p);
            for (std::size_t i = 0; i < M.size(); ++i) {
                if (i == rank || M[i][c] == 0) continue;
                long long f = M[i][c];
                for (std::size_t j = 0; j < cols; ++j)
                    M[i][j] = static_cast<int>(((M[i][j] - f * M[rank][j]) % p + p) % p);
            }
            ++rank;
        }
        return rank;
    }
    RMatrix Q(M.size(), RVector(cols));
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) Q[i][j] = M[i][j];
    return cols - nullspace(Q, cols).size();
}

// Reduced homology dimensions of a simplicial complex given by its faces (bitmasks).
// Index k of the result is dim H~_{k-1}.
std::vector<std::size_t> reduced_homology(const std::vector<std::uint32_t>& faces, std::size_t nverts,
                                          std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> by_size(nverts + 2);
    for (auto f : faces) by_size[std::popcount(f)].push_back(f);
    // rank of boundary from size s to size s-1
    std::vector<std::size_t> rank(nverts + 2, 0);
    for (std::size_t s = 1; s <= nverts; ++s) {
        if (by_size[s].empty() || by_size[s - 1].empty()) continue;
        std::unordered_map<std::uint32_t, std::size_t> index;
        for (std::size_t i = 0; i < by_size[s - 1].size(); ++i) index[by_size[s - 1][i]] = i;
        std::vector<std::vector<int>> M(by_size[s].size(), std::vector<int>(by_size[s - 1].size(), 0));
        for (std::size_t r = 0; r < by_size[s].size(); ++r) {
            auto f = by_size[s][r];
            int sign = 1;
            for (std::size_t v = 0; v < nverts; ++v) {
                if (!(f >> v & 1u)) continue;
                auto it = index.find(f & ~(1u << v));
                if (it != index.end()) M[r][it->second] = sign;
                sign = -sign;
            }
        }
        rank[s] = matrix_rank(std::move(M), p);
    }
    std::vector<std::size_t> h(nverts + 1, 0);
    for (std::size_t s = 0; s <= nverts; ++s) {
        std::size_t n = by_size[s].size();
        std::size_t out_rank = s >= 1 ? rank[s] : 0;
        std::size_t in_rank = rank[s + 1];
        h[s] = n - out_rank - in_rank;
    }
    return h;
}

std::vector<std::vector<int>> exponent_grid(const MonomialIdeal& I) {
    std::vector<std::vector<int>> grid(I.nvars());
    for (std::size_t i = 0; i < I.nvars(); ++i) {
        grid[i].push_back(0);
        for (const auto& g : I.gens()) grid[i].push_back(g[i]);
        std::sort(grid[i].begin(), grid[i].end());
        grid[i].erase(std::unique(grid[i].begin(), grid[i].end()), grid[i].end());
    }
    return grid;
}

}  // namespace

std::uint64_t betti_cell_count(const MonomialIdeal& I) {
    std::uint64_t cells = 1;
    for (const auto& axis : exponent_grid(I)) {
        cells *= axis.size();
        if (cells > (1ull << 62)) break;
    }
    return cells;
}

BettiTable betti_numbers(const MonomialIdeal& I, std::uint32_t characteristic, std::uint64_t cell_limit) {
    if (I.is_zero()) throw std::invalid_argument("Betti numbers of the zero ideal");
    BettiTable table;
    table.entries[{0, 0}] = 1;
    if (I.is_unit()) {
        table.entries.clear();
        return table;
    }
    const std::size_t r = I.nvars();
    const auto grid = exponent_grid(I);
    const std::uint64_t cells = betti_cell_count(I);
    if (cells > cell_limit)
        throw WorkLimitExceeded("Betti computation needs " + std::to_string(cells) + " cells, limit " +
                                std::to_string(cell_limit));
    std::vector<std::size_t> idx(r, 0);
    Monomial b;
    std::vector<const Monomial*> below;
    for (;;) {
        for (std::size_t i = 0; i < r; ++i) b.set(i, grid[i][idx[i]]);
        // Generators dividing x^b; b must be their lcm, otherwise K^b is a cone.
        below.clear();
        Monomial l;
        for (const auto& g : I.gens())
            if (g.divides(b)) {
                below.push_back(&g);
                l = l.lcm(g);
            }
        if (!below.empty() && l == b) {
            const std::uint32_t supp = b.support();
            std::vector<std::uint32_t> faces;
            for (std::uint32_t F = supp;; F = (F - 1) & supp) {
                Monomial m = b;
                for (std::size_t v = 0; v < r; ++v)
                    if (F >> v & 1u) m.set(v, m[v] - 1);
                for (auto* g : below)
                    if (g->divides(m)) {
                        faces.push_back(F);
                        break;
                    }
                if (F == 0) break;
            }
            auto h = reduced_homology(faces, r, characteristic);
            for (std::size_t k = 0; k < h.size(); ++k)
                if (h[k]) table.entries[{static_cast<int>(k) + 1, static_cast<int>(b.degree())}] += h[k];
        }
        std::size_t i = 0;
        while (i < r && ++idx[i] == grid[i].size()) idx[i++] = 0;
        if (i == r) break;
    }
    return table;
}

int cm_regularity(const MonomialIdeal& I, std::uint32_t characteristic, std::uint64_t cell_limit) {
    if (I.is_zero()) throw std::invalid_argument("regularity of the zero ideal");
    if (I.is_unit()) return 0;
    auto t = betti_numbers(I, characteristic, cell_limit);
    int reg = INT_MIN;
    for (const auto& [k, v] : t.entries)
        if (v && k.first >= 1) reg = std::max(reg, k.second - k.first + 1);
    return reg;
}

std::string RegBracket::to_string() const {
    std::string hi = upper ? std::to_string(*upper) : std::string("?");
    return "[" + std::to_string(lower) + ", " + hi + "]";
}

nlohmann::json RegBracket::to_json() const {
    nlohmann::json j = {{"lower", lower}, {"lower_method", lower_method}, {"upper_method", upper_method}};
    j["upper"] = upper ? nlohmann::json(*upper) : nlohmann::json(nullptr);
    return j;
}

std::optional<int> monomial_socle_degree_max(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) return std::nullopt;
    MonomialIdeal m = MonomialIdeal::prime(I.ring(), (1u << I.nvars()) - 1);
    MonomialIdeal sat = colon(I, m);
    std::optional<int> best;
    for (const auto& g : sat.gens())
        if (!I.contains(g)) best = std::max(best.value_or(-1), static_cast<int>(g.degree()));
    return best;
}

namespace {

struct SplitState {
    std::vector<std::size_t> vars;
    std::uint32_t characteristic;
    std::unordered_map<std::string, int> memo;
};

int split_rec(const MonomialIdeal& I, SplitState& st) {
    if (I.is_unit()) return 0;
    auto key = I.to_string();
    if (auto it = st.memo.find(key); it != st.memo.end()) return it->second;
    std::optional<std::size_t> v;
    for (auto cand : st.vars) {
        for (const auto& g : I.gens())
            if (g[cand] > 0) {
                v = cand;
                break;
            }
        if (v) break;
    }
    int result;
    if (!v) {
        result = cm_regularity(I, st.characteristic);
    } else {
        std::vector<Monomial> J, L;
        int q = INT_MAX;
        for (const auto& g : I.gens())
            if (g[*v] > 0) q = std::min(q, g[*v]);
        for (const auto& g : I.gens()) {
            if (g[*v] == 0) {
                J.push_back(g);
            } else {
                Monomial h = g;
                h.set(*v, g[*v] - q);
                L.push_back(h);
            }
        }
        MonomialIdeal Lideal(I.ring(), L);
        if (J.empty()) {
            // I = v^q L and v^q is a nonzerodivisor.
            result = split_rec(Lideal, st) + q;
        } else {
            MonomialIdeal Jideal(I.ring(), J);
            result = std::max(split_rec(Jideal, st) + q - 1, split_rec(sum(Jideal, Lideal), st) + q);
        }
    }
    st.memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

int splitting_upper_bound(const MonomialIdeal& I, const std::vector<std::size_t>& split_vars,
                          std::uint32_t characteristic) {
    if (I.is_zero()) throw std::invalid_argument("regularity of the zero ideal");
    SplitState st{split_vars, characteristic, {}};
    return split_rec(I, st);
}

RegBracket reg_bracket_splitting(const MonomialIdeal& I, const std::vector<std::size_t>& split_vars,
                                 std::uint32_t characteristic) {
    RegBracket b;
    b.lower = I.max_gen_degree();
    b.lower_method = "generator-degree";
    if (auto s = monomial_socle_degree_max(I); s && *s + 1 > b.lower) {
        b.lower = *s + 1;
        b.lower_method = "socle";
    }
    b.upper = splitting_upper_bound(I, split_vars, characteristic);
    b.upper_method = "splitting";
    return b;
}

}  // namespace reglab
