#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "reglab/groebner/ideal.hpp"

namespace reglab {

// 64-bit FNV-1a, stable across runs and platforms.
std::uint64_t stable_hash(const std::string& text);
std::string hex64(std::uint64_t v);

// REGLAB_CACHE if set, otherwise ./.reglab-cache
std::filesystem::path default_cache_dir();

struct CacheEntry {
    std::string key;
    std::size_t basis_size = 0;
    std::uintmax_t bytes = 0;
};

class GbCache {
public:
    explicit GbCache(std::filesystem::path dir = default_cache_dir()) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }
    std::optional<nlohmann::json> load(const std::string& key) const;
    void store(const std::string& key, const nlohmann::json& value) const;
    std::vector<CacheEntry> list() const;
    std::size_t clear() const;

private:
    std::filesystem::path dir_;
};

// Key over the ring spec and the sorted canonical (monic) generators.
template <class K>
std::string gb_cache_key(const Ideal<K>& I) {
    std::vector<std::string> g;
    for (const auto& p : I.gens()) g.push_back(to_string(p.monic()));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    nlohmann::json j = {{"ring", ring_spec_to_json(I.ring()->spec)}, {"gens", g}};
    return hex64(stable_hash(j.dump()));
}

// Fills the ideal's basis from the cache, or computes and stores it.
// Returns true on a cache hit.
template <class K>
bool cached_groebner_basis(const Ideal<K>& I, const GbCache& cache, const Budget& budget = {}) {
    const auto key = gb_cache_key(I);
    if (auto hit = cache.load(key)) {
        try {
            std::vector<Polynomial<K>> basis;
            for (const auto& s : hit->at("basis")) basis.push_back(parse_polynomial(I.ring(), s.template get<std::string>()));
            I.adopt_groebner_basis(std::move(basis), "cache", GbStats::from_json(hit->value("stats", nlohmann::json::object())));
            return true;
        } catch (const std::exception&) {
            // Unreadable entry: recompute and overwrite.
        }
    }
    const auto& G = I.groebner_basis(budget);
    cache.store(key, {{"basis", render(G)}, {"stats", I.stats().to_json()}});
    return false;
}

}  // namespace reglab
