#pragma once

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "reglab/groebner/buchberger.hpp"

namespace reglab {

// Outcome of reducing one S-pair; indices refer to the storage order
// (leading monomial descending, then input position).
struct SPairCertificate {
    std::size_t i = 0, j = 0;
    std::vector<std::size_t> divisors;
    std::string remainder;
    std::uint64_t steps = 0;

    nlohmann::json to_json() const {
        return {{"pair", {i, j}}, {"divisors", divisors}, {"remainder", remainder}, {"steps", steps}};
    }
};

struct CertificateReport {
    bool pass = true;
    std::size_t pairs_checked = 0;
    std::uint64_t total_steps = 0;
    std::vector<SPairCertificate> failures;

    nlohmann::json to_json() const {
        nlohmann::json f = nlohmann::json::array();
        for (const auto& c : failures) f.push_back(c.to_json());
        return {{"pass", pass}, {"pairs_checked", pairs_checked}, {"total_steps", total_steps}, {"failures", f}};
    }
};

// Checks that every S-polynomial reduces to zero (Buchberger's criterion).
// Work is split across threads by pair index; the report does not depend on the split.
template <class K>
CertificateReport verify_gb_certificate(std::vector<Polynomial<K>> G, unsigned threads = 1,
                                        std::size_t max_failures = 16) {
    CertificateReport rep;
    G.erase(std::remove_if(G.begin(), G.end(), [](const auto& g) { return g.is_zero(); }), G.end());
    sort_by_leading_monomial(G);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    rep.pairs_checked = pairs.size();
    threads = std::max(1u, threads);

    struct Partial {
        std::uint64_t steps = 0;
        std::vector<SPairCertificate> failures;
    };
    std::vector<Partial> parts(threads);
    auto work = [&](unsigned t) {
        Reducer<K> red(G);
        for (std::size_t k = t; k < pairs.size(); k += threads) {
            auto [i, j] = pairs[k];
            ReductionTrace trace;
            auto r = red.reduce(s_polynomial(G[i], G[j]), nullptr, Reducer<K>::kNoLimit, &trace);
            parts[t].steps += trace.steps;
            if (!r.is_zero())
                parts[t].failures.push_back({i, j, std::move(trace.divisors), to_string(r), trace.steps});
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (auto& p : parts) {
        rep.total_steps += p.steps;
        for (auto& f : p.failures) rep.failures.push_back(std::move(f));
    }
    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const auto& a, const auto& b) { return std::tie(a.j, a.i) < std::tie(b.j, b.i); });
    rep.pass = rep.failures.empty();
    if (rep.failures.size() > max_failures) rep.failures.resize(max_failures);
    return rep;
}

}  // namespace reglab
