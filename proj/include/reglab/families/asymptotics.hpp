#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "reglab/families/graded_family.hpp"
#include "reglab/monomial/regularity.hpp"
#include "reglab/polyhedra/mono_polyhedron.hpp"

namespace reglab {

struct GradedCheck {
    bool pass = true;
    std::optional<std::pair<unsigned, unsigned>> counterexample;
    std::string detail;
};

// I_p I_q subset of I_{p+q} for all p + q <= N, tested on generator products.
GradedCheck check_graded(const GradedFamily& F, unsigned N);

struct StabilizationVerdict {
    unsigned N = 0;
    std::optional<unsigned> c;
    nlohmann::json to_json() const;
};

// Smallest c with 2c <= N and (1/c)NP(I_c) = (1/(mc))NP(I_{mc}) for every mc <= N.
StabilizationVerdict noetherian_stabilization_test(const GradedFamily& F, unsigned N);

struct DeltaSample {
    unsigned N = 0;
    std::vector<Rational> per_n;        // delta((1/n) NP(I_n)) for n = 1..N
    std::vector<Rational> running_inf;
    // conv of all scaled sample points + orthant
    std::vector<Point> union_vertices;
    Rational union_delta;
    // Limits of vertex sequences growing by a constant step over n = N-2, N-1, N.
    std::vector<Point> limit_points;
    // Closure estimate: conv(sample points and limit points) + orthant.
    std::vector<Point> region_vertices;
    Rational region_delta;

    nlohmann::json to_json() const;
};

DeltaSample delta_family_sample(const GradedFamily& F, unsigned N);

enum class RegMode { Exact, Bracket };

struct ReportRow {
    unsigned n = 0;
    std::optional<int> reg;        // exact value
    std::optional<RegBracket> bracket;
    int d = 0;
    std::size_t mu = 0;
};

struct AsymptoticReport {
    nlohmann::json family;
    unsigned N = 0;
    std::vector<ReportRow> rows;
    Rational fekete_inf_d_over_n;
    std::optional<DeltaSample> delta;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

AsymptoticReport asymptotic_report(const GradedFamily& F, unsigned N, RegMode mode = RegMode::Exact,
                                   bool with_delta = true);

std::string rational_string(const Rational& q);

}  // namespace reglab
