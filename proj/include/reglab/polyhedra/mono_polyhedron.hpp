#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "reglab/core/monomial.hpp"
#include "reglab/polyhedra/linear.hpp"

namespace reglab {

using Point = RVector;

// Inequality normal . x >= rhs with primitive integer data.
struct Halfspace {
    std::vector<mpz_class> normal;
    mpz_class rhs;
    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

inline constexpr std::size_t kHalfspaceMaxDim = 4;

// conv(points) + the nonnegative orthant.
class MonoPolyhedron {
public:
    MonoPolyhedron(std::size_t dim, std::vector<Point> points);

    std::size_t dim() const { return dim_; }
    const std::vector<Point>& points() const { return points_; }

    bool contains(const Point& v) const;
    // Lexicographically sorted, computed once.
    const std::vector<Point>& vertices() const;
    // Largest coordinate sum over the vertices.
    Rational delta() const;

    MonoPolyhedron scaled(const Rational& c) const;
    bool equals(const MonoPolyhedron& other) const;
    friend MonoPolyhedron minkowski_sum(const MonoPolyhedron& a, const MonoPolyhedron& b);

    std::vector<Halfspace> to_halfspaces() const;
    static MonoPolyhedron from_halfspaces(std::size_t dim, const std::vector<Halfspace>& hs);
    friend MonoPolyhedron intersect(const MonoPolyhedron& a, const MonoPolyhedron& b);

    nlohmann::json to_json() const;
    static MonoPolyhedron from_json(const nlohmann::json& j);

private:
    std::size_t dim_;
    std::vector<Point> points_;
    mutable std::shared_ptr<const std::vector<Point>> vertices_;
};

// conv of the exponent vectors of the given monomials, plus the orthant.
MonoPolyhedron newton_polyhedron(const std::vector<Monomial>& gens, std::size_t dim);

// v in conv(points) + orthant, decided by an exact LP.
bool in_orthant_hull(const std::vector<Point>& points, const Point& v);

std::string point_to_string(const Point& p);
Rational coordinate_sum(const Point& p);

}  // namespace reglab
