#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace reglab {

using Rational = mpq_class;
using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

// Feasibility of { x >= 0 : A x = b } by phase-one simplex with Bland's rule.
// Exact arithmetic, so degenerate cycling is the only hazard and Bland rules it out.
bool lp_feasible(const RMatrix& A, const RVector& b);

// Basis of the right nullspace of A (ncols columns).
RMatrix nullspace(const RMatrix& A, std::size_t ncols);

// Unique solution of a square system, or nullopt when singular.
std::optional<RVector> solve_square(RMatrix A, RVector b);

}  // namespace reglab
