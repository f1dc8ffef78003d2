#pragma once

/**
 * @file polytope.hpp
 * @brief The exact state polytope of a finite logic.
 *
 * The measures on a logic form a polytope: one coordinate per element,
 * bounds 0 and 1, the bottom pinned to 0, the top to 1, and one linear
 * equality per recorded orthogonal-join triple.  build_polytope solves
 * the equality system exactly (base point plus kernel basis);
 * enumerate_pure_states runs the double description method on the
 * homogenized inequality cone with rational pivots, so the vertex list
 * is exact and deterministic.
 */

#include <vector>

#include "oml/state.hpp"

namespace oml {

struct StatePolytope {
    LogicPtr logic;
    bool empty = false; ///< the equality system is inconsistent
    /// Free parameters left after eliminating the equalities.
    int dimension = 0;
    long long equality_count = 0;
    /// One exact solution of the equalities (coordinates per element).
    std::vector<Rational> base_point;
    /// Basis of the equality kernel; rows are direction vectors.
    std::vector<std::vector<Rational>> kernel;
};

StatePolytope build_polytope(LogicPtr logic, std::size_t cap_elements = 64);

/// All vertices of the polytope as validated exact states, sorted by
/// value vector.  The cap bounds the working ray count of the double
/// description run, not just the final list.
std::vector<StateMeasure> enumerate_pure_states(const StatePolytope& p,
                                                std::size_t cap_vertices = 10000);

} // namespace oml
