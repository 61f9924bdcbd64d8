/** @file
 *  @brief Placing (incremental) triangulations of strictly convex cones.
 */
#pragma once

#include <vector>

#include "sphcrit/cone.hpp"
#include "sphcrit/rational.hpp"

namespace sphcrit {

/** Triangulate cone(vectors) by inserting the vectors in the given order:
 *  a vector inside the cone built so far is skipped; one outside the current
 *  span extends every maximal simplex; otherwise new simplices attach over
 *  the facets visible from it.  Returns the maximal simplices as sorted index
 *  lists into `vectors`.  Requires nonzero vectors spanning a strictly convex
 *  cone. */
std::vector<std::vector<int>> placing_triangulation(
    int dim, const std::vector<QVec>& vectors);

/** Placing triangulation of `c` using the marked vectors (which must generate
 *  exactly `c`); returns the maximal simplicial subcones. */
std::vector<Cone> triangulate_cone(const Cone& c,
                                   const std::vector<QVec>& marked);

}  // namespace sphcrit
