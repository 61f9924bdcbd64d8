/** @file
 *  @brief Rational polyhedra given by halfspaces: vertex enumeration,
 *         suprema of linear functionals, and exact covering tests.
 */
#pragma once

#include <vector>

#include "sphcrit/cone.hpp"
#include "sphcrit/lp.hpp"
#include "sphcrit/rational.hpp"

namespace sphcrit {

/** Halfspace  normal·x >= offset. */
struct Halfspace {
  QVec normal;
  Rat offset;
};

/** Intersection of finitely many halfspaces. */
struct Polyhedron {
  int dim = 0;
  std::vector<Halfspace> rows;
};

/** Minimal V-representation: P = conv(vertices) + cone(rays) + span(lin).
 *  If P has no vertices (a nonempty polyhedron with lineality), `vertices`
 *  holds a single relative point instead; `lineality_free` tells which. */
struct PolyVRep {
  std::vector<QVec> vertices;
  std::vector<QVec> rays;
  std::vector<QVec> lin;
  bool lineality_free = true;
};

/** Exact vertex/ray enumeration by double description on the homogenization. */
PolyVRep enumerate_polyhedron(const Polyhedron& p);

/** Outcome of supremum computation over a polyhedron intersected with a cone. */
struct SupOutcome {
  enum class Kind { Value, Unbounded, Infeasible } kind;
  Rat value;   ///< the supremum (Kind::Value only; always attained)
  QVec argmax; ///< a maximizer (Kind::Value only)
};

/** sup { objective·x : x in P, x in T }. */
SupOutcome solve_lp_sup(const Polyhedron& p, const Cone& t, const QVec& objective);

/** A region { x : g·x >= 0 for g in ge, s·x > 0 for s in gt } (homogeneous). */
struct HomRegion {
  std::vector<QVec> ge;
  std::vector<QVec> gt;
};

bool region_empty(int dim, const HomRegion& r);

/** Split `r \ c` into finitely many regions of the same shape. */
std::vector<HomRegion> subtract_cone(int dim, const HomRegion& r, const Cone& c);

/** Does the union of the cones contain every start region? */
bool cones_cover(int dim, const std::vector<Cone>& cones,
                 const std::vector<HomRegion>& start);

}  // namespace sphcrit
