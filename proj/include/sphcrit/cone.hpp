/** @file
 *  @brief Exact convex rational cones: double description, faces, duality.
 *
 *  Cones are handled in both representations.  A `Cone` is constructed from
 *  generators (V-representation); its facet inequalities, span equations,
 *  extreme rays and lineality basis are computed on demand by the double
 *  description method and cached.  All output families are canonically
 *  ordered, so equal cones produce identical representations regardless of
 *  the order in which generators were supplied.
 */
#pragma once

#include <memory>
#include <vector>

#include "sphcrit/rational.hpp"

namespace sphcrit {

/** Generators of a cone given by linear constraints. */
struct DDPair {
  std::vector<QVec> rays;  ///< extreme rays modulo lineality; primitive, sorted
  std::vector<QVec> lin;   ///< lineality basis; echelon-reduced, primitive, sorted
};

/** V-representation of { x : f·x >= 0 (f in ineqs), e·x = 0 (e in eqs) }. */
DDPair dual_description(int dim, const std::vector<QVec>& ineqs,
                        const std::vector<QVec>& eqs = {});

class Cone {
 public:
  Cone() : dim_(0) {}
  /** Cone generated by the given vectors (zero vectors rejected). */
  Cone(int ambient_dim, std::vector<QVec> generators);
  /** Cone { x : f·x >= 0, e·x = 0 }. */
  static Cone from_inequalities(int ambient_dim, const std::vector<QVec>& ineqs,
                                const std::vector<QVec>& eqs = {});

  int ambient_dim() const { return dim_; }
  const std::vector<QVec>& generators() const { return gens_; }

  /** Irredundant facet inequalities f (f·x >= 0), valid within the span. */
  const std::vector<QVec>& facet_normals() const;
  /** Equations cutting out the linear span. */
  const std::vector<QVec>& span_equations() const;
  /** Extreme rays (primitive, sorted).  Requires a strictly convex cone. */
  const std::vector<QVec>& extreme_rays() const;
  /** Basis of the lineality space (empty iff strictly convex). */
  const std::vector<QVec>& lineality_basis() const;

  int dim() const;
  bool is_strictly_convex() const { return lineality_basis().empty(); }
  bool is_zero() const { return dim() == 0; }

  bool contains(const QVec& v) const;
  bool relative_interior_contains(const QVec& v) const;
  /** A point in the relative interior (sum of generators; zero for the cone {0}). */
  QVec relative_interior_point() const;

 private:
  int dim_;
  std::vector<QVec> gens_;
  struct Cache;
  std::shared_ptr<Cache> cache_;  // lazily filled; shared across copies
  Cache& cache() const;
};

/** Dual cone { f : f·x >= 0 for all x in c }. */
Cone dual_cone(const Cone& c);

Cone intersect(const Cone& a, const Cone& b);

/** Set equality of cones. */
bool cones_equal(const Cone& a, const Cone& b);

/** All faces, each as the sorted list of indices of the generators lying on
 *  it.  Includes the cone itself (full index set) and the minimal face.
 *  Distinct faces of a cone contain distinct generator subsets. */
std::vector<std::vector<int>> face_generator_sets(const Cone& c);

}  // namespace sphcrit
