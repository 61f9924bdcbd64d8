/** @file
 *  @brief Unit tests for exact cone arithmetic and double description.
 */
#include "doctest.h"

#include "sphcrit/cone.hpp"

#include <algorithm>

#include "corpus.hpp"
#include "dd_oracle.hpp"

using namespace sphcrit;
using fixtures::qv;

namespace {

bool same_vector_set(std::vector<QVec> a, std::vector<QVec> b) {
  std::sort(a.begin(), a.end(), QVecLess{});
  std::sort(b.begin(), b.end(), QVecLess{});
  return a == b;
}

}  // namespace

TEST_CASE("zero cone") {
  const Cone z(2, {});
  CHECK(z.is_zero());
  CHECK(z.dim() == 0);
  CHECK(z.is_strictly_convex());
  CHECK(z.extreme_rays().empty());
  CHECK(z.contains(qv({0, 0})));
  CHECK_FALSE(z.contains(qv({1, 0})));
  CHECK(z.relative_interior_point() == qv({0, 0}));
  CHECK(z.relative_interior_contains(qv({0, 0})));
  // Facets of {0}: the span equations do the cutting.
  CHECK(z.span_equations().size() == 2);
}

TEST_CASE("zero generator rejected") {
  CHECK_THROWS_AS(Cone(2, {qv({0, 0})}), std::invalid_argument);
}

TEST_CASE("quadrant cone") {
  const Cone q(2, {qv({1, 0}), qv({0, 1})});
  CHECK(q.dim() == 2);
  CHECK(q.is_strictly_convex());
  CHECK(same_vector_set(q.extreme_rays(), {qv({1, 0}), qv({0, 1})}));
  CHECK(same_vector_set(q.facet_normals(), {qv({1, 0}), qv({0, 1})}));
  CHECK(q.span_equations().empty());
  CHECK(q.contains(qv({3, 2})));
  CHECK(q.contains(qv({0, 0})));
  CHECK_FALSE(q.contains(qv({-1, 2})));
  CHECK(q.relative_interior_contains(qv({1, 1})));
  CHECK_FALSE(q.relative_interior_contains(qv({1, 0})));
  CHECK(q.relative_interior_point() == qv({1, 1}));
}

TEST_CASE("redundant generators are dropped from the extreme rays") {
  const Cone c(2, {qv({1, 0}), qv({1, 1}), qv({0, 1}), qv({2, 3})});
  CHECK(same_vector_set(c.extreme_rays(), {qv({1, 0}), qv({0, 1})}));
}

TEST_CASE("extreme rays are primitive and sorted") {
  const Cone c(2, {qv({4, 2}), qv({0, 3})});
  CHECK(c.extreme_rays() == std::vector<QVec>{qv({0, 1}), qv({2, 1})});
}

TEST_CASE("half-plane has lineality") {
  const Cone h(2, {qv({1, 0}), qv({-1, 0}), qv({0, 1})});
  CHECK(h.dim() == 2);
  CHECK_FALSE(h.is_strictly_convex());
  REQUIRE(h.lineality_basis().size() == 1);
  CHECK(dot(qv({0, 1}), h.lineality_basis()[0]) == 0);
  CHECK(h.contains(qv({-7, 0})));
  CHECK_FALSE(h.contains(qv({0, -1})));
  CHECK(h.facet_normals() == std::vector<QVec>{qv({0, 1})});
}

TEST_CASE("full space") {
  const Cone f = Cone::from_inequalities(2, {});
  CHECK(f.dim() == 2);
  CHECK(f.lineality_basis().size() == 2);
  CHECK(f.facet_normals().empty());
  CHECK(f.contains(qv({-5, 11})));
}

TEST_CASE("ray in three-space") {
  const Cone r(3, {qv({1, 2, 2})});
  CHECK(r.dim() == 1);
  CHECK(r.span_equations().size() == 2);
  CHECK(r.contains(qv({2, 4, 4})));
  CHECK_FALSE(r.contains(qv({-1, -2, -2})));
  CHECK(r.relative_interior_contains(qv({1, 2, 2})));
  CHECK_FALSE(r.relative_interior_contains(qv({0, 0, 0})));
}

TEST_CASE("from_inequalities matches the generator construction") {
  const Cone a = Cone::from_inequalities(2, {qv({1, 0}), qv({0, 1})});
  const Cone b(2, {qv({1, 0}), qv({0, 1})});
  CHECK(cones_equal(a, b));
  const Cone c = Cone::from_inequalities(3, {qv({1, 0, 0})}, {qv({0, 0, 1})});
  CHECK(c.dim() == 2);
  CHECK(c.contains(qv({1, -5, 0})));
  CHECK_FALSE(c.contains(qv({1, 0, 1})));
}

TEST_CASE("dual cone") {
  const Cone q(2, {qv({1, 0}), qv({0, 1})});
  CHECK(cones_equal(dual_cone(q), q));  // the quadrant is self-dual
  const Cone r(2, {qv({1, 1})});
  const Cone rd = dual_cone(r);
  CHECK(rd.dim() == 2);
  CHECK(rd.contains(qv({1, 0})));
  CHECK(rd.contains(qv({-1, 2})));
  CHECK_FALSE(rd.contains(qv({-1, 0})));
}

TEST_CASE("intersect") {
  const Cone a(2, {qv({1, 0}), qv({1, 1})});
  const Cone b(2, {qv({1, 1}), qv({0, 1})});
  const Cone c = intersect(a, b);
  CHECK(c.dim() == 1);
  CHECK(c.contains(qv({2, 2})));
  CHECK_FALSE(c.contains(qv({1, 0})));
  const Cone d = intersect(a, Cone(2, {qv({-1, -1})}));
  CHECK(d.is_zero());
}

TEST_CASE("cones_equal ignores generator order and scaling") {
  const Cone a(2, {qv({2, 0}), qv({0, 3}), qv({1, 1})});
  const Cone b(2, {qv({0, 1}), qv({1, 0})});
  CHECK(cones_equal(a, b));
  CHECK_FALSE(cones_equal(a, Cone(2, {qv({1, 0})})));
}

TEST_CASE("face_generator_sets of a simplicial cone") {
  const Cone c(2, {qv({1, 0}), qv({0, 1})});
  const auto faces = face_generator_sets(c);
  CHECK(faces.size() == 4);  // itself, two rays, the origin
  const Cone s(3, {qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})});
  CHECK(face_generator_sets(s).size() == 8);
}

TEST_CASE("face_generator_sets of a square cone") {
  const Cone c(3, {qv({1, 0, 1}), qv({0, 1, 1}), qv({-1, 0, 1}), qv({0, -1, 1})});
  CHECK(c.extreme_rays().size() == 4);
  const auto faces = face_generator_sets(c);
  // itself + 4 facets + 4 rays + origin
  CHECK(faces.size() == 10);
  std::size_t facets = 0;
  for (const auto& f : faces) facets += (f.size() == 2) ? 1 : 0;
  CHECK(facets == 4);
}

TEST_CASE("dual_description cross-checked against the reference enumeration") {
  const std::vector<QVec> ineqs = {qv({1, 0, 0}), qv({0, 1, 0}), qv({1, 1, -1})};
  const DDPair dd = dual_description(3, ineqs);
  std::vector<refsolve::RefRow> rows;
  for (const auto& f : ineqs) rows.push_back({f, Rat(0)});
  const auto ref = refsolve::ref_enumerate(3, rows);
  CHECK(ref.feasible);
  CHECK(dd.lin.size() == ref.lineality.size());
  CHECK(same_vector_set(dd.rays, ref.rays));
}

TEST_CASE("dual_description with equations") {
  const DDPair dd = dual_description(3, {qv({1, 0, 0}), qv({0, 1, 0})},
                                     {qv({1, 1, 1})});
  CHECK(dd.lin.empty());
  CHECK(same_vector_set(dd.rays, {qv({1, 0, -1}), qv({0, 1, -1})}));
}
