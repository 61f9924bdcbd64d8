/** @file
 *  @brief Incremental placing triangulation with visible-facet attachment.
 */
#include "sphcrit/triangulate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sphcrit/linalg.hpp"

namespace sphcrit {

std::vector<std::vector<int>> placing_triangulation(
    int dim, const std::vector<QVec>& vectors) {
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != dim)
      throw std::invalid_argument("placing_triangulation: size mismatch");
    if (is_zero(v))
      throw std::invalid_argument("placing_triangulation: zero vector");
  }
  std::vector<std::vector<int>> simplices;
  std::vector<int> used;
  Cone support;
  auto used_vectors = [&] {
    std::vector<QVec> g;
    for (int i : used) g.push_back(vectors[i]);
    return g;
  };
  for (int i = 0; i < static_cast<int>(vectors.size()); ++i) {
    const QVec& v = vectors[i];
    if (used.empty()) {
      simplices.push_back({i});
      used.push_back(i);
      support = Cone(dim, used_vectors());
      continue;
    }
    if (support.contains(v)) continue;  // inside: no new simplices
    if (!in_span(used_vectors(), v)) {
      // Dimension jump: v extends every maximal simplex.
      for (auto& s : simplices) s.push_back(i);
    } else {
      // Attach over the facets of the current support visible from v.
      std::set<std::vector<int>> fresh;
      for (const auto& f : support.facet_normals()) {
        if (dot(f, v) >= 0) continue;
        for (const auto& s : simplices) {
          std::vector<int> tau;
          for (int j : s)
            if (dot(f, vectors[j]) == 0) tau.push_back(j);
          if (tau.size() + 1 != s.size()) continue;
          tau.push_back(i);
          std::sort(tau.begin(), tau.end());
          fresh.insert(std::move(tau));
        }
      }
      simplices.insert(simplices.end(), fresh.begin(), fresh.end());
    }
    used.push_back(i);
    support = Cone(dim, used_vectors());
    if (!support.is_strictly_convex())
      throw std::invalid_argument(
          "placing_triangulation: vectors span a non-strictly-convex cone");
  }
  for (auto& s : simplices) std::sort(s.begin(), s.end());
  std::sort(simplices.begin(), simplices.end());
  return simplices;
}

std::vector<Cone> triangulate_cone(const Cone& c,
                                   const std::vector<QVec>& marked) {
  if (!c.is_strictly_convex())
    throw std::invalid_argument("triangulate_cone: cone not strictly convex");
  for (const auto& v : marked)
    if (!c.contains(v))
      throw std::invalid_argument("triangulate_cone: marked vector outside cone");
  Cone spanned(c.ambient_dim(), marked);
  if (!cones_equal(spanned, c))
    throw std::invalid_argument(
        "triangulate_cone: marked vectors do not generate the cone");
  std::vector<Cone> out;
  for (const auto& s : placing_triangulation(c.ambient_dim(), marked)) {
    std::vector<QVec> gens;
    for (int i : s) gens.push_back(marked[i]);
    out.emplace_back(c.ambient_dim(), std::move(gens));
  }
  return out;
}

}  // namespace sphcrit
