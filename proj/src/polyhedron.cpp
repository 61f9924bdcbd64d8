/** @file
 *  @brief Polyhedron operations built on the cone and LP kernels.
 */
#include "sphcrit/polyhedron.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphcrit {

PolyVRep enumerate_polyhedron(const Polyhedron& p) {
  const int d = p.dim;
  // Homogenize: { (x, t) : n·x - b t >= 0, t >= 0 }.
  std::vector<QVec> ineqs;
  for (const auto& h : p.rows) {
    if (static_cast<int>(h.normal.size()) != d)
      throw std::invalid_argument("enumerate_polyhedron: row size mismatch");
    QVec row = h.normal;
    row.push_back(-h.offset);
    ineqs.push_back(std::move(row));
  }
  {
    QVec last = qvec_zero(d + 1);
    last[d] = 1;
    ineqs.push_back(std::move(last));
  }
  DDPair dd = dual_description(d + 1, ineqs);
  PolyVRep out;
  for (const auto& l : dd.lin) {
    // t-coordinate of lineality vectors is forced to zero by t >= 0.
    QVec v(l.begin(), l.begin() + d);
    out.lin.push_back(std::move(v));
  }
  std::vector<QVec> vertex_like;
  for (const auto& r : dd.rays) {
    QVec v(r.begin(), r.begin() + d);
    if (r[d] == 0) {
      out.rays.push_back(std::move(v));
    } else {
      for (auto& x : v) x /= r[d];
      vertex_like.push_back(std::move(v));
    }
  }
  out.lineality_free = out.lin.empty();
  out.vertices = std::move(vertex_like);
  std::sort(out.vertices.begin(), out.vertices.end(), QVecLess{});
  return out;
}

SupOutcome solve_lp_sup(const Polyhedron& p, const Cone& t, const QVec& objective) {
  if (p.dim != t.ambient_dim())
    throw std::invalid_argument("solve_lp_sup: dimension mismatch");
  std::vector<LinRow> rows;
  for (const auto& h : p.rows) rows.push_back({h.normal, h.offset, Rel::Ge});
  for (const auto& f : t.facet_normals()) rows.push_back({f, Rat(0), Rel::Ge});
  for (const auto& e : t.span_equations()) rows.push_back({e, Rat(0), Rel::Eq});
  const LpOutcome r = lp_maximize(p.dim, rows, objective);
  SupOutcome out;
  switch (r.status) {
    case LpOutcome::Status::Optimal:
      out.kind = SupOutcome::Kind::Value;
      out.value = r.value;
      out.argmax = r.x;
      break;
    case LpOutcome::Status::Unbounded:
      out.kind = SupOutcome::Kind::Unbounded;
      break;
    case LpOutcome::Status::Infeasible:
      out.kind = SupOutcome::Kind::Infeasible;
      break;
  }
  return out;
}

bool region_empty(int dim, const HomRegion& r) {
  // Scale invariance: s·x > 0 is solvable with the other constraints iff
  // s·x >= 1 is (homogeneous system).
  std::vector<LinRow> rows;
  for (const auto& g : r.ge) rows.push_back({g, Rat(0), Rel::Ge});
  for (const auto& s : r.gt) rows.push_back({s, Rat(1), Rel::Ge});
  return !lp_feasible(dim, rows);
}

std::vector<HomRegion> subtract_cone(int dim, const HomRegion& r, const Cone& c) {
  if (c.ambient_dim() != dim)
    throw std::invalid_argument("subtract_cone: dimension mismatch");
  std::vector<QVec> walls = c.facet_normals();
  for (const auto& e : c.span_equations()) {
    walls.push_back(e);
    walls.push_back(negate(e));
  }
  // x notin c  <=>  some wall is violated; split by the first violated wall.
  std::vector<HomRegion> pieces;
  HomRegion prefix = r;
  for (const auto& w : walls) {
    HomRegion piece = prefix;
    piece.gt.push_back(negate(w));  // w·x < 0
    if (!region_empty(dim, piece)) pieces.push_back(std::move(piece));
    prefix.ge.push_back(w);
  }
  return pieces;
}

namespace {

bool cone_inside(const Cone& a, const Cone& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

}  // namespace

bool cones_cover(int dim, const std::vector<Cone>& cones,
                 const std::vector<HomRegion>& start) {
  // A cone contained in another contributes nothing to the union, but
  // subtracting it still splits every region at each of its walls; dropping
  // the redundant ones keeps the region count from growing exponentially
  // when the list contains every face of every cone.
  std::vector<const Cone*> maximal;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < cones.size() && !redundant; ++j)
      if (j != i && cone_inside(cones[i], cones[j]) &&
          (j < i || !cone_inside(cones[j], cones[i])))
        redundant = true;
    if (!redundant) maximal.push_back(&cones[i]);
  }

  std::vector<HomRegion> work;
  for (const auto& r : start)
    if (!region_empty(dim, r)) work.push_back(r);
  for (const Cone* c : maximal) {
    std::vector<HomRegion> next;
    for (const auto& r : work) {
      auto pieces = subtract_cone(dim, r, *c);
      next.insert(next.end(), pieces.begin(), pieces.end());
    }
    work = std::move(next);
    if (work.empty()) return true;
  }
  return work.empty();
}

}  // namespace sphcrit
