/** @file
 *  @brief Double description method and the Cone type.
 *
 *  The incremental step keeps, for every ray, the set of already-processed
 *  constraints it satisfies with equality.  Adjacency of two rays is decided
 *  by the exact rank test: p and n span a 2-face (modulo lineality) iff the
 *  normals tight on both have rank  ambient_dim - lineality_dim - 2.
 */
#include "sphcrit/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "sphcrit/linalg.hpp"

namespace sphcrit {

namespace {

struct TrackedRay {
  QVec v;
  std::vector<char> tight;  // tight[i] == 1  <=>  constraint i holds with equality
};

/** Reduce v modulo the echelon-reduced rows (for canonical ray reps). */
QVec reduce_mod(const std::vector<QVec>& echelon, QVec v) {
  for (const auto& row : echelon) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    const Rat f = v[p] / row[p];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
  }
  return v;
}

}  // namespace

DDPair dual_description(int dim, const std::vector<QVec>& ineqs,
                        const std::vector<QVec>& eqs) {
  std::vector<QVec> constraints;
  constraints.reserve(ineqs.size() + 2 * eqs.size());
  for (const auto& e : eqs) {
    constraints.push_back(e);
    constraints.push_back(negate(e));
  }
  for (const auto& f : ineqs) constraints.push_back(f);
  for (const auto& c : constraints)
    if (static_cast<int>(c.size()) != dim)
      throw std::invalid_argument("dual_description: constraint size mismatch");

  // Start from the whole space.
  std::vector<QVec> lin;
  for (int i = 0; i < dim; ++i) {
    QVec e = qvec_zero(dim);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<TrackedRay> rays;

  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const QVec& a = constraints[k];

    // Case 1: the constraint is not identically zero on the lineality space.
    std::size_t l0 = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        l0 = i;
        break;
      }
    if (l0 < lin.size()) {
      QVec pivot = lin[l0];
      Rat t0 = dot(a, pivot);
      if (t0 < 0) {
        pivot = negate(pivot);
        t0 = -t0;
      }
      std::vector<QVec> new_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == l0) continue;
        const Rat c = dot(a, lin[i]) / t0;
        new_lin.push_back(sub(lin[i], scale(c, pivot)));
      }
      lin = std::move(new_lin);
      for (auto& r : rays) {
        const Rat c = dot(a, r.v) / t0;
        r.v = sub(r.v, scale(c, pivot));
        r.tight.push_back(1);
      }
      TrackedRay promoted;
      promoted.v = std::move(pivot);
      promoted.tight.assign(k, 1);  // in old lineality: tight for all previous
      promoted.tight.push_back(0);  // strictly positive on the new constraint
      rays.push_back(std::move(promoted));
      continue;
    }

    // Case 2: constraint vanishes on lineality; split the rays.
    std::vector<std::size_t> pos, zero, neg;
    std::vector<Rat> vals(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      vals[i] = dot(a, rays[i].v);
      const int s = sgn(vals[i]);
      if (s > 0)
        pos.push_back(i);
      else if (s == 0)
        zero.push_back(i);
      else
        neg.push_back(i);
    }
    if (neg.empty()) {  // constraint is redundant; only update tightness
      for (std::size_t i = 0; i < rays.size(); ++i)
        rays[i].tight.push_back(vals[i] == 0 ? 1 : 0);
      continue;
    }

    const int ambient_rank_target =
        dim - static_cast<int>(lin.size()) - 2;  // rank for adjacency
    std::vector<TrackedRay> next;
    for (std::size_t i : pos) {
      TrackedRay r = rays[i];
      r.tight.push_back(0);
      next.push_back(std::move(r));
    }
    for (std::size_t i : zero) {
      TrackedRay r = rays[i];
      r.tight.push_back(1);
      next.push_back(std::move(r));
    }
    if (!pos.empty()) {
      std::set<QVec, QVecLess> seen;
      for (std::size_t ip : pos) {
        for (std::size_t in : neg) {
          const TrackedRay& p = rays[ip];
          const TrackedRay& n = rays[in];
          // Normals tight on both rays.
          std::vector<QVec> common;
          for (std::size_t j = 0; j < k; ++j)
            if (p.tight[j] && n.tight[j]) common.push_back(constraints[j]);
          if (rank_of(common) != ambient_rank_target) continue;
          QVec w = primitive(
              sub(scale(vals[ip], n.v), scale(vals[in], p.v)));
          if (!seen.insert(w).second) continue;
          TrackedRay nr;
          nr.v = std::move(w);
          nr.tight.resize(k + 1);
          for (std::size_t j = 0; j < k; ++j)
            nr.tight[j] = (p.tight[j] && n.tight[j]) ? 1 : 0;
          nr.tight[k] = 1;
          next.push_back(std::move(nr));
        }
      }
    }
    rays = std::move(next);
  }

  // Canonicalize: echelon lineality, rays reduced modulo it, primitive, sorted.
  DDPair out;
  out.lin = row_basis(lin);
  for (auto& l : out.lin) l = primitive(l);
  std::sort(out.lin.begin(), out.lin.end(), QVecLess{});
  std::vector<QVec> lin_ech = row_basis(lin);
  for (const auto& r : rays) {
    QVec red = reduce_mod(lin_ech, r.v);
    if (is_zero(red)) continue;  // ray fell into the lineality space
    out.rays.push_back(primitive(red));
  }
  std::sort(out.rays.begin(), out.rays.end(), QVecLess{});
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

// ---- Cone ------------------------------------------------------------------

struct Cone::Cache {
  bool have_hrep = false;
  std::vector<QVec> facets, span_eqs;
  bool have_vrep = false;
  std::vector<QVec> extreme, lineality;
};

Cone::Cone(int ambient_dim, std::vector<QVec> generators)
    : dim_(ambient_dim), gens_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) {
    if (static_cast<int>(g.size()) != dim_)
      throw std::invalid_argument("Cone: generator size mismatch");
    if (sphcrit::is_zero(g)) throw std::invalid_argument("Cone: zero generator");
  }
}

Cone Cone::from_inequalities(int ambient_dim, const std::vector<QVec>& ineqs,
                             const std::vector<QVec>& eqs) {
  DDPair dd = dual_description(ambient_dim, ineqs, eqs);
  std::vector<QVec> gens = dd.rays;
  for (const auto& l : dd.lin) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  return Cone(ambient_dim, std::move(gens));
}

Cone::Cache& Cone::cache() const {
  if (!cache_) throw std::logic_error("Cone: use of default-constructed cone");
  return *cache_;
}

const std::vector<QVec>& Cone::facet_normals() const {
  Cache& c = cache();
  if (!c.have_hrep) {
    DDPair dd = dual_description(dim_, gens_);  // V-rep of the dual cone
    c.facets = std::move(dd.rays);
    c.span_eqs = std::move(dd.lin);
    c.have_hrep = true;
  }
  return c.facets;
}

const std::vector<QVec>& Cone::span_equations() const {
  facet_normals();
  return cache().span_eqs;
}

const std::vector<QVec>& Cone::lineality_basis() const {
  Cache& c = cache();
  if (!c.have_vrep) {
    DDPair dd = dual_description(dim_, facet_normals(), span_equations());
    c.extreme = std::move(dd.rays);
    c.lineality = std::move(dd.lin);
    c.have_vrep = true;
  }
  return c.lineality;
}

const std::vector<QVec>& Cone::extreme_rays() const {
  lineality_basis();
  if (!cache().lineality.empty())
    throw std::logic_error("extreme_rays: cone is not strictly convex");
  return cache().extreme;
}

int Cone::dim() const { return dim_ - rank_of(span_equations()); }

bool Cone::contains(const QVec& v) const {
  for (const auto& e : span_equations())
    if (dot(e, v) != 0) return false;
  for (const auto& f : facet_normals())
    if (dot(f, v) < 0) return false;
  return true;
}

bool Cone::relative_interior_contains(const QVec& v) const {
  for (const auto& e : span_equations())
    if (dot(e, v) != 0) return false;
  for (const auto& f : facet_normals())
    if (dot(f, v) <= 0) return false;
  return true;
}

QVec Cone::relative_interior_point() const {
  QVec p = qvec_zero(dim_);
  for (const auto& g : gens_) p = add(p, g);
  return p;
}

Cone dual_cone(const Cone& c) {
  DDPair dd = dual_description(c.ambient_dim(), c.generators());
  std::vector<QVec> gens = dd.rays;
  for (const auto& l : dd.lin) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  return Cone(c.ambient_dim(), std::move(gens));
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  std::vector<QVec> ineqs = a.facet_normals();
  ineqs.insert(ineqs.end(), b.facet_normals().begin(), b.facet_normals().end());
  std::vector<QVec> eqs = a.span_equations();
  eqs.insert(eqs.end(), b.span_equations().begin(), b.span_equations().end());
  return Cone::from_inequalities(a.ambient_dim(), ineqs, eqs);
}

bool cones_equal(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

std::vector<std::vector<int>> face_generator_sets(const Cone& c) {
  const auto& gens = c.generators();
  const int n = static_cast<int>(gens.size());
  std::set<std::vector<int>> faces;
  std::vector<int> full(n);
  for (int i = 0; i < n; ++i) full[i] = i;
  faces.insert(full);
  std::vector<std::vector<int>> facet_tight;
  for (const auto& f : c.facet_normals()) {
    std::vector<int> t;
    for (int i = 0; i < n; ++i)
      if (dot(f, gens[i]) == 0) t.push_back(i);
    facet_tight.push_back(std::move(t));
  }
  // Close under intersection with facet tight sets.
  std::vector<std::vector<int>> work(faces.begin(), faces.end());
  while (!work.empty()) {
    std::vector<int> s = work.back();
    work.pop_back();
    for (const auto& t : facet_tight) {
      std::vector<int> inter;
      std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                            std::back_inserter(inter));
      if (faces.insert(inter).second) work.push_back(std::move(inter));
    }
  }
  return {faces.begin(), faces.end()};
}

}  // namespace sphcrit
