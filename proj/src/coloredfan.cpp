/** @file
 *  @brief Colored cones and fans over an embedding-level lattice realization.
 */
#include "sphcrit/coloredfan.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sphcrit/linalg.hpp"
#include "sphcrit/lp.hpp"

namespace sphcrit {

namespace {

/** Character vector (simple-root coefficients ++ torus coordinates) of an
 *  element of M given in M coordinates. */
QVec character_of(const LunaEmbeddingData& E, const QVec& m_coords) {
  QVec out = qvec_zero(E.R.char_dim());
  for (std::size_t j = 0; j < E.m_basis.size(); ++j)
    out = add(out, scale(m_coords[j], E.m_basis[j]));
  return out;
}

/** Simple-root coordinate vector of the i-th spherical root. */
QVec sigma_root_coords(const LunaEmbeddingData& E, int i) {
  const QVec ch = character_of(E, E.sigma_m[i]);
  return QVec(ch.begin(), ch.begin() + E.R.simple_count());
}

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/** Deterministic sort key of a colored cone. */
std::pair<std::vector<std::string>, std::vector<std::string>> cone_key(
    const ColoredCone& cc) {
  std::vector<std::string> g;
  for (const auto& x : cc.gens) g.push_back(x.label);
  std::sort(g.begin(), g.end());
  auto c = cc.colors;
  std::sort(c.begin(), c.end());
  return {g, c};
}

void sort_fan(ColoredFan& F) {
  std::sort(F.cones.begin(), F.cones.end(),
            [](const ColoredCone& a, const ColoredCone& b) {
              const auto ka = cone_key(a), kb = cone_key(b);
              if (ka.first.size() != kb.first.size())
                return ka.first.size() < kb.first.size();
              return ka < kb;
            });
}

}  // namespace

const EmbColor* LunaEmbeddingData::find_color(const std::string& label) const {
  for (const auto& c : colors)
    if (c.label == label) return &c;
  return nullptr;
}

const LabeledGen* ColoredCone::find_gen(const std::string& label) const {
  for (const auto& g : gens)
    if (g.label == label) return &g;
  return nullptr;
}

Cone valuation_cone(const LunaEmbeddingData& E) {
  std::vector<QVec> ineqs;
  for (const auto& g : E.sigma_m) ineqs.push_back(negate(g));
  return Cone::from_inequalities(E.rank(), ineqs);
}

Int color_multiplicity(const LunaEmbeddingData& E, const EmbColor& c) {
  if (c.type != ColorType::B) return Int(1);
  const Rat m = E.R.coroot_pair(c.moved_by.at(0), E.R.kappa(E.sp));
  return num(m);
}

FanContext context_of(const LunaEmbeddingData& E) {
  FanContext ctx;
  ctx.dim = E.rank();
  for (const auto& c : E.colors) {
    ctx.color_rho[c.label] = c.rho;
    ctx.color_m[c.label] = color_multiplicity(E, c);
  }
  ctx.V = valuation_cone(E);
  return ctx;
}

// ---- embedding validation --------------------------------------------------

std::vector<Violation> validate_embedding(const LunaEmbeddingData& E) {
  std::vector<Violation> out;
  const int n = E.R.simple_count();
  const int cd = E.R.char_dim();
  const int r = E.rank();

  for (const auto& b : E.m_basis)
    if (static_cast<int>(b.size()) != cd) out.push_back({"BadShape", "m_basis"});
  for (const auto& g : E.sigma_m)
    if (static_cast<int>(g.size()) != r) out.push_back({"BadShape", "sigma_m"});
  for (const auto& c : E.colors)
    if (static_cast<int>(c.rho.size()) != r) out.push_back({"BadShape", c.label});
  for (const auto& l : E.sp)
    if (E.R.label_index(l) < 0) out.push_back({"UnknownLabel", "Sp: " + l});
  if (!out.empty()) return out;

  if (rank_of(E.m_basis) < r) out.push_back({"MBasisDependent", "m_basis"});

  for (std::size_t i = 0; i < E.sigma_m.size(); ++i) {
    const QVec& g = E.sigma_m[i];
    if (!is_integral(g)) {
      out.push_back({"SigmaNotIntegral", qvec_to_string(g)});
      continue;
    }
    Int gc(0);
    for (const Rat& x : g) gc = boost::multiprecision::gcd(gc, num(x));
    if (gc != 1) out.push_back({"SigmaNotPrimitive", qvec_to_string(g)});
    const QVec ch = character_of(E, g);
    for (int j = n; j < cd; ++j)
      if (sgn(ch[j]) != 0) {
        out.push_back({"SigmaTorusPart", qvec_to_string(g)});
        break;
      }
  }
  {
    std::set<std::string> seen;
    for (const auto& c : E.colors) {
      if (!seen.insert(c.label).second) out.push_back({"DuplicateLabel", c.label});
      if (!is_integral(c.rho)) out.push_back({"RhoNotIntegral", c.label});
      if (is_zero(c.rho)) out.push_back({"ColorZero", c.label});
      if (c.moved_by.empty())
        out.push_back({"ColorSetMismatch", c.label + " moved by nothing"});
      for (const auto& a : c.moved_by)
        if (E.R.label_index(a) < 0)
          out.push_back({"UnknownLabel", c.label + " mover " + a});
    }
  }
  if (!out.empty()) return out;

  // Membership of simple roots in Sigma / half Sigma, by root coordinates.
  std::vector<QVec> sigma_roots;
  for (std::size_t i = 0; i < E.sigma_m.size(); ++i)
    sigma_roots.push_back(sigma_root_coords(E, i));
  auto sigma_has = [&](const QVec& v) {
    for (const auto& g : sigma_roots)
      if (compare(g, v) == 0) return true;
    return false;
  };
  auto unit = [&](int i, const Rat& s) {
    QVec v = qvec_zero(n);
    v[i] = s;
    return v;
  };

  auto pairing_row = [&](const std::string& alpha) {
    QVec row;  // values of the coroot on the basis of M
    for (const auto& b : E.m_basis) row.push_back(E.R.coroot_pair(alpha, b));
    return row;
  };

  for (const auto& c : E.colors) {
    switch (c.type) {
      case ColorType::A:
        for (const auto& a : c.moved_by)
          if (!sigma_has(unit(E.R.label_index(a), Rat(1))))
            out.push_back({"TypeMismatch", c.label + ": mover " + a +
                                               " is not a spherical root"});
        break;
      case ColorType::TwoA: {
        if (c.moved_by.size() != 1) {
          out.push_back({"TypeMismatch", c.label});
          break;
        }
        const int ai = E.R.label_index(c.moved_by[0]);
        if (!sigma_has(unit(ai, Rat(2))))
          out.push_back({"TypeMismatch", c.label});
        QVec expect = pairing_row(c.moved_by[0]);
        for (Rat& x : expect) x /= 2;
        if (compare(c.rho, expect) != 0) out.push_back({"RhoMismatch", c.label});
        break;
      }
      case ColorType::B: {
        if (c.moved_by.empty() || c.moved_by.size() > 2) {
          out.push_back({"TypeMismatch", c.label});
          break;
        }
        bool ok = true;
        for (const auto& a : c.moved_by) {
          const int ai = E.R.label_index(a);
          const bool in_sp =
              std::find(E.sp.begin(), E.sp.end(), a) != E.sp.end();
          if (in_sp || sigma_has(unit(ai, Rat(1))) || sigma_has(unit(ai, Rat(2))))
            ok = false;
        }
        if (c.moved_by.size() == 2) {
          const int ai = E.R.label_index(c.moved_by[0]);
          const int bi = E.R.label_index(c.moved_by[1]);
          if (E.R.cartan()[ai][bi] != 0) ok = false;
          QVec s = unit(ai, Rat(1));
          s[bi] = 1;
          if (!sigma_has(s) && !sigma_has(scale(Rat(1, 2), s))) ok = false;
          if (compare(pairing_row(c.moved_by[0]), pairing_row(c.moved_by[1])) != 0)
            out.push_back({"RhoMismatch", c.label + ": movers disagree on M"});
        }
        if (!ok) {
          out.push_back({"TypeMismatch", c.label});
          break;
        }
        if (compare(c.rho, pairing_row(c.moved_by[0])) != 0)
          out.push_back({"RhoMismatch", c.label});
        break;
      }
    }
  }

  // Type-a pairs add up to the coroot on all of M.
  for (int ai = 0; ai < n; ++ai) {
    const std::string a = E.R.simple_labels()[ai];
    if (!sigma_has(unit(ai, Rat(1)))) continue;
    std::vector<const EmbColor*> movers;
    for (const auto& c : E.colors)
      if (c.type == ColorType::A &&
          std::find(c.moved_by.begin(), c.moved_by.end(), a) != c.moved_by.end())
        movers.push_back(&c);
    if (movers.size() != 2) {
      out.push_back({"A1", a + " moves " + std::to_string(movers.size()) +
                               " type-a colors, expected 2"});
      continue;
    }
    if (compare(add(movers[0]->rho, movers[1]->rho), pairing_row(a)) != 0)
      out.push_back({"A2", a});
  }
  // Exactly one color for each doubled or type-b simple root.
  for (int ai = 0; ai < n; ++ai) {
    const std::string a = E.R.simple_labels()[ai];
    const bool in_sp = std::find(E.sp.begin(), E.sp.end(), a) != E.sp.end();
    if (in_sp || sigma_has(unit(ai, Rat(1)))) continue;
    const ColorType want =
        sigma_has(unit(ai, Rat(2))) ? ColorType::TwoA : ColorType::B;
    int count = 0;
    for (const auto& c : E.colors)
      if (c.type == want &&
          std::find(c.moved_by.begin(), c.moved_by.end(), a) != c.moved_by.end())
        ++count;
    if (count != 1)
      out.push_back({"ColorSetMismatch",
                     a + " moves " + std::to_string(count) + " colors"});
  }
  if (!out.empty()) return out;

  // Remaining skeleton axioms, restricted to the span of Sigma.
  SphericalSkeleton sk;
  sk.R = E.R;
  sk.sp = E.sp;
  sk.sigma = sigma_roots;
  for (const auto& c : E.colors)
    if (c.type == ColorType::A) {
      QVec rho;
      for (const auto& g : E.sigma_m) rho.push_back(dot(c.rho, g));
      sk.typea.push_back({c.label, c.moved_by, rho});
    }
  for (const auto& v : validate_skeleton(sk)) out.push_back(v);
  return out;
}

void require_valid_embedding(const LunaEmbeddingData& E) {
  const auto v = validate_embedding(E);
  if (v.empty()) return;
  std::ostringstream os;
  os << "invalid embedding data:";
  for (const auto& x : v) os << " [" << x.code << ": " << x.witness << "]";
  throw std::invalid_argument(os.str());
}

// ---- colored cones ---------------------------------------------------------

Cone cone_of(const FanContext& ctx, const ColoredCone& cc) {
  std::vector<QVec> vecs;
  for (const auto& g : cc.gens) vecs.push_back(g.v);
  return Cone(ctx.dim, std::move(vecs));
}

bool colored_cone_genuine(const FanContext& ctx, const ColoredCone& cc) {
  const Cone c = cone_of(ctx, cc);
  std::vector<LinRow> rows;
  for (const auto& f : ctx.V.facet_normals()) rows.push_back({f, Rat(0), Rel::Ge});
  for (const auto& e : ctx.V.span_equations()) rows.push_back({e, Rat(0), Rel::Eq});
  for (const auto& e : c.span_equations()) rows.push_back({e, Rat(0), Rel::Eq});
  std::vector<std::pair<QVec, Rat>> strict;
  for (const auto& f : c.facet_normals()) strict.push_back({f, Rat(0)});
  return lp_feasible_strict(ctx.dim, rows, strict);
}

bool colored_cones_same(const FanContext& ctx, const ColoredCone& a,
                        const ColoredCone& b) {
  if (sorted_unique(a.colors) != sorted_unique(b.colors)) return false;
  return cones_equal(cone_of(ctx, a), cone_of(ctx, b));
}

std::vector<ColoredCone> colored_faces(const FanContext& ctx,
                                       const ColoredCone& cc) {
  const Cone c = cone_of(ctx, cc);
  std::vector<ColoredCone> out;
  for (const auto& idx : face_generator_sets(c)) {
    ColoredCone face;
    for (int i : idx) face.gens.push_back(cc.gens[i]);
    const Cone fc = cone_of(ctx, face);
    for (const auto& d : cc.colors)
      if (fc.contains(ctx.color_rho.at(d))) face.colors.push_back(d);
    face.colors = sorted_unique(face.colors);
    bool dup = false;
    for (const auto& prev : out)
      if (colored_cones_same(ctx, prev, face)) dup = true;
    if (!dup) out.push_back(std::move(face));
  }
  return out;
}

// ---- fan validation --------------------------------------------------------

std::vector<Violation> validate_fan(const FanContext& ctx, const ColoredFan& F,
                                    bool abstract_ok) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < F.cones.size(); ++i) {
    const ColoredCone& cc = F.cones[i];
    const std::string where = "cone " + std::to_string(i);
    std::set<std::string> labels;
    for (const auto& g : cc.gens) {
      if (static_cast<int>(g.v.size()) != ctx.dim) {
        out.push_back({"BadShape", where});
        return out;
      }
      if (!labels.insert(g.label).second)
        out.push_back({"DuplicateLabel", where + ": " + g.label});
      if (is_zero(g.v)) {
        out.push_back({"ZeroGenerator", where + ": " + g.label});
        return out;
      }
      if (g.is_color) {
        auto it = ctx.color_rho.find(g.label);
        if (it == ctx.color_rho.end())
          out.push_back({"UnknownLabel", where + ": " + g.label});
        else if (compare(g.v, it->second) != 0)
          out.push_back({"LabelVectorMismatch", where + ": " + g.label});
        if (std::find(cc.colors.begin(), cc.colors.end(), g.label) ==
            cc.colors.end())
          out.push_back({"ColorGenNotUsed", where + ": " + g.label});
      } else {
        if (ctx.color_rho.count(g.label))
          out.push_back({"LabelClash", where + ": " + g.label});
        if (!is_integral(g.v))
          out.push_back({"RayNotIntegral", where + ": " + g.label});
        else if (compare(primitive(g.v), g.v) != 0)
          out.push_back({"RayNotPrimitive", where + ": " + g.label});
        if (!ctx.V.contains(g.v))
          out.push_back({"RayOutsideValuation", where + ": " + g.label});
      }
    }
    std::set<std::string> cs;
    for (const auto& d : cc.colors) {
      if (!cs.insert(d).second) out.push_back({"DuplicateLabel", where + ": " + d});
      if (!ctx.color_rho.count(d))
        out.push_back({"UnknownLabel", where + ": color " + d});
    }
  }
  for (const auto& v : out)
    if (v.code == "BadShape" || v.code == "ZeroGenerator" ||
        v.code == "UnknownLabel")
      return out;

  // Invariant-ray labels name one vector fan-wide, and distinct labels name
  // distinct rays.
  {
    std::map<std::string, QVec> ray_of;
    for (const auto& cc : F.cones)
      for (const auto& g : cc.gens) {
        if (g.is_color) continue;
        auto [it, fresh] = ray_of.emplace(g.label, g.v);
        if (!fresh && compare(it->second, g.v) != 0)
          out.push_back({"LabelVectorMismatch", g.label});
      }
    for (auto it = ray_of.begin(); it != ray_of.end(); ++it)
      for (auto jt = std::next(it); jt != ray_of.end(); ++jt)
        if (compare(it->second, jt->second) == 0)
          out.push_back({"DuplicateRay", it->first + "," + jt->first});
  }

  std::vector<Cone> geo;
  for (const auto& cc : F.cones) geo.push_back(cone_of(ctx, cc));

  for (std::size_t i = 0; i < F.cones.size(); ++i) {
    const ColoredCone& cc = F.cones[i];
    const std::string where = "cone " + std::to_string(i);
    if (!geo[i].is_strictly_convex())
      out.push_back({"NotStrictlyConvex", where});
    for (const auto& d : cc.colors) {
      auto it = ctx.color_rho.find(d);
      if (it != ctx.color_rho.end() && !geo[i].contains(it->second))
        out.push_back({"ColorOutsideCone", where + ": " + d});
    }
    if (geo[i].is_strictly_convex()) {
      const auto& ext = geo[i].extreme_rays();
      for (const auto& g : cc.gens) {
        if (g.is_color) continue;
        bool found = false;
        for (const auto& r : ext)
          if (compare(r, g.v) == 0) found = true;
        if (!found) out.push_back({"RayNotExtreme", where + ": " + g.label});
      }
    }
    if (!abstract_ok && !colored_cone_genuine(ctx, cc))
      out.push_back({"NotGenuine", where});
  }

  // Face closure.
  for (std::size_t i = 0; i < F.cones.size(); ++i)
    for (const auto& face : colored_faces(ctx, F.cones[i])) {
      if (!abstract_ok && !colored_cone_genuine(ctx, face)) continue;
      bool found = false;
      for (std::size_t j = 0; j < F.cones.size(); ++j)
        if (colored_cones_same(ctx, face, F.cones[j])) found = true;
      if (!found)
        out.push_back({"FaceMissing", "cone " + std::to_string(i) + " face"});
    }

  // Duplicates and overlapping relative interiors on the valuation cone.
  for (std::size_t i = 0; i < F.cones.size(); ++i)
    for (std::size_t j = i + 1; j < F.cones.size(); ++j) {
      if (colored_cones_same(ctx, F.cones[i], F.cones[j])) {
        out.push_back({"DuplicateCone",
                       std::to_string(i) + "," + std::to_string(j)});
        continue;
      }
      std::vector<LinRow> rows;
      for (const auto& f : ctx.V.facet_normals())
        rows.push_back({f, Rat(0), Rel::Ge});
      for (const auto& e : ctx.V.span_equations())
        rows.push_back({e, Rat(0), Rel::Eq});
      std::vector<std::pair<QVec, Rat>> strict;
      for (const Cone* c : {&geo[i], &geo[j]}) {
        for (const auto& e : c->span_equations())
          rows.push_back({e, Rat(0), Rel::Eq});
        for (const auto& f : c->facet_normals()) strict.push_back({f, Rat(0)});
      }
      if (lp_feasible_strict(ctx.dim, rows, strict))
        out.push_back({"InteriorsOverlap",
                       std::to_string(i) + "," + std::to_string(j)});
    }
  return out;
}

std::vector<Violation> validate_fan(const LunaEmbeddingData& E,
                                    const ColoredFan& F, bool abstract_ok) {
  return validate_fan(context_of(E), F, abstract_ok);
}

// ---- completeness and the Gorenstein-type certificate ----------------------

namespace {

HomRegion region_of_valuation(const FanContext& ctx) {
  HomRegion start;
  for (const auto& f : ctx.V.facet_normals()) start.ge.push_back(f);
  for (const auto& e : ctx.V.span_equations()) {
    start.ge.push_back(e);
    start.ge.push_back(negate(e));
  }
  return start;
}

}  // namespace

bool is_complete(const FanContext& ctx, const ColoredFan& F) {
  std::vector<Cone> geo;
  for (const auto& cc : F.cones) geo.push_back(cone_of(ctx, cc));
  return cones_cover(ctx.dim, geo, {region_of_valuation(ctx)});
}

bool is_complete(const LunaEmbeddingData& E, const ColoredFan& F) {
  return is_complete(context_of(E), F);
}

QGorCertificate is_q_gorenstein(const FanContext& ctx, const ColoredFan& F) {
  QGorCertificate cert;
  for (const auto& cc : F.cones) {
    std::vector<QVec> A;
    QVec b;
    for (const auto& g : cc.gens)
      if (!g.is_color) {
        A.push_back(g.v);
        b.push_back(Rat(1));
      }
    for (const auto& d : cc.colors) {
      A.push_back(ctx.color_rho.at(d));
      b.push_back(Rat(ctx.color_m.at(d)));
    }
    auto f = solve_linear(A, b);
    if (!f) cert.ok = false;
    cert.per_cone.push_back(std::move(f));
  }
  return cert;
}

QGorCertificate is_q_gorenstein(const LunaEmbeddingData& E,
                                const ColoredFan& F) {
  return is_q_gorenstein(context_of(E), F);
}

std::vector<LabeledGen> invariant_ray_divisors(const ColoredFan& F) {
  std::map<std::string, QVec> seen;
  for (const auto& cc : F.cones)
    for (const auto& g : cc.gens)
      if (!g.is_color) seen.emplace(g.label, g.v);
  std::vector<LabeledGen> out;
  for (const auto& [label, v] : seen) out.push_back({label, false, v});
  return out;
}

// ---- wp and the skeleton of an embedding -----------------------------------

WpValue wp_tilde_embedding(const LunaEmbeddingData& E, const ColoredFan& F) {
  require_valid_embedding(E);
  const int r = E.rank();
  std::vector<std::pair<QVec, Int>> delta;
  for (const auto& c : E.colors) delta.push_back({c.rho, color_multiplicity(E, c)});
  for (const auto& g : invariant_ray_divisors(F)) delta.push_back({g.v, Int(1)});

  Rat constant(0);
  QVec objective = qvec_zero(r);
  Polyhedron P;
  P.dim = r;
  for (const auto& [rho, m] : delta) {
    constant += Rat(m - 1);
    objective = add(objective, rho);
    P.rows.push_back({rho, Rat(-m)});
  }
  const Rat rplus(rplus_difference(E.R, E.sp));
  if (r == 0) return WpValue::finite(rplus - constant, {});

  const Cone T(r, E.sigma_m);
  const SupOutcome res = solve_lp_sup(P, T, objective);
  switch (res.kind) {
    case SupOutcome::Kind::Unbounded:
      return WpValue::negative_infinity();
    case SupOutcome::Kind::Infeasible:
      throw std::logic_error("wp region empty although 0 is always feasible");
    case SupOutcome::Kind::Value:
      return WpValue::finite(rplus - (constant + res.value), res.argmax);
  }
  throw std::logic_error("unreachable");
}

SphericalSkeleton skeleton_of_embedding(const LunaEmbeddingData& E,
                                        const ColoredFan& F) {
  SphericalSkeleton sk;
  sk.R = E.R;
  sk.sp = E.sp;
  for (std::size_t i = 0; i < E.sigma_m.size(); ++i)
    sk.sigma.push_back(sigma_root_coords(E, static_cast<int>(i)));
  auto on_sigma = [&](const QVec& nvec) {
    QVec rho;
    for (const auto& g : E.sigma_m) rho.push_back(dot(nvec, g));
    return rho;
  };
  for (const auto& c : E.colors)
    if (c.type == ColorType::A)
      sk.typea.push_back({c.label, c.moved_by, on_sigma(c.rho)});
  for (const auto& g : invariant_ray_divisors(F))
    sk.gamma.push_back({g.label, on_sigma(g.v)});
  return sk;
}

// ---- star subdivision ------------------------------------------------------

ColoredFan colored_star_subdivision(const FanContext& ctx, const ColoredFan& F,
                                    const std::string& color_label) {
  auto it = ctx.color_rho.find(color_label);
  if (it == ctx.color_rho.end())
    throw std::invalid_argument("unknown color " + color_label);
  const QVec& rho_d = it->second;

  struct Entry {
    ColoredCone cc;
    Cone geo;
  };
  std::vector<Entry> fa;
  for (const auto& cc : F.cones)
    for (const auto& face : colored_faces(ctx, cc)) {
      bool dup = false;
      for (const auto& e : fa)
        if (colored_cones_same(ctx, e.cc, face)) dup = true;
      if (!dup) fa.push_back({face, cone_of(ctx, face)});
    }

  bool in_support = false;
  for (const auto& e : fa)
    if (e.geo.contains(rho_d)) in_support = true;
  if (!in_support)
    throw std::invalid_argument("color vector lies outside the fan support");

  std::vector<ColoredCone> result;
  auto push_unique = [&](ColoredCone cc) {
    for (const auto& prev : result)
      if (colored_cones_same(ctx, prev, cc)) return;
    result.push_back(std::move(cc));
  };

  for (const auto& e : fa) {
    if (e.geo.contains(rho_d)) continue;
    // Cones avoiding the new ray survive unchanged.
    if (colored_cone_genuine(ctx, e.cc)) push_unique(e.cc);
    // Extension by the new ray, when jointly contained in a cone of the fan.
    bool fits = false;
    for (const auto& big : fa) {
      if (!big.geo.contains(rho_d)) continue;
      bool all_in = true;
      for (const auto& g : e.cc.gens)
        if (!big.geo.contains(g.v)) all_in = false;
      if (all_in) {
        fits = true;
        break;
      }
    }
    if (!fits) continue;
    ColoredCone ext = e.cc;
    ext.gens.push_back({color_label, true, rho_d});
    ext.colors.push_back(color_label);
    ext.colors = sorted_unique(ext.colors);
    if (colored_cone_genuine(ctx, ext)) push_unique(std::move(ext));
  }

  ColoredFan out;
  out.cones = std::move(result);
  sort_fan(out);
  return out;
}

ColoredFan colored_star_subdivision(const LunaEmbeddingData& E,
                                    const ColoredFan& F,
                                    const std::string& color_label) {
  return colored_star_subdivision(context_of(E), F, color_label);
}

// ---- orbits and supports ---------------------------------------------------

std::vector<std::string> orbit_divisor_set(const ColoredCone& cc) {
  std::vector<std::string> out = cc.colors;
  for (const auto& g : cc.gens)
    if (!g.is_color) out.push_back(g.label);
  return sorted_unique(out);
}

std::vector<int> maximal_cone_indices(const FanContext& ctx,
                                      const ColoredFan& F) {
  std::vector<Cone> geo;
  for (const auto& cc : F.cones) geo.push_back(cone_of(ctx, cc));
  std::vector<int> out;
  for (std::size_t i = 0; i < F.cones.size(); ++i) {
    bool strictly_inside = false;
    for (std::size_t j = 0; j < F.cones.size() && !strictly_inside; ++j) {
      if (i == j || cones_equal(geo[i], geo[j])) continue;
      bool contained = true;
      for (const auto& g : F.cones[i].gens)
        if (!geo[j].contains(g.v)) {
          contained = false;
          break;
        }
      if (contained) strictly_inside = true;
    }
    if (!strictly_inside) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool supports_equal_on_valuation(const FanContext& ctx, const ColoredFan& F1,
                                 const ColoredFan& F2) {
  auto covered = [&](const ColoredFan& a, const ColoredFan& b) {
    std::vector<Cone> geo_b;
    for (const auto& cc : b.cones) geo_b.push_back(cone_of(ctx, cc));
    for (const auto& cc : a.cones) {
      const Cone c = cone_of(ctx, cc);
      HomRegion start = region_of_valuation(ctx);
      for (const auto& f : c.facet_normals()) start.ge.push_back(f);
      for (const auto& e : c.span_equations()) {
        start.ge.push_back(e);
        start.ge.push_back(negate(e));
      }
      if (!cones_cover(ctx.dim, geo_b, {start})) return false;
    }
    return true;
  };
  return covered(F1, F2) && covered(F2, F1);
}

Codirectionality codirectional_classify(const LunaEmbeddingData& E,
                                        const std::string& l1,
                                        const std::string& l2) {
  if (l1 == l2) throw std::invalid_argument("need two distinct colors");
  const EmbColor* c1 = E.find_color(l1);
  const EmbColor* c2 = E.find_color(l2);
  if (!c1 || !c2) throw std::invalid_argument("unknown color label");
  if (is_zero(c1->rho) || is_zero(c2->rho))
    throw std::invalid_argument("zero color vector");

  // Same ray means rho1 = t * rho2 with t > 0.
  Rat t(0);
  bool parallel = true;
  for (std::size_t i = 0; i < c1->rho.size() && parallel; ++i) {
    const Rat &x = c1->rho[i], &y = c2->rho[i];
    if (sgn(y) == 0) {
      if (sgn(x) != 0) parallel = false;
      continue;
    }
    const Rat q = x / y;
    if (sgn(t) == 0)
      t = q;
    else if (q != t)
      parallel = false;
  }
  if (!parallel || sgn(t) <= 0) return Codirectionality::NotCodirectional;
  if (c1->type == ColorType::A && c2->type == ColorType::A &&
      compare(c1->rho, c2->rho) == 0)
    return Codirectionality::TypeA_Equal;
  if (c1->type == ColorType::B && c2->type == ColorType::B)
    return Codirectionality::TypeB_Proportional;
  throw std::invalid_argument(
      "codirectional colors outside the two admissible patterns");
}

}  // namespace sphcrit
