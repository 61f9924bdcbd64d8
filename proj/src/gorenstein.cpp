/** @file
 *  @brief Implementation of the five-stage fan conversion pipeline.
 */
#include "sphcrit/gorenstein.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sphcrit/linalg.hpp"
#include "sphcrit/subdivision.hpp"
#include "sphcrit/triangulate.hpp"

namespace sphcrit {

namespace {

QVec kappa_character(const LunaEmbeddingData& E) {
  QVec k = E.R.kappa(E.sp);
  k.resize(E.R.char_dim(), Rat(0));
  return k;
}

QVec append_coord(QVec v, const Rat& x) {
  v.push_back(x);
  return v;
}

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

class ConeCollector {
 public:
  explicit ConeCollector(const FanContext& ctx) : ctx_(ctx) {}

  void add(ColoredCone cc) {
    for (const auto& prev : cones_)
      if (colored_cones_same(ctx_, prev, cc)) return;
    cones_.push_back(std::move(cc));
  }

  void add_genuine(ColoredCone cc) {
    if (colored_cone_genuine(ctx_, cc)) add(std::move(cc));
  }

  ColoredFan take() {
    ColoredFan F;
    F.cones = std::move(cones_);
    sort_fan(F);
    return F;
  }

 private:
  const FanContext& ctx_;
  std::vector<ColoredCone> cones_;
};

std::string fresh_label(std::string base, const std::set<std::string>& used) {
  while (used.count(base)) base = "2:" + base;
  return base;
}

std::set<std::string> labels_in_use(const LunaEmbeddingData& E,
                                    const ColoredFan& F) {
  std::set<std::string> used;
  for (const auto& c : E.colors) used.insert(c.label);
  for (const auto& cc : F.cones)
    for (const auto& g : cc.gens) used.insert(g.label);
  return used;
}

/** Lift of one cone: invariant generators at height 1, every used color (on a
 *  generator ray or not) with its augmented vector. */
ColoredCone lift_cone(const FanContext& ctx_aug, const ColoredCone& cc) {
  ColoredCone L;
  for (const auto& g : cc.gens) {
    if (g.is_color) continue;
    L.gens.push_back({g.label, false, append_coord(g.v, Rat(1))});
  }
  for (const auto& d : cc.colors)
    L.gens.push_back({d, true, ctx_aug.color_rho.at(d)});
  L.colors = cc.colors;
  return L;
}

}  // namespace

bool needs_augmentation(const LunaEmbeddingData& E) {
  return !in_span(E.m_basis, kappa_character(E));
}

LunaEmbeddingData augment_kappa(const LunaEmbeddingData& E) {
  if (!needs_augmentation(E))
    throw std::invalid_argument(
        "a multiple of the anticanonical character already lies in the lattice");
  LunaEmbeddingData out = E;
  out.m_basis.push_back(kappa_character(E));
  for (auto& g : out.sigma_m) g.push_back(Rat(0));
  for (auto& c : out.colors)
    c.rho.push_back(Rat(color_multiplicity(E, *E.find_color(c.label))));
  return out;
}

ColoredFan lift_fan(const LunaEmbeddingData& E_aug, const ColoredFan& F) {
  const FanContext ctx = context_of(E_aug);
  ConeCollector acc(ctx);
  for (const auto& cc : F.cones) {
    ColoredCone L = lift_cone(ctx, cc);
    for (auto& face : colored_faces(ctx, L)) acc.add(std::move(face));
  }
  return acc.take();
}

ColoredFan complete_with_poles(const LunaEmbeddingData& E_aug,
                               const ColoredFan& F) {
  const FanContext ctx = context_of(E_aug);
  const int r = ctx.dim;
  ConeCollector acc(ctx);

  for (const auto& cc : lift_fan(E_aug, F).cones) acc.add_genuine(cc);

  const auto used = labels_in_use(E_aug, F);
  const std::string y_plus = fresh_label("Y+", used);
  const std::string y_minus = fresh_label("Y-", used);
  QVec pole = qvec_zero(r);
  pole[r - 1] = 1;

  for (const auto& cc : F.cones) {
    VectorConfiguration config;
    config.dim = r - 1;
    std::map<std::string, LabeledGen> lifted;
    for (const auto& g : cc.gens) {
      if (g.is_color) continue;
      config.items.push_back({g.label, g.v, Rat(1)});
      lifted[g.label] = {g.label, false, append_coord(g.v, Rat(1))};
    }
    for (const auto& d : cc.colors) {
      const QVec& aug = ctx.color_rho.at(d);
      config.items.push_back(
          {d, QVec(aug.begin(), aug.end() - 1), aug.back()});
      lifted[d] = {d, true, aug};
    }
    for (const SubdivisionSide side :
         {SubdivisionSide::Upper, SubdivisionSide::Lower}) {
      const Subdivision sub = regular_subdivision(config, side);
      const bool upper = side == SubdivisionSide::Upper;
      for (const auto& cell : sub.cells) {
        ColoredCone pc;
        for (const auto& label : cell) {
          const LabeledGen& g = lifted.at(label);
          pc.gens.push_back(g);
          if (g.is_color) pc.colors.push_back(label);
        }
        pc.gens.push_back({upper ? y_plus : y_minus, false,
                           upper ? pole : negate(pole)});
        std::sort(pc.colors.begin(), pc.colors.end());
        acc.add_genuine(std::move(pc));
      }
    }
  }
  return acc.take();
}

ColoredFan colors_to_rays(const LunaEmbeddingData& E, const ColoredFan& F3) {
  const FanContext ctx = context_of(E);
  std::set<std::string> off_ray;
  for (const auto& cc : F3.cones) {
    if (cc.colors.empty()) continue;
    const Cone c = cone_of(ctx, cc);
    for (const auto& d : cc.colors) {
      const QVec prim = primitive(ctx.color_rho.at(d));
      bool on_ray = false;
      for (const auto& ray : c.extreme_rays())
        if (compare(ray, prim) == 0) on_ray = true;
      if (!on_ray) off_ray.insert(d);
    }
  }
  ColoredFan F = F3;
  for (const auto& d : off_ray) F = colored_star_subdivision(ctx, F, d);
  return F;
}

ColoredFan triangulate_and_prune(const LunaEmbeddingData& E,
                                 const ColoredFan& F4) {
  const FanContext ctx = context_of(E);
  ConeCollector acc(ctx);
  for (const auto& cc : F4.cones) {
    const Cone c = cone_of(ctx, cc);
    if (c.is_zero()) {
      acc.add_genuine(cc);
      continue;
    }
    const std::vector<QVec>& rays = c.extreme_rays();
    for (const auto& simplex : placing_triangulation(ctx.dim, rays)) {
      std::vector<QVec> piece_rays;
      for (int i : simplex) piece_rays.push_back(rays[i]);
      const Cone piece(ctx.dim, piece_rays);
      ColoredCone pc;
      for (const auto& g : cc.gens) {
        bool on_piece_ray = false;
        for (const auto& ray : piece_rays)
          if (compare(ray, primitive(g.v)) == 0) on_piece_ray = true;
        if (on_piece_ray) pc.gens.push_back(g);
      }
      for (const auto& d : cc.colors)
        if (piece.contains(ctx.color_rho.at(d))) pc.colors.push_back(d);
      std::sort(pc.colors.begin(), pc.colors.end());
      acc.add_genuine(pc);
      for (auto& face : colored_faces(ctx, pc)) acc.add_genuine(std::move(face));
    }
  }
  return acc.take();
}

PipelineTrace gorensteinify(const LunaEmbeddingData& E, const ColoredFan& F) {
  require_valid_embedding(E);
  const FanContext ctx = context_of(E);
  const auto viol = validate_fan(ctx, F, false);
  if (!viol.empty()) {
    std::ostringstream os;
    os << "invalid fan:";
    for (const auto& v : viol) os << " [" << v.code << ": " << v.witness << "]";
    throw std::invalid_argument(os.str());
  }
  if (!is_complete(ctx, F))
    throw std::invalid_argument("input fan is not complete");

  PipelineTrace t;
  t.augmented = needs_augmentation(E);
  ColoredFan F2, F3;
  if (t.augmented) {
    t.data = augment_kappa(E);
    F2 = lift_fan(t.data, F);
    F3 = complete_with_poles(t.data, F);
  } else {
    t.data = E;
    F2 = F;
    F3 = F;
  }
  ColoredFan F4 = colors_to_rays(t.data, F3);
  ColoredFan F5 = triangulate_and_prune(t.data, F4);

  t.wp.push_back(wp_tilde_embedding(E, F));
  for (const ColoredFan* stage : {&F2, &F3, &F4, &F5})
    t.wp.push_back(wp_tilde_embedding(t.data, *stage));
  t.stages = {F, std::move(F2), std::move(F3), std::move(F4), std::move(F5)};
  return t;
}

}  // namespace sphcrit
