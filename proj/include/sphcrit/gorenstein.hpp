/** @file
 *  @brief Five-stage conversion of a complete colored fan into one whose
 *         divisor data admits per-cone linear certificates.
 *
 *  The stages: (1) adjoin the anticanonical character to the lattice when no
 *  multiple of it lies there already, (2) lift the fan by divisor
 *  multiplicities, (3) complete the lifted fan with two polar rays using
 *  upper/lower regular subdivisions, (4) star-subdivide until every used
 *  color spans a ray, (5) triangulate and discard cones missing the
 *  valuation cone.  The weighted-discrepancy value is preserved exactly at
 *  every stage.
 */
#pragma once

#include <vector>

#include "sphcrit/coloredfan.hpp"

namespace sphcrit {

struct PipelineTrace {
  LunaEmbeddingData data;  ///< final embedding data (augmented when needed)
  bool augmented = false;
  /** The input fan followed by the four derived stages. */
  std::vector<ColoredFan> stages;
  /** Weighted-discrepancy value per stage (all equal by construction). */
  std::vector<WpValue> wp;
};

/** True when no positive multiple of the anticanonical character lies in the
 *  lattice spanned by `m_basis`. */
bool needs_augmentation(const LunaEmbeddingData& E);

/** Extend the lattice by the anticanonical character; color vectors gain a
 *  final coordinate equal to their multiplicity, spherical roots keep a zero
 *  there.  Requires needs_augmentation(E). */
LunaEmbeddingData augment_kappa(const LunaEmbeddingData& E);

/** Lift every cone of `F` into the augmented lattice: invariant ray
 *  generators gain height 1, used colors enter with their augmented vectors.
 *  All colored faces of the lifts are included; members may fail to meet the
 *  valuation cone. */
ColoredFan lift_fan(const LunaEmbeddingData& E_aug, const ColoredFan& F);

/** Complete the lifted fan: for each cone of the (unlifted) fan `F`, attach
 *  the positive polar ray to every upper cell and the negative polar ray to
 *  every lower cell of its lifted configuration; keep the cones meeting the
 *  valuation cone.  The polar rays become invariant divisors with fresh
 *  labels. */
ColoredFan complete_with_poles(const LunaEmbeddingData& E_aug,
                               const ColoredFan& F);

/** Star-subdivide along every color used by some cone without spanning one
 *  of its rays, in ascending label order. */
ColoredFan colors_to_rays(const LunaEmbeddingData& E, const ColoredFan& F3);

/** Triangulate every cone on its extreme rays (no new rays), inherit colors
 *  by membership, and drop cones whose relative interior misses the
 *  valuation cone. */
ColoredFan triangulate_and_prune(const LunaEmbeddingData& E,
                                 const ColoredFan& F4);

/** Run the full pipeline on a complete valid fan.  Throws
 *  std::invalid_argument when the input data or fan is invalid or the fan is
 *  not complete. */
PipelineTrace gorensteinify(const LunaEmbeddingData& E, const ColoredFan& F);

}  // namespace sphcrit
