/** @file
 *  @brief Embedding-level data: lattice realization, colored cones and fans,
 *         valuation cone, completeness, the Gorenstein-type certificate, wp,
 *         colored star subdivision, and orbit divisor sets.
 *
 *  Characters of the Borel subgroup are realized with rational coordinates:
 *  the first simple_count entries are coefficients in the simple roots, the
 *  remaining entries are torus character coordinates.  The lattice M is given
 *  by a basis of such characters; vectors of the dual lattice N are stored in
 *  the dual basis, so pairings are plain dot products.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sphcrit/cone.hpp"
#include "sphcrit/polyhedron.hpp"
#include "sphcrit/skeleton.hpp"

namespace sphcrit {

/** A color at the embedding level, with its dual vector in N. */
struct EmbColor {
  std::string label;
  ColorType type = ColorType::A;
  std::vector<std::string> moved_by;
  QVec rho;  ///< coordinates in the dual basis of M
};

struct LunaEmbeddingData {
  RootSystem R;
  std::vector<std::string> sp;
  std::vector<QVec> m_basis;  ///< basis of M as character vectors
  std::vector<QVec> sigma_m;  ///< spherical roots in M coordinates
  std::vector<EmbColor> colors;

  int rank() const { return static_cast<int>(m_basis.size()); }
  const EmbColor* find_color(const std::string& label) const;
};

/** One labeled generator of a colored cone. */
struct LabeledGen {
  std::string label;
  bool is_color = false;
  QVec v;
};

struct ColoredCone {
  std::vector<LabeledGen> gens;
  std::vector<std::string> colors;  ///< the chosen color set F

  const LabeledGen* find_gen(const std::string& label) const;
};

struct ColoredFan {
  std::vector<ColoredCone> cones;
};

/** Everything fan-level operations need to know about the ambient situation;
 *  obtainable from an embedding or assembled directly. */
struct FanContext {
  int dim = 0;
  std::map<std::string, QVec> color_rho;
  std::map<std::string, Int> color_m;
  Cone V;
};

Cone valuation_cone(const LunaEmbeddingData& E);
FanContext context_of(const LunaEmbeddingData& E);

/** Multiplicity of a color by its type (1 for a/2a, coroot-kappa pairing for
 *  type b). */
Int color_multiplicity(const LunaEmbeddingData& E, const EmbColor& c);

std::vector<Violation> validate_embedding(const LunaEmbeddingData& E);
void require_valid_embedding(const LunaEmbeddingData& E);

/** Geometric cone spanned by the labeled generators. */
Cone cone_of(const FanContext& ctx, const ColoredCone& cc);

/** True when the relative interior of the cone meets the valuation cone. */
bool colored_cone_genuine(const FanContext& ctx, const ColoredCone& cc);

/** Same geometric cone and same color set. */
bool colored_cones_same(const FanContext& ctx, const ColoredCone& a,
                        const ColoredCone& b);

/** All colored faces of a colored cone (including itself and the zero face);
 *  colors of a face are the members of F mapping into it. */
std::vector<ColoredCone> colored_faces(const FanContext& ctx,
                                       const ColoredCone& cc);

std::vector<Violation> validate_fan(const FanContext& ctx, const ColoredFan& F,
                                    bool abstract_ok = false);
std::vector<Violation> validate_fan(const LunaEmbeddingData& E,
                                    const ColoredFan& F,
                                    bool abstract_ok = false);

/** Exact test whether the fan's support contains the valuation cone. */
bool is_complete(const FanContext& ctx, const ColoredFan& F);
bool is_complete(const LunaEmbeddingData& E, const ColoredFan& F);

/** Per-cone linear functionals evaluating to 1 on invariant ray generators
 *  and to m_D on the chosen colors; ok iff every cone admits one. */
struct QGorCertificate {
  bool ok = true;
  std::vector<std::optional<QVec>> per_cone;
};
QGorCertificate is_q_gorenstein(const FanContext& ctx, const ColoredFan& F);
QGorCertificate is_q_gorenstein(const LunaEmbeddingData& E, const ColoredFan& F);

/** Invariant-ray generators used across the fan, one entry per label. */
std::vector<LabeledGen> invariant_ray_divisors(const ColoredFan& F);

/** wp computed in M coordinates from all colors plus the fan's invariant
 *  divisors. */
WpValue wp_tilde_embedding(const LunaEmbeddingData& E, const ColoredFan& F);

SphericalSkeleton skeleton_of_embedding(const LunaEmbeddingData& E,
                                        const ColoredFan& F);

/** Star subdivision of the fan at a color; input cones are extended by their
 *  abstract colored faces, the two cone families are formed, and only genuine
 *  colored cones are returned. */
ColoredFan colored_star_subdivision(const FanContext& ctx, const ColoredFan& F,
                                    const std::string& color_label);
ColoredFan colored_star_subdivision(const LunaEmbeddingData& E,
                                    const ColoredFan& F,
                                    const std::string& color_label);

/** Labels of the B-invariant divisors containing the orbit of a cone: its
 *  chosen colors plus the invariant rays lying in it. */
std::vector<std::string> orbit_divisor_set(const ColoredCone& cc);

/** Indices of cones that are not proper faces of another cone. */
std::vector<int> maximal_cone_indices(const FanContext& ctx,
                                      const ColoredFan& F);

/** Exact test that two fans cover the same part of the valuation cone. */
bool supports_equal_on_valuation(const FanContext& ctx, const ColoredFan& F1,
                                 const ColoredFan& F2);

enum class Codirectionality { NotCodirectional, TypeA_Equal, TypeB_Proportional };

/** Classify a pair of distinct colors by whether their dual vectors span the
 *  same ray; throws std::invalid_argument on combinations the theory
 *  excludes. */
Codirectionality codirectional_classify(const LunaEmbeddingData& E,
                                        const std::string& l1,
                                        const std::string& l2);

}  // namespace sphcrit
