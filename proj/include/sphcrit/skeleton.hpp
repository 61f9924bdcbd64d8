/** @file
 *  @brief Spherical skeletons: validation, color reconstruction, the wp
 *         invariant, localization, equivalence reduction, direct sums.
 *
 *  A skeleton stores a root system, a subset Sp of simple roots, a linearly
 *  independent list Sigma of spherical roots (nonnegative combinations of
 *  simple roots), labeled type-a colors, and labeled invariant divisors.
 *  Functionals on the span of Sigma are stored as value lists on Sigma, i.e.
 *  as coordinates in the dual of the Sigma-basis.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphcrit/rational.hpp"
#include "sphcrit/rootsystem.hpp"

namespace sphcrit {

struct TypeAColor {
  std::string label;
  std::vector<std::string> moved_by;  ///< simple roots moving this color
  QVec rho;                           ///< values on the Sigma basis
};

struct InvariantDivisor {
  std::string label;
  QVec rho;  ///< values on the Sigma basis
};

struct SphericalSkeleton {
  RootSystem R;
  std::vector<std::string> sp;
  std::vector<QVec> sigma;  ///< each in simple-root coordinates
  std::vector<TypeAColor> typea;
  std::vector<InvariantDivisor> gamma;

  int rank() const { return static_cast<int>(sigma.size()); }
};

enum class ColorType { A, TwoA, B };

/** A color together with its derived data (type, movers, multiplicity). */
struct FullColor {
  std::string label;
  ColorType type = ColorType::A;
  std::vector<std::string> moved_by;
  QVec rho;  ///< values on the Sigma basis
  Int m = 1;
};

struct Violation {
  std::string code;
  std::string witness;
};

/** Check the skeleton axioms; an empty result means the skeleton is valid. */
std::vector<Violation> validate_skeleton(const SphericalSkeleton& sk);

/** Throw std::invalid_argument listing the violations unless the skeleton is
 *  valid. */
void require_valid_skeleton(const SphericalSkeleton& sk);

/** All colors of the skeleton: the stored type-a colors plus the derived
 *  type-2a and type-b colors, with multiplicities filled in. */
std::vector<FullColor> reconstruct_colors(const SphericalSkeleton& sk);

/** Multiplicity of a color (1 for types a and 2a; the pairing of the mover's
 *  coroot with kappa for type b). */
Int anticanonical_coeff(const SphericalSkeleton& sk, const FullColor& c);

/** Multiplicity of an invariant divisor (always 1). */
Int anticanonical_coeff(const SphericalSkeleton& sk, const InvariantDivisor& d);

/** Result of the wp computation: a rational value with an optimizer, or
 *  negative infinity when the underlying program is unbounded. */
struct WpValue {
  bool neg_infinity = false;
  Rat value;
  QVec argmax;  ///< empty when neg_infinity

  static WpValue finite(Rat v, QVec arg) {
    return WpValue{false, std::move(v), std::move(arg)};
  }
  static WpValue negative_infinity() { return WpValue{true, Rat(0), {}}; }
};

/** The number of positive roots outside the sub-system on Sp. */
Int rplus_difference(const RootSystem& R, const std::vector<std::string>& sp);

/** wp of a skeleton: |R+| - |R+_Sp| minus the supremum of
 *  sum_D (m_D - 1 + <rho'(D), theta>) over the region where every
 *  <rho'(D), theta> >= -m_D and theta lies in cone(Sigma). */
WpValue wp_tilde_skeleton(const SphericalSkeleton& sk);

/** Localize at a set of labels of colors (full set) and invariant divisors. */
SphericalSkeleton localize(const SphericalSkeleton& sk,
                           const std::vector<std::string>& labels);

/** Drop invariant divisors whose functional vanishes on the span of Sigma. */
SphericalSkeleton reduce_equivalence(const SphericalSkeleton& sk);

/** Disjoint union of two skeletons; colliding labels on the second summand
 *  are prefixed until unique. */
SphericalSkeleton direct_sum_skeletons(const SphericalSkeleton& s1,
                                       const SphericalSkeleton& s2);

/** Label-respecting structural equality: same Cartan data, Sp, Sigma, and the
 *  same colors/divisors as multisets of (movers, values). */
bool skeletons_equal(const SphericalSkeleton& a, const SphericalSkeleton& b);

}  // namespace sphcrit
