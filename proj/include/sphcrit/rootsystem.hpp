/** @file
 *  @brief Root systems: Cartan catalogue, positive roots, coroot pairings.
 *
 *  A root system here is a labeled list of simple roots with an integer
 *  Cartan matrix plus a torus rank.  Weights are represented by their
 *  rational coefficients in the simple-root basis, optionally extended by
 *  torus-character coordinates; all pairings reduce to the Cartan matrix
 *  (torus characters pair to zero with every coroot).
 */
#pragma once

#include <string>
#include <vector>

#include "sphcrit/rational.hpp"

namespace sphcrit {

class RootSystem {
 public:
  RootSystem() = default;

  /** Parse a name like "A2", "B3xG2xT2", "T1", or "T0" (empty system).
   *  Simple roots are labeled a1, a2, ... across all components. */
  static RootSystem parse(const std::string& name);

  /** Assemble from explicit data (used for sub-systems and direct sums). */
  static RootSystem from_cartan(std::vector<std::string> labels,
                                std::vector<std::vector<int>> cartan,
                                int torus_rank);

  const std::string& name() const { return name_; }
  int simple_count() const { return static_cast<int>(labels_.size()); }
  int torus_rank() const { return torus_rank_; }
  /** Dimension of the character coordinate space (simple roots + torus). */
  int char_dim() const { return simple_count() + torus_rank_; }

  const std::vector<std::string>& simple_labels() const { return labels_; }
  /** Index of a simple-root label, or -1. */
  int label_index(const std::string& label) const;
  /** cartan()[i][j] = pairing of the i-th coroot with the j-th simple root. */
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  /** Pairing of the coroot of `label` with a weight given in simple-root
   *  coordinates (length simple_count) or extended coordinates (char_dim). */
  Rat coroot_pair(const std::string& label, const QVec& weight) const;

  /** Positive roots of the sub-system generated by `subset`, in simple-root
   *  coordinates (length simple_count), sorted. */
  std::vector<QVec> positive_roots(const std::vector<std::string>& subset) const;
  std::vector<QVec> positive_roots() const;

  /** Sum of the positive roots outside the sub-system generated by `sp`,
   *  in simple-root coordinates. */
  QVec kappa(const std::vector<std::string>& sp) const;

  /** The sub-system generated by a subset of simple roots (labels kept,
   *  order = original order); torus rank drops to zero. */
  RootSystem sub_system(const std::vector<std::string>& subset) const;

  /** Combine two systems side by side; labels of the second system get a
   *  "2:" prefix whenever they would collide.  Torus ranks add. */
  static RootSystem direct_sum(const RootSystem& r1, const RootSystem& r2);

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> cartan_;
  int torus_rank_ = 0;
  std::string name_;

  static std::string classify_name(const std::vector<std::vector<int>>& cartan,
                                   int torus_rank);
};

}  // namespace sphcrit
