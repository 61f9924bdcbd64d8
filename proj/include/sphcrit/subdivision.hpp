/** @file
 *  @brief Regular subdivisions of lifted vector configurations.
 *
 *  A configuration is a finite labeled family of nonzero vectors with
 *  rational heights.  Lifting each vector by its height and selecting the
 *  faces of the lifted cone visible with positive (lower) or negative
 *  (upper) last coordinate yields a polyhedral subdivision of the cone
 *  spanned by the configuration; cells are recorded as label subsets.
 */
#pragma once

#include <string>
#include <vector>

#include "sphcrit/rational.hpp"

namespace sphcrit {

struct ConfigEntry {
  std::string label;
  QVec v;      ///< nonzero vector in the base space
  Rat height;  ///< lift value
};

struct VectorConfiguration {
  int dim = 0;  ///< dimension of the base space
  std::vector<ConfigEntry> items;
};

enum class SubdivisionSide { Lower, Upper };

struct Subdivision {
  SubdivisionSide side;
  /** Every cell (face-closed family), each a sorted list of labels.  The
   *  empty cell appears when a selecting functional can be strictly positive
   *  on the whole lifted configuration. */
  std::vector<std::vector<std::string>> cells;
  /** Cells not properly contained in another cell. */
  std::vector<std::vector<std::string>> maximal_cells() const;
};

/** The regular subdivision of the configuration on the requested side.
 *  Requires a selecting functional to exist (nonnegative on the lifted
 *  configuration with the side's sign in the last coordinate); otherwise
 *  throws std::invalid_argument. */
Subdivision regular_subdivision(const VectorConfiguration& config,
                                SubdivisionSide side);

}  // namespace sphcrit
