/** @file
 *  @brief Toricness and smoothness criteria, and the multiplicity-free-space
 *         corpus verifier.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphcrit/coloredfan.hpp"

namespace sphcrit {

/** True iff the weighted-discrepancy value of the complete embedding is zero.
 *  Throws std::invalid_argument when the fan is not complete. */
bool is_toric(const LunaEmbeddingData& E, const ColoredFan& F);

struct SmoothnessCertificate {
  bool smooth = false;
  std::vector<std::string> divisors;  ///< labels cut out by the orbit, sorted
  SphericalSkeleton localized;
  WpValue wp_local;
};

/** Smoothness along the orbit of `orbit`, decided by localizing the
 *  embedding's skeleton at the orbit's divisor set and comparing its value
 *  with 1.  Throws std::invalid_argument when `orbit` is not a cone of `F`. */
SmoothnessCertificate is_smooth_along(const LunaEmbeddingData& E,
                                      const ColoredFan& F,
                                      const ColoredCone& orbit);

/** One multiplicity-free-space corpus case.  The lattice basis is the set of
 *  divisor classes, so vectors live in Q^divisor_count with the pairing
 *  against the i-th divisor given by the i-th coordinate. */
struct MfsCase {
  int id = 0;                       ///< item number within the catalogue
  std::vector<int> params;          ///< instantiated family parameters
  std::string root_system;          ///< acting group's root system name
  Int rplus_diff = 0;               ///< positive roots outside the kernel part
  int divisor_count = 0;
  std::vector<Int> m;               ///< multiplicity per divisor
  std::vector<QVec> lambda_coords;  ///< weight monoid generators
  QVec argmax_coeffs;               ///< expected optimum = sum a_i lambda_i
};

struct MfsReport {
  Rat wp;
  bool argmax_feasible = false;
  bool argmax_optimal = false;
  bool pass() const { return wp == 0 && argmax_feasible && argmax_optimal; }
};

/** Check one case: the expected optimum must lie in the translated orthant
 *  intersected with the cone of the lambda vectors, attain the coordinate-sum
 *  optimum there, and give wp = 0.  The optimum is recomputed independently.
 *  Throws std::invalid_argument on inconsistent shapes or negative
 *  coefficients. */
MfsReport verify_mfs_case(const MfsCase& c);

struct CorpusEntry {
  std::string file;
  std::optional<MfsCase> parsed;
  std::optional<MfsReport> report;
  std::string error;  ///< nonempty when the file failed to load or verify
};

struct CorpusSummary {
  std::vector<CorpusEntry> entries;  ///< ordered by (id, params, file)
  bool overall = false;
  std::string status;
};

/** Verify every case document in `dir` (files ending in .json), skipping
 *  cases whose lattice rank exceeds `max_rank` when it is positive.  Files
 *  that fail to parse are reported per entry, not fatal.  `jobs` bounds the
 *  worker count; output order never depends on it. */
CorpusSummary run_corpus(const std::string& dir, int max_rank = 0,
                         int jobs = 1);

}  // namespace sphcrit
