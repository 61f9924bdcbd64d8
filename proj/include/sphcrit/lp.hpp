/** @file
 *  @brief Exact linear programming over the rationals (two-phase simplex,
 *         Bland's rule) for free variables.
 */
#pragma once

#include <utility>
#include <vector>

#include "sphcrit/rational.hpp"

namespace sphcrit {

enum class Rel { Ge, Eq };

/** One constraint  a·x >= b  (Ge)  or  a·x = b  (Eq). */
struct LinRow {
  QVec a;
  Rat b;
  Rel rel = Rel::Ge;
};

struct LpOutcome {
  enum class Status { Optimal, Unbounded, Infeasible } status;
  Rat value;  ///< c·x at the optimum (Optimal only)
  QVec x;     ///< an optimal point (Optimal only)
};

/** Maximize c·x over { x : rows }, x unrestricted in sign. */
LpOutcome lp_maximize(int dim, const std::vector<LinRow>& rows, const QVec& c);

/** Is { x : rows } nonempty? */
bool lp_feasible(int dim, const std::vector<LinRow>& rows);

/** Is there x satisfying `rows` and additionally a·x > b strictly for every
 *  (a, b) in `strict`?  Exact: solved by maximizing a slack bounded by 1. */
bool lp_feasible_strict(int dim, const std::vector<LinRow>& rows,
                        const std::vector<std::pair<QVec, Rat>>& strict);

}  // namespace sphcrit
