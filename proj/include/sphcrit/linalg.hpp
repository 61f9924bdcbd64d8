/** @file
 *  @brief Exact Gaussian elimination: rank, solving, nullspaces, spans.
 */
#pragma once

#include <optional>
#include <vector>

#include "sphcrit/rational.hpp"

namespace sphcrit {

/** Rank of the row family. */
int rank_of(const std::vector<QVec>& rows);

/** One solution x of A x = b (A given as rows), or nullopt if inconsistent.
 *  Free variables are set to zero. */
std::optional<QVec> solve_linear(const std::vector<QVec>& A, const QVec& b);

/** Basis of { x : r·x = 0 for all rows r }, for vectors of length `dim`. */
std::vector<QVec> nullspace(int dim, const std::vector<QVec>& rows);

/** Reduced row-echelon basis of the row span (deterministic). */
std::vector<QVec> row_basis(const std::vector<QVec>& rows);

/** Is v in the linear span of the rows? */
bool in_span(const std::vector<QVec>& rows, const QVec& v);

/** Coefficients c with sum_i c_i basis_i = v, or nullopt.  Requires the basis
 *  rows to be linearly independent. */
std::optional<QVec> express_in_basis(const std::vector<QVec>& basis, const QVec& v);

}  // namespace sphcrit
