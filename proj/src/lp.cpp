/** @file
 *  @brief Exact two-phase primal simplex with Bland's rule.
 *
 *  Free variables are split as x = u - w with u, w >= 0; each inequality row
 *  receives a surplus variable; rows whose surplus cannot start basic receive
 *  an artificial variable.  Bland's pivoting rule (smallest entering column,
 *  smallest leaving basic variable) guarantees termination.
 */
#include "sphcrit/lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace sphcrit {

namespace {

struct Tableau {
  // rows x (ncols + 1); last column is the right-hand side.
  std::vector<std::vector<Rat>> t;
  std::vector<int> basis;  // basic variable per row
  std::vector<Rat> obj;    // reduced-cost row, size ncols + 1; obj[ncols] = -objective value
  int ncols = 0;

  Rat& rhs(int i) { return t[i][ncols]; }

  void pivot(int row, int col) {
    const Rat p = t[row][col];
    for (auto& v : t[row]) v /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      const Rat f = t[i][col];
      if (f == 0) continue;
      for (int j = 0; j <= ncols; ++j) t[i][j] -= f * t[row][j];
    }
    const Rat f = obj[col];
    if (f != 0)
      for (int j = 0; j <= ncols; ++j) obj[j] -= f * t[row][j];
    basis[row] = col;
  }

  /** Build the reduced-cost row for objective coefficients c (maximize). */
  void set_objective(const std::vector<Rat>& c) {
    obj.assign(ncols + 1, Rat(0));
    for (int j = 0; j < ncols; ++j) obj[j] = c[j];
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Rat cb = c[basis[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= ncols; ++j) obj[j] -= cb * t[i][j];
    }
  }

  /** Run simplex to optimality.  Returns false if unbounded. */
  bool optimize() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols; ++j)
        if (obj[j] > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= 0) continue;
        const Rat ratio = rhs(static_cast<int>(i)) / t[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpOutcome lp_maximize(int dim, const std::vector<LinRow>& rows, const QVec& c) {
  if (static_cast<int>(c.size()) != dim)
    throw std::invalid_argument("lp_maximize: objective size mismatch");
  const int m = static_cast<int>(rows.size());
  int n_ge = 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.a.size()) != dim)
      throw std::invalid_argument("lp_maximize: row size mismatch");
    if (r.rel == Rel::Ge) ++n_ge;
  }
  // Columns: u (dim) | w (dim) | surplus (n_ge) | artificials (appended).
  const int base_cols = 2 * dim + n_ge;
  Tableau tab;
  tab.ncols = base_cols;  // artificials appended below
  tab.basis.assign(m, -1);

  std::vector<std::vector<Rat>> rowdata(m, std::vector<Rat>(base_cols + 1, Rat(0)));
  {
    int ge_seen = 0;
    for (int i = 0; i < m; ++i) {
      const LinRow& r = rows[i];
      for (int j = 0; j < dim; ++j) {
        rowdata[i][j] = r.a[j];
        rowdata[i][dim + j] = -r.a[j];
      }
      int surplus_col = -1;
      if (r.rel == Rel::Ge) {
        surplus_col = 2 * dim + ge_seen;
        rowdata[i][surplus_col] = -1;
        ++ge_seen;
      }
      rowdata[i][base_cols] = r.b;
      if (r.b < 0)
        for (auto& v : rowdata[i]) v = -v;
      // If the surplus column now has coefficient +1, it can start basic.
      if (surplus_col >= 0 && rowdata[i][surplus_col] == 1)
        tab.basis[i] = surplus_col;
    }
  }
  int n_art = 0;
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] < 0) ++n_art;
  tab.ncols = base_cols + n_art;
  tab.t.assign(m, std::vector<Rat>(tab.ncols + 1, Rat(0)));
  {
    int art_seen = 0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < base_cols; ++j) tab.t[i][j] = rowdata[i][j];
      tab.t[i][tab.ncols] = rowdata[i][base_cols];
      if (tab.basis[i] < 0) {
        const int col = base_cols + art_seen;
        tab.t[i][col] = 1;
        tab.basis[i] = col;
        ++art_seen;
      }
    }
  }

  // Phase 1: maximize minus the sum of artificials.
  if (n_art > 0) {
    std::vector<Rat> c1(tab.ncols, Rat(0));
    for (int j = base_cols; j < tab.ncols; ++j) c1[j] = -1;
    tab.set_objective(c1);
    tab.optimize();  // bounded above by 0
    if (tab.obj[tab.ncols] != 0) {  // optimum = -(sum of artificials) < 0
      LpOutcome out;
      out.status = LpOutcome::Status::Infeasible;
      return out;
    }
    // Drive remaining artificials out of the basis; a row where that is
    // impossible reads 0 = 0 (the phase-1 optimum forces its rhs to 0) and
    // is simply dropped.
    std::vector<char> drop(m, 0);
    for (int i = 0; i < m; ++i) {
      if (tab.basis[i] < base_cols) continue;
      int col = -1;
      for (int j = 0; j < base_cols; ++j)
        if (tab.t[i][j] != 0) {
          col = j;
          break;
        }
      if (col >= 0)
        tab.pivot(i, col);
      else
        drop[i] = 1;
    }
    std::vector<std::vector<Rat>> kept_rows;
    std::vector<int> kept_basis;
    for (int i = 0; i < m; ++i) {
      if (drop[i]) continue;
      tab.t[i].erase(tab.t[i].begin() + base_cols, tab.t[i].begin() + tab.ncols);
      kept_rows.push_back(std::move(tab.t[i]));
      kept_basis.push_back(tab.basis[i]);
    }
    tab.t = std::move(kept_rows);
    tab.basis = std::move(kept_basis);
    tab.ncols = base_cols;
  }

  // Phase 2: the real objective.
  std::vector<Rat> c2(base_cols, Rat(0));
  for (int j = 0; j < dim; ++j) {
    c2[j] = c[j];
    c2[dim + j] = -c[j];
  }
  tab.set_objective(c2);
  if (!tab.optimize()) {
    LpOutcome out;
    out.status = LpOutcome::Status::Unbounded;
    return out;
  }
  QVec x = qvec_zero(dim);
  for (int i = 0; i < static_cast<int>(tab.t.size()); ++i) {
    const int b = tab.basis[i];
    if (b < dim)
      x[b] += tab.rhs(i);
    else if (b < 2 * dim)
      x[b - dim] -= tab.rhs(i);
  }
  LpOutcome out;
  out.status = LpOutcome::Status::Optimal;
  out.x = std::move(x);
  out.value = dot(c, out.x);
  return out;
}

bool lp_feasible(int dim, const std::vector<LinRow>& rows) {
  return lp_maximize(dim, rows, qvec_zero(dim)).status ==
         LpOutcome::Status::Optimal;
}

bool lp_feasible_strict(int dim, const std::vector<LinRow>& rows,
                        const std::vector<std::pair<QVec, Rat>>& strict) {
  // Variables (x, t): maximize t subject to rows(x), a·x - t >= b for the
  // strict rows, and t <= 1.  Strict feasibility  <=>  optimum > 0.
  std::vector<LinRow> ext;
  ext.reserve(rows.size() + strict.size() + 1);
  for (const auto& r : rows) {
    LinRow e{r.a, r.b, r.rel};
    e.a.push_back(0);
    ext.push_back(std::move(e));
  }
  for (const auto& [a, b] : strict) {
    if (static_cast<int>(a.size()) != dim)
      throw std::invalid_argument("lp_feasible_strict: row size mismatch");
    LinRow e{a, b, Rel::Ge};
    e.a.push_back(-1);
    ext.push_back(std::move(e));
  }
  {
    LinRow cap{qvec_zero(dim + 1), Rat(-1), Rel::Ge};
    cap.a[dim] = -1;  // -t >= -1
    ext.push_back(std::move(cap));
  }
  QVec c = qvec_zero(dim + 1);
  c[dim] = 1;
  const LpOutcome r = lp_maximize(dim + 1, ext, c);
  if (r.status == LpOutcome::Status::Infeasible) return false;
  if (r.status == LpOutcome::Status::Unbounded)
    throw std::logic_error("lp_feasible_strict: capped objective unbounded");
  return r.value > 0;
}

}  // namespace sphcrit
