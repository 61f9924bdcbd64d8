/** @file
 *  @brief Unit tests for the exact simplex solver.
 */
#include "doctest.h"

#include "sphcrit/lp.hpp"

#include <random>

#include "corpus.hpp"
#include "dd_oracle.hpp"

using namespace sphcrit;
using fixtures::qv;

namespace {

LinRow ge(QVec a, Rat b) { return {std::move(a), std::move(b), Rel::Ge}; }
LinRow eq(QVec a, Rat b) { return {std::move(a), std::move(b), Rel::Eq}; }

}  // namespace

TEST_CASE("bounded maximum on a box") {
  // 0 <= x <= 2, 0 <= y <= 3, maximize x + y.
  const std::vector<LinRow> rows = {
      ge(qv({1, 0}), 0), ge(qv({-1, 0}), -2), ge(qv({0, 1}), 0),
      ge(qv({0, -1}), -3)};
  const auto out = lp_maximize(2, rows, qv({1, 1}));
  REQUIRE(out.status == LpOutcome::Status::Optimal);
  CHECK(out.value == 5);
  CHECK(out.x == qv({2, 3}));
}

TEST_CASE("unbounded objective") {
  const auto out = lp_maximize(2, {ge(qv({1, 0}), 0)}, qv({1, 0}));
  CHECK(out.status == LpOutcome::Status::Unbounded);
}

TEST_CASE("infeasible system") {
  const auto out =
      lp_maximize(1, {ge(qv({1}), 1), ge(qv({-1}), 0)}, qv({1}));
  CHECK(out.status == LpOutcome::Status::Infeasible);
}

TEST_CASE("equality constraints") {
  // x + y = 4, x - y = 2, maximize 2x + y  ->  x = 3, y = 1.
  const auto out = lp_maximize(
      2, {eq(qv({1, 1}), 4), eq(qv({1, -1}), 2)}, qv({2, 1}));
  REQUIRE(out.status == LpOutcome::Status::Optimal);
  CHECK(out.value == 7);
  CHECK(out.x == qv({3, 1}));
}

TEST_CASE("rational data stays exact") {
  // (2/3) x <= 5 and x >= 0, maximize x  ->  15/2.
  const auto out = lp_maximize(
      1, {ge(qv({1}), 0), ge(QVec{Rat(-2) / 3}, -5)}, qv({1}));
  REQUIRE(out.status == LpOutcome::Status::Optimal);
  CHECK(out.value == Rat(15) / 2);
}

TEST_CASE("duplicate and redundant rows are harmless") {
  const std::vector<LinRow> rows = {
      ge(qv({1, 0}), 0), ge(qv({1, 0}), 0), ge(qv({2, 0}), -1),
      ge(qv({-1, -1}), -4), ge(qv({0, 1}), 0)};
  const auto out = lp_maximize(2, rows, qv({1, 1}));
  REQUIRE(out.status == LpOutcome::Status::Optimal);
  CHECK(out.value == 4);
}

TEST_CASE("free variables can go negative") {
  const auto out = lp_maximize(1, {ge(qv({-1}), 2)}, qv({1}));
  REQUIRE(out.status == LpOutcome::Status::Optimal);
  CHECK(out.value == -2);
  CHECK(out.x == qv({-2}));
}

TEST_CASE("lp_feasible") {
  CHECK(lp_feasible(2, {ge(qv({1, 1}), 3)}));
  CHECK_FALSE(lp_feasible(1, {ge(qv({1}), 1), ge(qv({-1}), 0)}));
  CHECK(lp_feasible(0, {}));
}

TEST_CASE("lp_feasible_strict") {
  // x >= 0 with x > 0 strictly: feasible.
  CHECK(lp_feasible_strict(1, {ge(qv({1}), 0)}, {{qv({1}), Rat(0)}}));
  // x <= 0 with x > 0 strictly: empty.
  CHECK_FALSE(lp_feasible_strict(1, {ge(qv({-1}), 0)}, {{qv({1}), Rat(0)}}));
  // Open interval (0, 1): feasible even though no vertex lies inside.
  CHECK(lp_feasible_strict(1, {}, {{qv({1}), Rat(0)}, {qv({-1}), Rat(-1)}}));
  // x > 0 and x < 0: empty.
  CHECK_FALSE(
      lp_feasible_strict(1, {}, {{qv({1}), Rat(0)}, {qv({-1}), Rat(0)}}));
  // No strict rows degenerates to plain feasibility.
  CHECK(lp_feasible_strict(2, {ge(qv({1, 0}), 5)}, {}));
}

TEST_CASE("randomized cross-check against the reference enumeration") {
  std::mt19937_64 rng(20240811u);
  int optimal = 0, unbounded = 0, infeasible = 0;
  for (int inst = 0; inst < 120; ++inst) {
    const int dim = 1 + static_cast<int>(rng() % 3);
    const int nrows = static_cast<int>(rng() % 6);
    std::vector<LinRow> rows;
    std::vector<refsolve::RefRow> ref_rows;
    for (int i = 0; i < nrows; ++i) {
      QVec a;
      bool nonzero = false;
      for (int j = 0; j < dim; ++j) {
        const int c = static_cast<int>(rng() % 7) - 3;
        nonzero = nonzero || c != 0;
        a.push_back(Rat(c));
      }
      if (!nonzero) continue;
      const Rat b(static_cast<int>(rng() % 5) - 2);
      if (rng() % 4 == 0) {
        rows.push_back(eq(a, b));
        ref_rows.push_back({a, b});
        ref_rows.push_back({negate(a), -b});
      } else {
        rows.push_back(ge(a, b));
        ref_rows.push_back({a, b});
      }
    }
    QVec c;
    for (int j = 0; j < dim; ++j)
      c.push_back(Rat(static_cast<int>(rng() % 5) - 2));
    const auto got = lp_maximize(dim, rows, c);
    const auto want = refsolve::ref_sup(dim, ref_rows, c);
    switch (want.kind) {
      case refsolve::RefSup::Kind::Infeasible:
        CHECK(got.status == LpOutcome::Status::Infeasible);
        ++infeasible;
        break;
      case refsolve::RefSup::Kind::Unbounded:
        CHECK(got.status == LpOutcome::Status::Unbounded);
        ++unbounded;
        break;
      case refsolve::RefSup::Kind::Value: {
        REQUIRE(got.status == LpOutcome::Status::Optimal);
        CHECK(got.value == want.value);
        CHECK(dot(c, got.x) == got.value);
        for (const auto& row : rows) {
          if (row.rel == Rel::Eq)
            CHECK(dot(row.a, got.x) == row.b);
          else
            CHECK(dot(row.a, got.x) >= row.b);
        }
        ++optimal;
        break;
      }
    }
  }
  // The generator must exercise every outcome.
  CHECK(optimal > 10);
  CHECK(unbounded > 10);
  CHECK(infeasible > 5);
}
