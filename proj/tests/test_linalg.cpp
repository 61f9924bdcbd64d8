/** @file
 *  @brief Unit tests for exact Gaussian elimination helpers.
 */
#include "doctest.h"

#include "sphcrit/linalg.hpp"

#include "corpus.hpp"

using namespace sphcrit;
using fixtures::qv;

TEST_CASE("rank_of") {
  CHECK(rank_of({}) == 0);
  CHECK(rank_of({qv({0, 0})}) == 0);
  CHECK(rank_of({qv({1, 2})}) == 1);
  CHECK(rank_of({qv({1, 2}), qv({2, 4})}) == 1);
  CHECK(rank_of({qv({1, 2, 3}), qv({4, 5, 6}), qv({7, 8, 9})}) == 2);
  CHECK(rank_of({qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})}) == 3);
}

TEST_CASE("solve_linear unique system") {
  const auto x = solve_linear({qv({2, 1}), qv({1, 3})}, qv({5, 10}));
  REQUIRE(x.has_value());
  CHECK(*x == qv({1, 3}));
}

TEST_CASE("solve_linear inconsistent system") {
  CHECK_FALSE(solve_linear({qv({1, 1}), qv({2, 2})}, qv({1, 3})).has_value());
}

TEST_CASE("solve_linear underdetermined system sets free variables to zero") {
  const auto x = solve_linear({qv({1, 1})}, qv({2}));
  REQUIRE(x.has_value());
  CHECK(*x == qv({2, 0}));
}

TEST_CASE("solve_linear empty system") {
  const auto x = solve_linear({}, {});
  REQUIRE(x.has_value());
  CHECK(x->empty());
}

TEST_CASE("solve_linear size mismatch throws") {
  CHECK_THROWS_AS(solve_linear({qv({1, 0})}, qv({1, 2})), std::invalid_argument);
}

TEST_CASE("nullspace") {
  SUBCASE("line kernel of one equation") {
    const auto ns = nullspace(2, {qv({1, -1})});
    REQUIRE(ns.size() == 1);
    CHECK(dot(qv({1, -1}), ns[0]) == 0);
    CHECK_FALSE(is_zero(ns[0]));
  }
  SUBCASE("full kernel with no equations") {
    const auto ns = nullspace(3, {});
    REQUIRE(ns.size() == 3);
    CHECK(rank_of(ns) == 3);
  }
  SUBCASE("trivial kernel") {
    CHECK(nullspace(2, {qv({1, 0}), qv({0, 1})}).empty());
  }
  SUBCASE("kernel vectors annihilate all rows") {
    const std::vector<QVec> rows = {qv({1, 2, 3, 4}), qv({0, 1, 1, 0})};
    const auto ns = nullspace(4, rows);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns)
      for (const auto& r : rows) CHECK(dot(r, v) == 0);
    CHECK(rank_of(ns) == 2);
  }
  SUBCASE("row size mismatch throws") {
    CHECK_THROWS_AS(nullspace(3, {qv({1, 0})}), std::invalid_argument);
  }
}

TEST_CASE("row_basis is a deterministic echelon form") {
  const auto b = row_basis({qv({2, 4}), qv({1, 2}), qv({0, 1})});
  REQUIRE(b.size() == 2);
  CHECK(b[0] == qv({1, 0}));
  CHECK(b[1] == qv({0, 1}));
  CHECK(row_basis({}).empty());
}

TEST_CASE("in_span") {
  const std::vector<QVec> rows = {qv({1, 0, 1}), qv({0, 1, 1})};
  CHECK(in_span(rows, qv({2, 3, 5})));
  CHECK_FALSE(in_span(rows, qv({0, 0, 1})));
  CHECK(in_span(rows, qv({0, 0, 0})));
  CHECK(in_span({}, qv({0, 0})));
  CHECK_FALSE(in_span({}, qv({1, 0})));
}

TEST_CASE("express_in_basis") {
  const auto c = express_in_basis({qv({1, 1}), qv({1, -1})}, qv({3, 1}));
  REQUIRE(c.has_value());
  CHECK(*c == qv({2, 1}));
  CHECK_FALSE(express_in_basis({qv({1, 0, 0})}, qv({0, 1, 0})).has_value());
  const auto e = express_in_basis({}, qv({0, 0}));
  REQUIRE(e.has_value());
  CHECK(e->empty());
}
