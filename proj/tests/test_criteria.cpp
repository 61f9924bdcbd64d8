/** @file
 *  @brief Unit tests for the toricness and smoothness criteria and the
 *         catalogue verifier.
 */
#include "doctest.h"

#include "sphcrit/criteria.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"

using namespace sphcrit;
using fixtures::b2_colored_fan;
using fixtures::b2_data;
using fixtures::conics_colorless_fan;
using fixtures::conics_data;
using fixtures::conics_fan;
using fixtures::inv_gen;
using fixtures::make_cone;
using fixtures::qv;
using fixtures::rank3_complete_fan;
using fixtures::rank3_data;
using fixtures::rank3_partial_fan;

TEST_CASE("is_toric") {
  CHECK(is_toric(conics_data(), conics_fan()));
  CHECK_FALSE(is_toric(conics_data(), conics_colorless_fan()));
  CHECK_FALSE(is_toric(rank3_data(), rank3_complete_fan()));
  CHECK_THROWS_WITH_AS(is_toric(rank3_data(), rank3_partial_fan()),
                       "toricness is defined for complete fans only",
                       std::invalid_argument);
}

TEST_CASE("smoothness along the closed conic orbit") {
  ColoredCone orbit = conics_fan().cones[2];
  std::reverse(orbit.gens.begin(), orbit.gens.end());  // order is irrelevant
  const auto cert = is_smooth_along(conics_data(), conics_fan(), orbit);
  CHECK(cert.smooth);
  CHECK(cert.divisors == std::vector<std::string>{"D1", "X1"});
  REQUIRE_FALSE(cert.wp_local.neg_infinity);
  CHECK(cert.wp_local.value == 0);

  SphericalSkeleton expect;
  expect.R = RootSystem::parse("A1");
  expect.sigma = {qv({2})};
  expect.gamma.push_back({"X1", qv({-1})});
  CHECK(skeletons_equal(cert.localized, expect));
  const auto cols = reconstruct_colors(cert.localized);
  REQUIRE(cols.size() == 1);
  CHECK(cols[0].rho == qv({2}));
  CHECK(cols[0].m == 1);
}

TEST_CASE("the maximal rank-3 orbit is singular") {
  const auto orbit = rank3_partial_fan().cones[4];
  const auto cert = is_smooth_along(rank3_data(), rank3_partial_fan(), orbit);
  CHECK_FALSE(cert.smooth);
  CHECK(cert.divisors == std::vector<std::string>{"D1", "D2", "X1"});
  REQUIRE_FALSE(cert.wp_local.neg_infinity);
  CHECK(cert.wp_local.value == 1);

  SphericalSkeleton expect;
  expect.R = RootSystem::parse("A1");
  expect.sigma = {qv({1})};
  expect.typea.push_back({"D1", {"a1"}, qv({1})});
  expect.typea.push_back({"D2", {"a1"}, qv({1})});
  expect.gamma.push_back({"X1", qv({-2})});
  CHECK(skeletons_equal(cert.localized, expect));
}

TEST_CASE("the open orbit is always smooth") {
  const auto cert =
      is_smooth_along(conics_data(), conics_fan(), make_cone({}));
  CHECK(cert.smooth);
  CHECK(cert.divisors.empty());
  CHECK(cert.localized.R.simple_count() == 0);
  CHECK(cert.localized.sigma.empty());
  REQUIRE_FALSE(cert.wp_local.neg_infinity);
  CHECK(cert.wp_local.value == 0);
}

TEST_CASE("smoothness along a colored orbit with a type-b divisor") {
  const auto orbit = b2_colored_fan().cones[4];
  const auto cert = is_smooth_along(b2_data(), b2_colored_fan(), orbit);
  CHECK(cert.divisors == std::vector<std::string>{"Db", "W2"});
  CHECK(cert.smooth);
  REQUIRE_FALSE(cert.wp_local.neg_infinity);
  CHECK(cert.wp_local.value == 0);
  CHECK(cert.localized.R.simple_count() == 1);
  CHECK(cert.localized.sigma.empty());
  REQUIRE(cert.localized.gamma.size() == 1);
  CHECK(cert.localized.gamma[0].rho.empty());
}

TEST_CASE("is_smooth_along rejects a non-member orbit") {
  CHECK_THROWS_WITH_AS(
      is_smooth_along(conics_data(), conics_fan(),
                      make_cone({inv_gen("X9", qv({-1, -2}))})),
      "the orbit cone is not a member of the fan", std::invalid_argument);
}

namespace {

MfsCase sample_case() {
  MfsCase c;
  c.id = 99;
  c.params = {3};
  c.root_system = "A2xT1";
  c.rplus_diff = 3;
  c.divisor_count = 3;
  c.m = {1, 1, 1};
  c.lambda_coords = {qv({2, -1, 0}), qv({-1, 2, -1})};
  c.argmax_coeffs = qv({3, 1});
  return c;
}

}  // namespace

TEST_CASE("verify_mfs_case accepts a correct optimum") {
  const auto rep = verify_mfs_case(sample_case());
  CHECK(rep.argmax_feasible);
  CHECK(rep.argmax_optimal);
  CHECK(rep.wp == 0);
  CHECK(rep.pass());
}

TEST_CASE("verify_mfs_case flags a suboptimal certificate") {
  auto c = sample_case();
  c.argmax_coeffs = qv({1, 1});  // coordinate sum 1, the optimum is 3
  const auto rep = verify_mfs_case(c);
  CHECK(rep.argmax_feasible);
  CHECK_FALSE(rep.argmax_optimal);
  CHECK(rep.wp == 0);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("verify_mfs_case flags an infeasible certificate") {
  auto c = sample_case();
  c.argmax_coeffs = qv({0, 2});  // first coordinate drops below -m
  const auto rep = verify_mfs_case(c);
  CHECK_FALSE(rep.argmax_feasible);
  CHECK_FALSE(rep.argmax_optimal);
  CHECK(rep.wp == 0);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("verify_mfs_case input validation") {
  {
    auto c = sample_case();
    c.argmax_coeffs = qv({-1, 1});
    CHECK_THROWS_AS(verify_mfs_case(c), std::invalid_argument);
  }
  {
    auto c = sample_case();
    c.m = {1, 0, 1};
    CHECK_THROWS_AS(verify_mfs_case(c), std::invalid_argument);
  }
  {
    auto c = sample_case();
    c.lambda_coords[1] = qv({2, -1});
    CHECK_THROWS_AS(verify_mfs_case(c), std::invalid_argument);
  }
  {
    auto c = sample_case();
    c.argmax_coeffs = qv({3});
    CHECK_THROWS_AS(verify_mfs_case(c), std::invalid_argument);
  }
  {
    auto c = sample_case();
    c.m = {1, 1};
    CHECK_THROWS_AS(verify_mfs_case(c), std::invalid_argument);
  }
}

TEST_CASE("verify_mfs_case reports an unbounded coordinate sum") {
  MfsCase c;
  c.rplus_diff = 0;
  c.divisor_count = 2;
  c.m = {1, 1};
  c.lambda_coords = {qv({1, 1})};
  c.argmax_coeffs = qv({0});
  CHECK_THROWS_AS(verify_mfs_case(c), std::runtime_error);
}

TEST_CASE("run_corpus verifies the shipped catalogue") {
  const std::string dir = std::string(SPHCRIT_DATA_DIR) + "/mfs";
  const auto sum = run_corpus(dir);
  CHECK(sum.entries.size() == 36);
  CHECK(sum.status == "36 verified, 0 failed, 0 unreadable, 0 skipped");
  CHECK(sum.overall);
  REQUIRE(sum.entries[0].parsed.has_value());
  CHECK(sum.entries[0].parsed->id == 1);
  CHECK(sum.entries[0].parsed->params == std::vector<int>{2});
  std::set<int> ids;
  for (const auto& e : sum.entries) {
    REQUIRE(e.parsed.has_value());
    REQUIRE(e.report.has_value());
    CHECK(e.report->pass());
    CHECK(e.report->wp == 0);
    ids.insert(e.parsed->id);
  }
  CHECK(ids == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 21, 22, 23, 38});
}

TEST_CASE("run_corpus honours the rank limit") {
  const std::string dir = std::string(SPHCRIT_DATA_DIR) + "/mfs";
  const auto sum = run_corpus(dir, 1);
  CHECK(sum.status == "7 verified, 0 failed, 0 unreadable, 29 skipped");
  CHECK(sum.overall);
  for (const auto& e : sum.entries)
    if (!e.report) {
      CHECK(e.error == "skipped: rank above limit");
      CHECK_FALSE(e.parsed.has_value());
    }
}

TEST_CASE("run_corpus output does not depend on the worker count") {
  const std::string dir = std::string(SPHCRIT_DATA_DIR) + "/mfs";
  const auto seq = run_corpus(dir, 0, 1);
  const auto par = run_corpus(dir, 0, 3);
  CHECK(seq.status == par.status);
  CHECK(seq.overall == par.overall);
  REQUIRE(seq.entries.size() == par.entries.size());
  for (std::size_t i = 0; i < seq.entries.size(); ++i) {
    CHECK(seq.entries[i].file == par.entries[i].file);
    CHECK(seq.entries[i].report.has_value() ==
          par.entries[i].report.has_value());
  }
}

TEST_CASE("run_corpus error handling") {
  const auto missing =
      run_corpus(std::string(SPHCRIT_DATA_DIR) + "/no-such-dir");
  CHECK_FALSE(missing.overall);
  CHECK(missing.status.rfind("cannot read directory", 0) == 0);

  namespace fs = std::filesystem;
  const fs::path tmp = fs::temp_directory_path() / "sphcrit-empty-corpus";
  fs::create_directories(tmp);
  const auto empty = run_corpus(tmp.string());
  CHECK_FALSE(empty.overall);
  CHECK(empty.status == "no cases");
  fs::remove_all(tmp);
}
