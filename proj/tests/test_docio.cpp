/** @file
 *  @brief Unit tests for JSON serialization and validated document loading.
 */
#include "doctest.h"

#include "sphcrit/docio.hpp"

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "corpus.hpp"

using namespace sphcrit;
using fixtures::b2_data;
using fixtures::conics_data;
using fixtures::conics_fan;
using fixtures::line_colored_fan;
using fixtures::line_data;
using fixtures::qv;
using fixtures::qvr;
using fixtures::rank3_complete_fan;
using fixtures::rank3_data;

namespace {

const std::string kData = SPHCRIT_DATA_DIR;

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

bool contains(const std::exception& e, const std::string& needle) {
  return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("skeleton documents round-trip") {
  SphericalSkeleton sk;
  sk.R = RootSystem::parse("A1xA1xT1");
  sk.sigma = {qv({1, 0}), qv({0, 1})};
  sk.typea.push_back({"D1", {"a1"}, qv({1, 0})});
  sk.typea.push_back({"D2", {"a1"}, qv({1, 0})});
  sk.typea.push_back({"D3", {"a2"}, qv({0, 1})});
  sk.typea.push_back({"D4", {"a2"}, qv({0, 1})});
  sk.gamma.push_back({"X1", qv({-2, -1})});

  const Json j = skeleton_to_json(sk);
  CHECK(j.at("kind") == "skeleton");
  const SphericalSkeleton back = skeleton_from_json(j);
  CHECK(skeletons_equal(back, sk));
  REQUIRE(back.typea.size() == 4);
  CHECK(back.typea[0].label == "D1");
  CHECK(back.typea[2].moved_by == std::vector<std::string>{"a2"});
  REQUIRE(back.gamma.size() == 1);
  CHECK(back.gamma[0].label == "X1");
  CHECK(back.gamma[0].rho == qv({-2, -1}));
  CHECK(back.R.name() == "A1xA1xT1");
  CHECK(back.R.torus_rank() == 1);
}

TEST_CASE("embedding documents round-trip") {
  for (const auto& E : {conics_data(), b2_data(), line_data(), rank3_data()}) {
    const Json j = embedding_to_json(E);
    CHECK(j.at("kind") == "embedding");
    const LunaEmbeddingData back = embedding_from_json(j);
    CHECK(back.R.name() == E.R.name());
    CHECK(back.R.cartan() == E.R.cartan());
    CHECK(back.sp == E.sp);
    CHECK(back.m_basis == E.m_basis);
    CHECK(back.sigma_m == E.sigma_m);
    REQUIRE(back.colors.size() == E.colors.size());
    for (std::size_t i = 0; i < E.colors.size(); ++i) {
      CHECK(back.colors[i].label == E.colors[i].label);
      CHECK(back.colors[i].type == E.colors[i].type);
      CHECK(back.colors[i].moved_by == E.colors[i].moved_by);
      CHECK(back.colors[i].rho == E.colors[i].rho);
    }
    CHECK(validate_embedding(back).empty());
  }
}

TEST_CASE("fan documents round-trip") {
  const auto F = rank3_complete_fan();
  const ColoredFan back = fan_from_json(fan_to_json(F));
  REQUIRE(back.cones.size() == F.cones.size());
  const FanContext ctx = context_of(rank3_data());
  for (std::size_t i = 0; i < F.cones.size(); ++i) {
    CHECK(colored_cones_same(ctx, back.cones[i], F.cones[i]));
    REQUIRE(back.cones[i].gens.size() == F.cones[i].gens.size());
    for (std::size_t k = 0; k < F.cones[i].gens.size(); ++k) {
      CHECK(back.cones[i].gens[k].label == F.cones[i].gens[k].label);
      CHECK(back.cones[i].gens[k].is_color == F.cones[i].gens[k].is_color);
      CHECK(back.cones[i].gens[k].v == F.cones[i].gens[k].v);
    }
    CHECK(back.cones[i].colors == F.cones[i].colors);
  }
}

TEST_CASE("mfs-case documents round-trip") {
  MfsCase c;
  c.id = 7;
  c.params = {2, 3};
  c.root_system = "A2xA1";
  c.rplus_diff = 4;
  c.divisor_count = 3;
  c.m = {1, 2, 1};
  c.lambda_coords = {qvr({"1", "-1/2", "0"}), qv({0, 1, -1})};
  c.argmax_coeffs = qv({2, 1});
  const MfsCase back = mfs_case_from_json(mfs_case_to_json(c));
  CHECK(back.id == 7);
  CHECK(back.params == c.params);
  CHECK(back.root_system == c.root_system);
  CHECK(back.rplus_diff == c.rplus_diff);
  CHECK(back.divisor_count == 3);
  CHECK(back.m == c.m);
  CHECK(back.lambda_coords == c.lambda_coords);
  CHECK(back.argmax_coeffs == c.argmax_coeffs);
}

TEST_CASE("trace documents round-trip") {
  const auto t = gorensteinify(conics_data(), conics_fan());
  const PipelineTrace back = trace_from_json(trace_to_json(t));
  CHECK(back.augmented == t.augmented);
  REQUIRE(back.stages.size() == t.stages.size());
  for (std::size_t i = 0; i < t.stages.size(); ++i)
    CHECK(back.stages[i].cones.size() == t.stages[i].cones.size());
  REQUIRE(back.wp.size() == t.wp.size());
  for (std::size_t i = 0; i < t.wp.size(); ++i) {
    CHECK(back.wp[i].neg_infinity == t.wp[i].neg_infinity);
    CHECK(back.wp[i].value == t.wp[i].value);
    CHECK(back.wp[i].argmax == t.wp[i].argmax);
  }
  CHECK(back.data.R.name() == t.data.R.name());
}

TEST_CASE("trace serialization keeps an unbounded objective value") {
  PipelineTrace t;
  t.augmented = false;
  t.data = conics_data();
  t.stages = {conics_fan()};
  t.wp = {WpValue::negative_infinity()};
  const PipelineTrace back = trace_from_json(trace_to_json(t));
  REQUIRE(back.wp.size() == 1);
  CHECK(back.wp[0].neg_infinity);
}

TEST_CASE("load_skeleton reads the shipped skeleton files") {
  const auto conics = load_skeleton(kData + "/conics_skeleton.json");
  CHECK(conics.R.name() == "A2");
  CHECK(conics.sp.empty());
  CHECK(conics.sigma == std::vector<QVec>{qv({2, 0}), qv({0, 2})});
  CHECK(conics.typea.empty());
  REQUIRE(conics.gamma.size() == 1);
  CHECK(conics.gamma[0].label == "X1");
  CHECK(conics.gamma[0].rho == qv({-1, 0}));

  const auto localized = load_skeleton(kData + "/conics_localized.json");
  CHECK(localized.R.name() == "A1");
  CHECK(localized.sigma == std::vector<QVec>{qv({2})});
  REQUIRE(localized.gamma.size() == 1);
  CHECK(localized.gamma[0].rho == qv({-1}));

  const auto rank3 = load_skeleton(kData + "/example2_skeleton.json");
  CHECK(rank3.R.name() == "A1xA1xT1");
  CHECK(rank3.typea.size() == 4);
  CHECK(rank3.gamma[0].rho == qv({-2, -1}));
  CHECK(validate_skeleton(rank3).empty());
}

TEST_CASE("load_embedding_doc reads the shipped embedding files") {
  struct Expect {
    const char* file;
    std::size_t cones;
  };
  const std::vector<Expect> files = {{"aug_horospherical.json", 3},
                                     {"conics.json", 3},
                                     {"conics_colorless.json", 4},
                                     {"example2.json", 5},
                                     {"example2_completed.json", 15}};
  for (const auto& f : files) {
    const auto doc = load_embedding_doc(kData + "/" + f.file);
    CHECK(doc.has_fan);
    CHECK(doc.fan.cones.size() == f.cones);
  }

  const auto conics = load_embedding_doc(kData + "/conics.json");
  CHECK(conics.E.R.name() == "A2");
  CHECK(conics.E.m_basis == std::vector<QVec>{qv({2, 0}), qv({0, 2})});
  REQUIRE(conics.E.colors.size() == 2);
  CHECK(conics.E.colors[0].label == "D1");
  CHECK(conics.E.colors[0].type == ColorType::TwoA);
  CHECK(conics.E.colors[0].rho == qv({2, -1}));
  CHECK(conics.E.colors[1].rho == qv({-1, 2}));

  const auto aug = load_embedding_doc(kData + "/aug_horospherical.json");
  CHECK(aug.E.m_basis == std::vector<QVec>{qvr({"1/2", "1"})});
  REQUIRE(aug.E.colors.size() == 1);
  CHECK(aug.E.colors[0].label == "Db1");
  CHECK(aug.E.colors[0].type == ColorType::B);
}

TEST_CASE("load_mfs_case reads a catalogue entry") {
  const auto c = load_mfs_case(kData + "/mfs/item21.json");
  CHECK(c.id == 21);
  CHECK(c.params.empty());
  CHECK(c.root_system == "A1xT2");
  CHECK(c.rplus_diff == 1);
  CHECK(c.divisor_count == 3);
  CHECK(c.m == std::vector<Int>{1, 1, 1});
  CHECK(c.lambda_coords == std::vector<QVec>{qv({1, 1, -1})});
  CHECK(c.argmax_coeffs == qv({1}));
}

TEST_CASE("a fan-kind document with an embedded datum loads") {
  Json j = fan_to_json(conics_fan());
  j["embedding"] = embedding_to_json(conics_data());
  const auto path = temp_file("sphcrit-fan-doc.json");
  write_json_file(path.string(), j);
  const auto doc = load_embedding_doc(path.string());
  CHECK(doc.has_fan);
  CHECK(doc.fan.cones.size() == 3);
  CHECK(doc.E.colors.size() == 2);
  std::filesystem::remove(path);
}

TEST_CASE("write_json_file ends the file with a newline") {
  const auto path = temp_file("sphcrit-newline.json");
  write_json_file(path.string(), embedding_to_json(line_data()));
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  REQUIRE(text.size() >= 2);
  CHECK(text.substr(text.size() - 2) == "}\n");
  const auto doc = load_embedding_doc(path.string());
  CHECK_FALSE(doc.has_fan);
  std::filesystem::remove(path);
}

TEST_CASE("file errors raise runtime errors that name the file") {
  try {
    read_json_file(kData + "/absent.json");
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(contains(e, "cannot open"));
    CHECK(contains(e, "absent.json"));
  }

  const auto bad = temp_file("sphcrit-malformed.json");
  {
    std::ofstream out(bad);
    out << "{";
  }
  CHECK_THROWS_AS(read_json_file(bad.string()), std::runtime_error);
  std::filesystem::remove(bad);
}

TEST_CASE("loaders reject documents of the wrong kind") {
  try {
    load_skeleton(kData + "/conics.json");
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(contains(e, "not a skeleton document"));
  }
  try {
    load_embedding_doc(kData + "/conics_skeleton.json");
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(contains(e, "not an embedding document"));
  }
}

TEST_CASE("schema violations raise runtime errors") {
  Json base = skeleton_to_json(load_skeleton(kData + "/conics_skeleton.json"));

  {
    Json j = base;
    j.erase("sigma");
    try {
      skeleton_from_json(j);
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(contains(e, "missing field 'sigma'"));
    }
  }
  {
    Json j = base;
    j["sigma"][0][0] = 1.5;  // rationals must be strings
    CHECK_THROWS_AS(skeleton_from_json(j), std::runtime_error);
  }
  {
    Json j = base;
    j["sigma"][0][0] = "x/y";
    CHECK_THROWS_AS(skeleton_from_json(j), std::runtime_error);
  }
  {
    Json j = base;
    j["gamma"] = "nope";
    CHECK_THROWS_AS(skeleton_from_json(j), std::runtime_error);
  }
}

TEST_CASE("loading runs the mathematical validation") {
  SphericalSkeleton sk;
  sk.R = RootSystem::parse("A2");
  sk.sigma = {qv({-1, 0})};
  const auto path = temp_file("sphcrit-bad-skeleton.json");
  write_json_file(path.string(), skeleton_to_json(sk));
  CHECK_THROWS_AS(load_skeleton(path.string()), std::invalid_argument);
  std::filesystem::remove(path);
}
