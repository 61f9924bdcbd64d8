/** @file
 *  @brief JSON (de)serialization and validated file loading.
 */
#include "sphcrit/docio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sphcrit {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::runtime_error(where + ": " + what);
}

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string need_string(const Json& j, const char* key,
                        const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

int need_int(const Json& j, const char* key, const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<int>();
}

bool need_bool(const Json& j, const char* key, const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_boolean()) fail(where + "." + key, "expected a boolean");
  return v.get<bool>();
}

Rat parse_rat(const Json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a rational as a string");
  try {
    return rat_from_string(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

Int parse_int_value(const Json& v, const std::string& where) {
  const Rat q = parse_rat(v, where);
  if (den(q) != 1) fail(where, "expected an integer");
  return num(q);
}

QVec parse_qvec(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  QVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(parse_rat(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<QVec> parse_qvecs(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  std::vector<QVec> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(parse_qvec(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::string> parse_strings(const Json& v,
                                       const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string())
      fail(where + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

Json qvec_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_to_string(x));
  return a;
}

Json qvecs_json(const std::vector<QVec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(qvec_json(v));
  return a;
}

Json strings_json(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

void rs_to_json(Json& j, const RootSystem& R) {
  j["root_system"] = R.name();
  j["simple_labels"] = strings_json(R.simple_labels());
  Json cartan = Json::array();
  for (const auto& row : R.cartan()) {
    Json r = Json::array();
    for (int x : row) r.push_back(x);
    cartan.push_back(r);
  }
  j["cartan"] = cartan;
  j["torus_rank"] = R.torus_rank();
}

RootSystem rs_from_json(const Json& j, const std::string& where) {
  if (j.contains("cartan")) {
    const Json& cj = j.at("cartan");
    if (!cj.is_array()) fail(where + ".cartan", "expected an array");
    std::vector<std::vector<int>> cartan;
    for (std::size_t i = 0; i < cj.size(); ++i) {
      const std::string rw = where + ".cartan[" + std::to_string(i) + "]";
      if (!cj[i].is_array()) fail(rw, "expected an array");
      std::vector<int> row;
      for (const auto& x : cj[i]) {
        if (!x.is_number_integer()) fail(rw, "expected integers");
        row.push_back(x.get<int>());
      }
      cartan.push_back(std::move(row));
    }
    std::vector<std::string> labels =
        parse_strings(need(j, "simple_labels", where), where + ".simple_labels");
    int torus = j.contains("torus_rank") ? need_int(j, "torus_rank", where) : 0;
    try {
      return RootSystem::from_cartan(std::move(labels), std::move(cartan),
                                     torus);
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  const std::string name = need_string(j, "root_system", where);
  RootSystem R;
  try {
    R = RootSystem::parse(name);
    if (j.contains("simple_labels"))
      R = RootSystem::from_cartan(
          parse_strings(j.at("simple_labels"), where + ".simple_labels"),
          R.cartan(), R.torus_rank());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  return R;
}

}  // namespace

// ---- skeleton --------------------------------------------------------------

Json skeleton_to_json(const SphericalSkeleton& sk) {
  Json j;
  j["kind"] = "skeleton";
  rs_to_json(j, sk.R);
  j["sp"] = strings_json(sk.sp);
  j["sigma"] = qvecs_json(sk.sigma);
  Json colors = Json::array();
  for (const auto& c : sk.typea) {
    Json cj;
    cj["label"] = c.label;
    cj["moved_by"] = strings_json(c.moved_by);
    cj["rho"] = qvec_json(c.rho);
    colors.push_back(cj);
  }
  j["colors_a"] = colors;
  Json gamma = Json::array();
  for (const auto& g : sk.gamma) {
    Json gj;
    gj["label"] = g.label;
    gj["rho"] = qvec_json(g.rho);
    gamma.push_back(gj);
  }
  j["gamma"] = gamma;
  return j;
}

SphericalSkeleton skeleton_from_json(const Json& j) {
  const std::string where = "skeleton";
  SphericalSkeleton sk;
  sk.R = rs_from_json(j, where);
  sk.sp = parse_strings(need(j, "sp", where), where + ".sp");
  sk.sigma = parse_qvecs(need(j, "sigma", where), where + ".sigma");
  const Json& colors = need(j, "colors_a", where);
  if (!colors.is_array()) fail(where + ".colors_a", "expected an array");
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const std::string cw = where + ".colors_a[" + std::to_string(i) + "]";
    TypeAColor c;
    c.label = need_string(colors[i], "label", cw);
    c.moved_by = parse_strings(need(colors[i], "moved_by", cw), cw + ".moved_by");
    c.rho = parse_qvec(need(colors[i], "rho", cw), cw + ".rho");
    sk.typea.push_back(std::move(c));
  }
  const Json& gamma = need(j, "gamma", where);
  if (!gamma.is_array()) fail(where + ".gamma", "expected an array");
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const std::string gw = where + ".gamma[" + std::to_string(i) + "]";
    InvariantDivisor g;
    g.label = need_string(gamma[i], "label", gw);
    g.rho = parse_qvec(need(gamma[i], "rho", gw), gw + ".rho");
    sk.gamma.push_back(std::move(g));
  }
  return sk;
}

// ---- embedding -------------------------------------------------------------

namespace {

std::string color_type_name(ColorType t) {
  switch (t) {
    case ColorType::A:
      return "a";
    case ColorType::TwoA:
      return "2a";
    case ColorType::B:
      return "b";
  }
  throw std::logic_error("unreachable");
}

ColorType color_type_parse(const std::string& s, const std::string& where) {
  if (s == "a") return ColorType::A;
  if (s == "2a") return ColorType::TwoA;
  if (s == "b") return ColorType::B;
  fail(where, "unknown color type '" + s + "'");
}

}  // namespace

Json embedding_to_json(const LunaEmbeddingData& E) {
  Json j;
  j["kind"] = "embedding";
  rs_to_json(j, E.R);
  j["sp"] = strings_json(E.sp);
  j["m_basis"] = qvecs_json(E.m_basis);
  j["sigma_m"] = qvecs_json(E.sigma_m);
  Json colors = Json::array();
  for (const auto& c : E.colors) {
    Json cj;
    cj["label"] = c.label;
    cj["type"] = color_type_name(c.type);
    cj["moved_by"] = strings_json(c.moved_by);
    cj["rho"] = qvec_json(c.rho);
    colors.push_back(cj);
  }
  j["colors"] = colors;
  return j;
}

LunaEmbeddingData embedding_from_json(const Json& j) {
  const std::string where = "embedding";
  LunaEmbeddingData E;
  E.R = rs_from_json(j, where);
  E.sp = parse_strings(need(j, "sp", where), where + ".sp");
  E.m_basis = parse_qvecs(need(j, "m_basis", where), where + ".m_basis");
  E.sigma_m = parse_qvecs(need(j, "sigma_m", where), where + ".sigma_m");
  const Json& colors = need(j, "colors", where);
  if (!colors.is_array()) fail(where + ".colors", "expected an array");
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const std::string cw = where + ".colors[" + std::to_string(i) + "]";
    EmbColor c;
    c.label = need_string(colors[i], "label", cw);
    c.type = color_type_parse(need_string(colors[i], "type", cw), cw + ".type");
    c.moved_by = parse_strings(need(colors[i], "moved_by", cw), cw + ".moved_by");
    c.rho = parse_qvec(need(colors[i], "rho", cw), cw + ".rho");
    E.colors.push_back(std::move(c));
  }
  return E;
}

// ---- fan -------------------------------------------------------------------

Json fan_to_json(const ColoredFan& F) {
  Json j;
  j["kind"] = "fan";
  Json cones = Json::array();
  for (const auto& cc : F.cones) {
    Json cj;
    Json gens = Json::array();
    for (const auto& g : cc.gens) {
      Json gj;
      gj["label"] = g.label;
      gj["color"] = g.is_color;
      gj["v"] = qvec_json(g.v);
      gens.push_back(gj);
    }
    cj["gens"] = gens;
    cj["colors"] = strings_json(cc.colors);
    cones.push_back(cj);
  }
  j["cones"] = cones;
  return j;
}

ColoredFan fan_from_json(const Json& j) {
  const std::string where = "fan";
  ColoredFan F;
  const Json& cones = need(j, "cones", where);
  if (!cones.is_array()) fail(where + ".cones", "expected an array");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const std::string cw = where + ".cones[" + std::to_string(i) + "]";
    ColoredCone cc;
    const Json& gens = need(cones[i], "gens", cw);
    if (!gens.is_array()) fail(cw + ".gens", "expected an array");
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::string gw = cw + ".gens[" + std::to_string(k) + "]";
      LabeledGen g;
      g.label = need_string(gens[k], "label", gw);
      g.is_color = need_bool(gens[k], "color", gw);
      g.v = parse_qvec(need(gens[k], "v", gw), gw + ".v");
      cc.gens.push_back(std::move(g));
    }
    cc.colors = parse_strings(need(cones[i], "colors", cw), cw + ".colors");
    F.cones.push_back(std::move(cc));
  }
  return F;
}

// ---- mfs case --------------------------------------------------------------

Json mfs_case_to_json(const MfsCase& c) {
  Json j;
  j["kind"] = "mfs-case";
  j["id"] = c.id;
  Json params = Json::array();
  for (int p : c.params) params.push_back(p);
  j["params"] = params;
  j["root_system"] = c.root_system;
  j["rplus_diff"] = c.rplus_diff.str();
  j["divisor_count"] = c.divisor_count;
  Json m = Json::array();
  for (const auto& x : c.m) m.push_back(x.str());
  j["m"] = m;
  j["lambda"] = qvecs_json(c.lambda_coords);
  j["argmax_coeffs"] = qvec_json(c.argmax_coeffs);
  return j;
}

MfsCase mfs_case_from_json(const Json& j) {
  const std::string where = "mfs-case";
  MfsCase c;
  c.id = need_int(j, "id", where);
  const Json& params = need(j, "params", where);
  if (!params.is_array()) fail(where + ".params", "expected an array");
  for (const auto& p : params) {
    if (!p.is_number_integer()) fail(where + ".params", "expected integers");
    c.params.push_back(p.get<int>());
  }
  c.root_system = need_string(j, "root_system", where);
  c.rplus_diff = parse_int_value(need(j, "rplus_diff", where), where + ".rplus_diff");
  c.divisor_count = need_int(j, "divisor_count", where);
  const Json& m = need(j, "m", where);
  if (!m.is_array()) fail(where + ".m", "expected an array");
  for (std::size_t i = 0; i < m.size(); ++i)
    c.m.push_back(parse_int_value(m[i], where + ".m[" + std::to_string(i) + "]"));
  c.lambda_coords = parse_qvecs(need(j, "lambda", where), where + ".lambda");
  c.argmax_coeffs =
      parse_qvec(need(j, "argmax_coeffs", where), where + ".argmax_coeffs");

  if (static_cast<int>(c.m.size()) != c.divisor_count)
    fail(where, "multiplicity list does not match divisor_count");
  for (const auto& l : c.lambda_coords)
    if (static_cast<int>(l.size()) != c.divisor_count)
      fail(where, "weight vector dimension does not match divisor_count");
  if (c.argmax_coeffs.size() != c.lambda_coords.size())
    fail(where, "coefficient list does not match weight list");
  return c;
}

// ---- trace -----------------------------------------------------------------

namespace {

Json wp_json(const WpValue& w) {
  Json j;
  if (w.neg_infinity) {
    j["value"] = "-inf";
  } else {
    j["value"] = rat_to_string(w.value);
    j["argmax"] = qvec_json(w.argmax);
  }
  return j;
}

WpValue wp_from_json(const Json& j, const std::string& where) {
  const Json& v = need(j, "value", where);
  if (!v.is_string()) fail(where + ".value", "expected a string");
  if (v.get<std::string>() == "-inf") return WpValue::negative_infinity();
  return WpValue::finite(parse_rat(v, where + ".value"),
                         j.contains("argmax")
                             ? parse_qvec(j.at("argmax"), where + ".argmax")
                             : QVec{});
}

}  // namespace

Json trace_to_json(const PipelineTrace& t) {
  Json j;
  j["kind"] = "trace";
  j["augmented"] = t.augmented;
  j["data"] = embedding_to_json(t.data);
  Json stages = Json::array();
  for (const auto& F : t.stages) stages.push_back(fan_to_json(F));
  j["stages"] = stages;
  Json wp = Json::array();
  for (const auto& w : t.wp) wp.push_back(wp_json(w));
  j["wp"] = wp;
  return j;
}

PipelineTrace trace_from_json(const Json& j) {
  const std::string where = "trace";
  PipelineTrace t;
  t.augmented = need_bool(j, "augmented", where);
  t.data = embedding_from_json(need(j, "data", where));
  const Json& stages = need(j, "stages", where);
  if (!stages.is_array()) fail(where + ".stages", "expected an array");
  for (const auto& s : stages) t.stages.push_back(fan_from_json(s));
  const Json& wp = need(j, "wp", where);
  if (!wp.is_array()) fail(where + ".wp", "expected an array");
  for (std::size_t i = 0; i < wp.size(); ++i)
    t.wp.push_back(wp_from_json(wp[i], where + ".wp[" + std::to_string(i) + "]"));
  return t;
}

// ---- files -----------------------------------------------------------------

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string document_kind(const Json& j) {
  return need_string(j, "kind", "document");
}

SphericalSkeleton load_skeleton(const std::string& path) {
  const Json j = read_json_file(path);
  if (document_kind(j) != "skeleton")
    throw std::runtime_error(path + ": not a skeleton document");
  SphericalSkeleton sk = skeleton_from_json(j);
  require_valid_skeleton(sk);
  return sk;
}

EmbeddingDoc load_embedding_doc(const std::string& path) {
  const Json j = read_json_file(path);
  const std::string kind = document_kind(j);
  if (kind != "embedding" && kind != "fan")
    throw std::runtime_error(path + ": not an embedding document");
  EmbeddingDoc doc;
  if (kind == "fan") {
    doc.E = embedding_from_json(need(j, "embedding", "fan"));
    doc.fan = fan_from_json(j);
    doc.has_fan = true;
  } else {
    doc.E = embedding_from_json(j);
    if (j.contains("fan")) {
      doc.fan = fan_from_json(j.at("fan"));
      doc.has_fan = true;
    }
  }
  require_valid_embedding(doc.E);
  if (doc.has_fan) {
    const auto viol = validate_fan(doc.E, doc.fan, false);
    if (!viol.empty()) {
      std::ostringstream os;
      os << path << ": invalid fan:";
      for (const auto& v : viol) os << " [" << v.code << ": " << v.witness << "]";
      throw std::runtime_error(os.str());
    }
  }
  return doc;
}

MfsCase load_mfs_case(const std::string& path) {
  const Json j = read_json_file(path);
  if (document_kind(j) != "mfs-case")
    throw std::runtime_error(path + ": not an mfs-case document");
  return mfs_case_from_json(j);
}

}  // namespace sphcrit
