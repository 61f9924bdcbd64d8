/** @file
 *  @brief Command-line front end: validation, wp values, smoothness and
 *         toricness verdicts, the completion pipeline, and corpus checks.
 */
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sphcrit/docio.hpp"

namespace {

using namespace sphcrit;

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitInternal = 4;

/** Thrown for bad flag combinations or unresolvable orbit ids. */
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string wp_str(const WpValue& w) {
  return w.neg_infinity ? "-inf" : rat_to_string(w.value);
}

EmbeddingDoc load_with_fan(const std::string& path) {
  EmbeddingDoc doc = load_embedding_doc(path);
  if (!doc.has_fan)
    throw std::runtime_error(path + ": document carries no fan");
  return doc;
}

std::vector<std::string> sorted_gen_labels(const ColoredCone& cc) {
  std::vector<std::string> out;
  for (const auto& g : cc.gens) out.push_back(g.label);
  std::sort(out.begin(), out.end());
  return out;
}

const ColoredCone& resolve_orbit(const FanContext& ctx, const ColoredFan& F,
                                 const std::string& id) {
  if (id == "open") {
    for (const auto& cc : F.cones)
      if (cc.gens.empty()) return cc;
    throw UsageError("fan has no minimal cone");
  }
  if (id == "closed") {
    const std::vector<int> mx = maximal_cone_indices(ctx, F);
    if (mx.size() != 1)
      throw UsageError("orbit 'closed' is ambiguous: fan has " +
                       std::to_string(mx.size()) + " maximal cones");
    return F.cones[mx[0]];
  }
  std::vector<std::string> want;
  std::stringstream ss(id);
  std::string piece;
  while (std::getline(ss, piece, ','))
    if (!piece.empty()) want.push_back(piece);
  std::sort(want.begin(), want.end());
  if (want.empty()) throw UsageError("empty orbit id");
  for (const auto& cc : F.cones)
    if (sorted_gen_labels(cc) == want) return cc;
  throw UsageError("no cone of the fan has generator labels '" + id + "'");
}

int run_validate(const std::string& path) {
  const Json j = read_json_file(path);
  const std::string kind = document_kind(j);
  std::vector<Violation> viol;
  if (kind == "skeleton") {
    viol = validate_skeleton(skeleton_from_json(j));
  } else if (kind == "embedding" || kind == "fan") {
    LunaEmbeddingData E;
    ColoredFan F;
    bool has_fan = false;
    if (kind == "fan") {
      if (!j.contains("embedding"))
        throw std::runtime_error(path + ": fan document lacks its embedding");
      E = embedding_from_json(j.at("embedding"));
      F = fan_from_json(j);
      has_fan = true;
    } else {
      E = embedding_from_json(j);
      if (j.contains("fan")) {
        F = fan_from_json(j.at("fan"));
        has_fan = true;
      }
    }
    viol = validate_embedding(E);
    if (viol.empty() && has_fan) viol = validate_fan(E, F, false);
  } else if (kind == "mfs-case") {
    mfs_case_from_json(j);
  } else if (kind == "trace") {
    trace_from_json(j);
  } else {
    throw std::runtime_error(path + ": unknown document kind '" + kind + "'");
  }
  if (viol.empty()) {
    std::cout << "valid " << kind << "\n";
  } else {
    std::cout << "invalid " << kind << " (" << viol.size() << " violation"
              << (viol.size() == 1 ? "" : "s") << ")\n";
    for (const auto& v : viol)
      std::cout << "  " << v.code << ": " << v.witness << "\n";
  }
  return 0;
}

int run_wp(const std::string& skel_path, const std::string& emb_path) {
  if (skel_path.empty() == emb_path.empty())
    throw UsageError("wp: exactly one of --skeleton/--embedding is required");
  WpValue w;
  if (!skel_path.empty()) {
    w = wp_tilde_skeleton(load_skeleton(skel_path));
  } else {
    const EmbeddingDoc doc = load_with_fan(emb_path);
    w = wp_tilde_embedding(doc.E, doc.fan);
  }
  std::cout << wp_str(w) << "\n";
  return 0;
}

int run_smooth(const std::string& emb_path, const std::string& orbit_id) {
  const EmbeddingDoc doc = load_with_fan(emb_path);
  const FanContext ctx = context_of(doc.E);
  const ColoredCone& orbit = resolve_orbit(ctx, doc.fan, orbit_id);
  const SmoothnessCertificate cert = is_smooth_along(doc.E, doc.fan, orbit);
  const std::string v = wp_str(cert.wp_local);
  if (cert.smooth)
    std::cout << "smooth (wp_local = " << v << " < 1)\n";
  else
    std::cout << "not smooth (wp_local = " << v << " >= 1)\n";
  return 0;
}

int run_toric(const std::string& emb_path) {
  const EmbeddingDoc doc = load_with_fan(emb_path);
  const bool t = is_toric(doc.E, doc.fan);
  const WpValue w = wp_tilde_embedding(doc.E, doc.fan);
  std::cout << (t ? "toric" : "not toric") << " (wp = " << wp_str(w) << ")\n";
  return 0;
}

int run_gorensteinify(const std::string& emb_path, const std::string& out) {
  const EmbeddingDoc doc = load_with_fan(emb_path);
  const PipelineTrace t = gorensteinify(doc.E, doc.fan);
  write_json_file(out, trace_to_json(t));
  static const char* kStageNames[] = {"input", "lift", "completion",
                                      "colors-to-rays", "triangulation"};
  std::cout << "augmented: " << (t.augmented ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < t.stages.size(); ++i)
    std::cout << "stage " << i + 1 << " (" << kStageNames[i]
              << "): " << t.stages[i].cones.size()
              << " cones, wp = " << wp_str(t.wp[i]) << "\n";
  std::cout << "trace written to " << out << "\n";
  return 0;
}

int run_verify_mfs(const std::string& dir, int max_rank, int jobs) {
  if (jobs < 1) throw UsageError("--jobs must be at least 1");
  const CorpusSummary s = run_corpus(dir, max_rank, jobs);
  for (const auto& e : s.entries) {
    const std::string base = std::filesystem::path(e.file).filename().string();
    std::cout << base << ": ";
    if (!e.error.empty()) {
      const bool skip = e.error.rfind("skipped", 0) == 0;
      std::cout << (skip ? "SKIP" : "ERROR") << " (" << e.error << ")\n";
      continue;
    }
    const MfsReport& r = *e.report;
    std::cout << (r.pass() ? "PASS" : "FAIL") << " item " << e.parsed->id
              << " (";
    for (std::size_t i = 0; i < e.parsed->params.size(); ++i)
      std::cout << (i ? "," : "") << e.parsed->params[i];
    std::cout << ") wp = " << rat_to_string(r.wp);
    if (!r.argmax_feasible)
      std::cout << " [expected optimum infeasible]";
    else if (!r.argmax_optimal)
      std::cout << " [expected optimum not optimal]";
    std::cout << "\n";
  }
  std::cout << s.status << "\n";
  std::cout << "overall " << (s.overall ? "PASS" : "FAIL") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact combinatorial smoothness and toricness criteria for spherical "
      "varieties"};
  app.require_subcommand(1);

  std::string doc_path, skel_path, emb_path, orbit_id, out_path, dir_path;
  int max_rank = 0, jobs = 1;

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "Check a document and report violations");
  cmd_validate->add_option("doc", doc_path, "document file")->required();

  CLI::App* cmd_wp =
      app.add_subcommand("wp", "Print the weighted-discrepancy value");
  cmd_wp->add_option("--skeleton", skel_path, "skeleton document");
  cmd_wp->add_option("--embedding", emb_path, "embedding document with a fan");

  CLI::App* cmd_smooth =
      app.add_subcommand("smooth", "Decide smoothness along an orbit");
  cmd_smooth->add_option("--embedding", emb_path, "embedding document with a fan")
      ->required();
  cmd_smooth
      ->add_option("--orbit", orbit_id,
                   "comma-separated generator labels, or open/closed")
      ->required();

  CLI::App* cmd_toric =
      app.add_subcommand("toric", "Decide toricness of a complete embedding");
  cmd_toric->add_option("--embedding", emb_path, "embedding document with a fan")
      ->required();

  CLI::App* cmd_gor = app.add_subcommand(
      "gorensteinify", "Run the five-stage completion pipeline, write a trace");
  cmd_gor->add_option("--embedding", emb_path, "embedding document with a fan")
      ->required();
  cmd_gor->add_option("--out", out_path, "trace output file")->required();

  CLI::App* cmd_vm = app.add_subcommand(
      "verify-mfs", "Verify every case document in a directory");
  cmd_vm->add_option("--dir", dir_path, "directory of case files")->required();
  cmd_vm->add_option("--max-rank", max_rank,
                     "skip cases with more divisors than this (0 = no limit)");
  cmd_vm->add_option("--jobs", jobs, "worker count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(cmd_validate)) return run_validate(doc_path);
    if (app.got_subcommand(cmd_wp)) return run_wp(skel_path, emb_path);
    if (app.got_subcommand(cmd_smooth)) return run_smooth(emb_path, orbit_id);
    if (app.got_subcommand(cmd_toric)) return run_toric(emb_path);
    if (app.got_subcommand(cmd_gor)) return run_gorensteinify(emb_path, out_path);
    if (app.got_subcommand(cmd_vm))
      return run_verify_mfs(dir_path, max_rank, jobs);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
