/** @file
 *  @brief Implementation of the headline criteria and the corpus verifier.
 */
#include "sphcrit/criteria.hpp"

#include <algorithm>
#include <filesystem>
#include <future>
#include <stdexcept>

#include "sphcrit/docio.hpp"
#include "sphcrit/polyhedron.hpp"

namespace sphcrit {

bool is_toric(const LunaEmbeddingData& E, const ColoredFan& F) {
  if (!is_complete(E, F))
    throw std::invalid_argument("toricness is defined for complete fans only");
  const WpValue wp = wp_tilde_embedding(E, F);
  return !wp.neg_infinity && wp.value == 0;
}

SmoothnessCertificate is_smooth_along(const LunaEmbeddingData& E,
                                      const ColoredFan& F,
                                      const ColoredCone& orbit) {
  const FanContext ctx = context_of(E);
  bool found = false;
  for (const auto& cc : F.cones)
    if (colored_cones_same(ctx, cc, orbit)) found = true;
  if (!found)
    throw std::invalid_argument("the orbit cone is not a member of the fan");

  SmoothnessCertificate cert;
  cert.divisors = orbit_divisor_set(orbit);

  // The skeleton reconstructs non-type-a colors under synthesized names, so
  // divisor labels of such colors are translated by matching mover sets.
  const SphericalSkeleton sk = skeleton_of_embedding(E, F);
  const std::vector<FullColor> full = reconstruct_colors(sk);
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<std::string> translated;
  for (const auto& lbl : cert.divisors) {
    const EmbColor* c = E.find_color(lbl);
    if (c == nullptr || c->type == ColorType::A) {
      translated.push_back(lbl);
      continue;
    }
    const auto want = sorted(c->moved_by);
    bool matched = false;
    for (const auto& fc : full)
      if (fc.type == c->type && sorted(fc.moved_by) == want) {
        translated.push_back(fc.label);
        matched = true;
        break;
      }
    if (!matched)
      throw std::logic_error("no reconstructed color matches " + lbl);
  }
  cert.localized = localize(sk, translated);
  cert.wp_local = wp_tilde_skeleton(cert.localized);
  cert.smooth = cert.wp_local.neg_infinity || cert.wp_local.value < 1;
  return cert;
}

MfsReport verify_mfs_case(const MfsCase& c) {
  const int d = c.divisor_count;
  if (d < 0 || static_cast<int>(c.m.size()) != d)
    throw std::invalid_argument("multiplicity list does not match divisor count");
  for (const auto& l : c.lambda_coords)
    if (static_cast<int>(l.size()) != d)
      throw std::invalid_argument("weight vector of wrong dimension");
  if (c.argmax_coeffs.size() != c.lambda_coords.size())
    throw std::invalid_argument("coefficient list does not match weight list");
  for (const auto& a : c.argmax_coeffs)
    if (sgn(a) < 0)
      throw std::invalid_argument("negative coefficient in expected optimum");
  for (const auto& mi : c.m)
    if (mi < 1) throw std::invalid_argument("multiplicities must be >= 1");

  QVec theta = qvec_zero(d);
  for (std::size_t i = 0; i < c.lambda_coords.size(); ++i)
    theta = add(theta, scale(c.argmax_coeffs[i], c.lambda_coords[i]));

  MfsReport rep;
  rep.argmax_feasible = true;
  for (int i = 0; i < d; ++i)
    if (theta[i] < -Rat(c.m[i])) rep.argmax_feasible = false;

  Polyhedron P;
  P.dim = d;
  for (int i = 0; i < d; ++i) {
    QVec row = qvec_zero(d);
    row[i] = 1;
    P.rows.push_back({row, -Rat(c.m[i])});
  }
  std::vector<QVec> gens;
  for (const auto& l : c.lambda_coords)
    if (!is_zero(l)) gens.push_back(l);
  const Cone T(d, gens);
  const SupOutcome res = solve_lp_sup(P, T, QVec(d, Rat(1)));
  if (res.kind != SupOutcome::Kind::Value)
    throw std::runtime_error("coordinate-sum objective has no finite optimum");

  Rat coordsum(0), mconst(0);
  for (const auto& x : theta) coordsum += x;
  for (const auto& mi : c.m) mconst += Rat(mi - 1);
  rep.argmax_optimal = rep.argmax_feasible && coordsum == res.value;
  rep.wp = Rat(c.rplus_diff) - mconst - res.value;
  return rep;
}

CorpusSummary run_corpus(const std::string& dir, int max_rank, int jobs) {
  namespace fs = std::filesystem;
  CorpusSummary sum;

  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path().string());
  if (ec) {
    sum.status = "cannot read directory: " + dir;
    return sum;
  }
  std::sort(files.begin(), files.end());

  std::vector<CorpusEntry> entries(files.size());
  auto work = [&](std::size_t i) {
    CorpusEntry& e = entries[i];
    e.file = files[i];
    try {
      e.parsed = load_mfs_case(files[i]);
      if (max_rank > 0 && e.parsed->divisor_count > max_rank) {
        e.parsed.reset();
        e.error = "skipped: rank above limit";
        return;
      }
      e.report = verify_mfs_case(*e.parsed);
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) work(i);
  } else {
    for (std::size_t base = 0; base < files.size();
         base += static_cast<std::size_t>(jobs)) {
      std::vector<std::future<void>> batch;
      for (std::size_t i = base;
           i < files.size() && i < base + static_cast<std::size_t>(jobs); ++i)
        batch.push_back(std::async(std::launch::async, work, i));
      for (auto& f : batch) f.get();
    }
  }

  std::stable_sort(entries.begin(), entries.end(),
                   [](const CorpusEntry& a, const CorpusEntry& b) {
                     const int ia = a.parsed ? a.parsed->id : 1 << 30;
                     const int ib = b.parsed ? b.parsed->id : 1 << 30;
                     if (ia != ib) return ia < ib;
                     const auto& pa = a.parsed ? a.parsed->params
                                               : std::vector<int>{};
                     const auto& pb = b.parsed ? b.parsed->params
                                               : std::vector<int>{};
                     if (pa != pb) return pa < pb;
                     return a.file < b.file;
                   });

  std::size_t verified = 0, failed = 0, skipped = 0, broken = 0;
  for (const auto& e : entries) {
    if (e.report) {
      if (e.report->pass())
        ++verified;
      else
        ++failed;
    } else if (e.error.rfind("skipped", 0) == 0) {
      ++skipped;
    } else {
      ++broken;
    }
  }
  sum.entries = std::move(entries);
  if (files.empty()) {
    sum.overall = false;
    sum.status = "no cases";
  } else {
    sum.overall = failed == 0 && broken == 0 && verified > 0;
    sum.status = std::to_string(verified) + " verified, " +
                 std::to_string(failed) + " failed, " +
                 std::to_string(broken) + " unreadable, " +
                 std::to_string(skipped) + " skipped";
  }
  return sum;
}

}  // namespace sphcrit
