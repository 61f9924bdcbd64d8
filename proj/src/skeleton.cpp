/** @file
 *  @brief Skeleton validation, color reconstruction, wp, localization.
 */
#include "sphcrit/skeleton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sphcrit/cone.hpp"
#include "sphcrit/linalg.hpp"
#include "sphcrit/polyhedron.hpp"

namespace sphcrit {

namespace {

/** Index of gamma-vector `v` in sigma, or -1. */
int sigma_index(const SphericalSkeleton& sk, const QVec& v) {
  for (std::size_t i = 0; i < sk.sigma.size(); ++i)
    if (compare(sk.sigma[i], v) == 0) return static_cast<int>(i);
  return -1;
}

QVec simple_root_vector(const RootSystem& R, int i, const Rat& scale) {
  QVec v = qvec_zero(R.simple_count());
  v[i] = scale;
  return v;
}

/** Simple roots alpha with alpha in Sigma (indices into R's label list). */
std::vector<int> simple_in_sigma(const SphericalSkeleton& sk) {
  std::vector<int> out;
  for (int i = 0; i < sk.R.simple_count(); ++i)
    if (sigma_index(sk, simple_root_vector(sk.R, i, Rat(1))) >= 0) out.push_back(i);
  return out;
}

/** Simple roots alpha with 2*alpha in Sigma. */
std::vector<int> simple_in_half_sigma(const SphericalSkeleton& sk) {
  std::vector<int> out;
  for (int i = 0; i < sk.R.simple_count(); ++i)
    if (sigma_index(sk, simple_root_vector(sk.R, i, Rat(2))) >= 0) out.push_back(i);
  return out;
}

/** Values of alpha's coroot on the Sigma basis. */
QVec coroot_on_sigma(const SphericalSkeleton& sk, const std::string& alpha) {
  QVec out;
  for (const QVec& g : sk.sigma) out.push_back(sk.R.coroot_pair(alpha, g));
  return out;
}

bool in_sp(const SphericalSkeleton& sk, const std::string& label) {
  return std::find(sk.sp.begin(), sk.sp.end(), label) != sk.sp.end();
}

std::string pick_fresh_label(const std::string& base,
                             const std::set<std::string>& used) {
  std::string cand = base;
  while (used.count(cand)) cand = "2:" + cand;
  return cand;
}

}  // namespace

std::vector<Violation> validate_skeleton(const SphericalSkeleton& sk) {
  std::vector<Violation> out;
  const int n = sk.R.simple_count();
  const int r = sk.rank();

  for (const auto& l : sk.sp)
    if (sk.R.label_index(l) < 0) out.push_back({"UnknownLabel", "Sp: " + l});
  {
    std::set<std::string> seen;
    for (const auto& c : sk.typea)
      if (!seen.insert(c.label).second)
        out.push_back({"DuplicateLabel", c.label});
    for (const auto& d : sk.gamma)
      if (!seen.insert(d.label).second)
        out.push_back({"DuplicateLabel", d.label});
  }

  for (int i = 0; i < r; ++i) {
    const QVec& g = sk.sigma[i];
    if (static_cast<int>(g.size()) != n) {
      out.push_back({"BadShape", "sigma[" + std::to_string(i) + "]"});
      return out;  // later checks would index out of range
    }
    bool nonneg = true;
    for (const Rat& x : g)
      if (sgn(x) < 0) nonneg = false;
    if (!nonneg || is_zero(g))
      out.push_back({"SigmaNotNonneg", qvec_to_string(g)});
    for (int j = 0; j < i; ++j)
      if (compare(sk.sigma[j], g) == 0)
        out.push_back({"SigmaDuplicate", qvec_to_string(g)});
  }
  if (rank_of(sk.sigma) < r) out.push_back({"SigmaDependent", "sigma"});

  for (const auto& c : sk.typea) {
    if (static_cast<int>(c.rho.size()) != r)
      out.push_back({"BadShape", c.label});
    else if (!is_integral(c.rho))
      out.push_back({"RhoNotIntegral", c.label});
  }
  for (const auto& d : sk.gamma) {
    if (static_cast<int>(d.rho.size()) != r)
      out.push_back({"BadShape", d.label});
    else if (!is_integral(d.rho))
      out.push_back({"RhoNotIntegral", d.label});
  }
  for (const auto& v : out)
    if (v.code == "BadShape" || v.code == "UnknownLabel") return out;

  const std::vector<int> s_cap_sigma = simple_in_sigma(sk);
  const std::vector<int> s_cap_half = simple_in_half_sigma(sk);
  auto is_in = [](const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };

  // (A1): type-a colors are moved by simple roots in Sigma, two per root.
  for (const auto& c : sk.typea) {
    if (c.moved_by.empty()) out.push_back({"A1", c.label + " moved by nothing"});
    for (const auto& a : c.moved_by) {
      const int ai = sk.R.label_index(a);
      if (ai < 0)
        out.push_back({"UnknownLabel", c.label + " mover " + a});
      else if (!is_in(s_cap_sigma, ai))
        out.push_back({"A1", c.label + " mover " + a + " not a spherical root"});
    }
  }
  for (int ai : s_cap_sigma) {
    const std::string a = sk.R.simple_labels()[ai];
    std::vector<const TypeAColor*> movers;
    for (const auto& c : sk.typea)
      if (std::find(c.moved_by.begin(), c.moved_by.end(), a) != c.moved_by.end())
        movers.push_back(&c);
    if (movers.size() != 2) {
      out.push_back({"A1", a + " moves " + std::to_string(movers.size()) +
                               " colors, expected 2"});
      continue;
    }
    // (A2): the pair sums to the coroot restricted to the span of Sigma.
    const QVec cv = coroot_on_sigma(sk, a);
    const QVec sum = add(movers[0]->rho, movers[1]->rho);
    if (compare(sum, cv) != 0)
      out.push_back({"A2", a + ": " + qvec_to_string(sum) + " != " +
                               qvec_to_string(cv)});
  }
  // (A3): values at most 1, equal to 1 exactly at the moving roots.
  for (const auto& c : sk.typea) {
    for (int i = 0; i < r; ++i) {
      bool is_mover_root = false;
      for (const auto& a : c.moved_by) {
        const int ai = sk.R.label_index(a);
        if (ai >= 0 &&
            compare(sk.sigma[i], simple_root_vector(sk.R, ai, Rat(1))) == 0)
          is_mover_root = true;
      }
      const Rat v = c.rho[i];
      if (v > 1 || (v == 1) != is_mover_root)
        out.push_back({"A3", c.label + " at " + qvec_to_string(sk.sigma[i]) +
                                 ": " + rat_to_string(v)});
    }
  }
  // (Sigma1): doubled simple roots pair nonpositively and evenly with the rest.
  for (int ai : s_cap_half) {
    const std::string a = sk.R.simple_labels()[ai];
    const QVec twoa = simple_root_vector(sk.R, ai, Rat(2));
    for (const QVec& g : sk.sigma) {
      if (compare(g, twoa) == 0) continue;
      const Rat v = sk.R.coroot_pair(a, g);
      if (sgn(v) > 0 || den(v) != 1 || num(v) % 2 != 0)
        out.push_back({"Sigma1", a + " at " + qvec_to_string(g) + ": " +
                                     rat_to_string(v)});
    }
  }
  // (Sigma2): orthogonal simple roots whose sum is a (half) spherical root
  // have matching pairings on Sigma and against kappa.
  const QVec kappa = sk.R.kappa(sk.sp);
  for (int ai = 0; ai < n; ++ai)
    for (int bi = ai + 1; bi < n; ++bi) {
      if (sk.R.cartan()[ai][bi] != 0) continue;
      QVec s = simple_root_vector(sk.R, ai, Rat(1));
      s[bi] = 1;
      QVec half = scale(Rat(1, 2), s);
      if (sigma_index(sk, s) < 0 && sigma_index(sk, half) < 0) continue;
      const std::string a = sk.R.simple_labels()[ai];
      const std::string b = sk.R.simple_labels()[bi];
      for (const QVec& g : sk.sigma)
        if (sk.R.coroot_pair(a, g) != sk.R.coroot_pair(b, g))
          out.push_back({"Sigma2", a + "," + b + " at " + qvec_to_string(g)});
      if (sk.R.coroot_pair(a, kappa) != sk.R.coroot_pair(b, kappa))
        out.push_back({"Sigma2", a + "," + b + " against kappa"});
    }
  // Sp avoids Sigma and half Sigma, and pairs to zero with every
  // spherical root.
  for (const auto& l : sk.sp) {
    const int ai = sk.R.label_index(l);
    if (is_in(s_cap_sigma, ai) || is_in(s_cap_half, ai))
      out.push_back({"SpMeetsSigma", l});
    for (const QVec& g : sk.sigma)
      if (sgn(sk.R.coroot_pair(l, g)) != 0)
        out.push_back({"SpSigmaPairing", l + " at " + qvec_to_string(g)});
  }
  return out;
}

void require_valid_skeleton(const SphericalSkeleton& sk) {
  const auto v = validate_skeleton(sk);
  if (v.empty()) return;
  std::ostringstream os;
  os << "invalid skeleton:";
  for (const auto& x : v) os << " [" << x.code << ": " << x.witness << "]";
  throw std::invalid_argument(os.str());
}

std::vector<FullColor> reconstruct_colors(const SphericalSkeleton& sk) {
  require_valid_skeleton(sk);
  const int r = sk.rank();
  std::vector<FullColor> out;
  for (const auto& c : sk.typea)
    out.push_back({c.label, ColorType::A, c.moved_by, c.rho, Int(1)});

  for (int ai : simple_in_half_sigma(sk)) {
    const std::string a = sk.R.simple_labels()[ai];
    QVec rho = coroot_on_sigma(sk, a);
    for (Rat& x : rho) x /= 2;
    out.push_back({"2a(" + a + ")", ColorType::TwoA, {a}, std::move(rho), Int(1)});
  }

  const QVec kappa = sk.R.kappa(sk.sp);
  const auto in_sigma = simple_in_sigma(sk);
  const auto in_half = simple_in_half_sigma(sk);
  std::vector<int> b_roots;
  for (int i = 0; i < sk.R.simple_count(); ++i) {
    if (in_sp(sk, sk.R.simple_labels()[i])) continue;
    if (std::find(in_sigma.begin(), in_sigma.end(), i) != in_sigma.end()) continue;
    if (std::find(in_half.begin(), in_half.end(), i) != in_half.end()) continue;
    b_roots.push_back(i);
  }
  std::vector<bool> used(b_roots.size(), false);
  for (std::size_t p = 0; p < b_roots.size(); ++p) {
    if (used[p]) continue;
    const int ai = b_roots[p];
    const std::string a = sk.R.simple_labels()[ai];
    std::vector<std::string> movers{a};
    for (std::size_t q = p + 1; q < b_roots.size(); ++q) {
      if (used[q]) continue;
      const int bi = b_roots[q];
      if (sk.R.cartan()[ai][bi] != 0) continue;
      QVec s = simple_root_vector(sk.R, ai, Rat(1));
      s[bi] = 1;
      if (sigma_index(sk, s) >= 0 ||
          sigma_index(sk, scale(Rat(1, 2), s)) >= 0) {
        movers.push_back(sk.R.simple_labels()[bi]);
        used[q] = true;
        break;
      }
    }
    used[p] = true;
    std::string label = "b(" + movers[0];
    for (std::size_t i = 1; i < movers.size(); ++i) label += "+" + movers[i];
    label += ")";
    const Rat m = sk.R.coroot_pair(a, kappa);
    (void)r;
    out.push_back({label, ColorType::B, movers, coroot_on_sigma(sk, a),
                   num(m)});
  }
  return out;
}

Int anticanonical_coeff(const SphericalSkeleton& sk, const FullColor& c) {
  if (c.type != ColorType::B) return Int(1);
  const Rat m = sk.R.coroot_pair(c.moved_by.at(0), sk.R.kappa(sk.sp));
  return num(m);
}

Int anticanonical_coeff(const SphericalSkeleton&, const InvariantDivisor&) {
  return Int(1);
}

Int rplus_difference(const RootSystem& R, const std::vector<std::string>& sp) {
  return Int(R.positive_roots().size()) - Int(R.positive_roots(sp).size());
}

WpValue wp_tilde_skeleton(const SphericalSkeleton& sk) {
  const auto colors = reconstruct_colors(sk);  // validates
  const int r = sk.rank();
  std::vector<std::pair<QVec, Int>> delta;
  for (const auto& c : colors) delta.push_back({c.rho, c.m});
  for (const auto& d : sk.gamma) delta.push_back({d.rho, Int(1)});

  Rat constant(0);
  for (const auto& [rho, m] : delta) constant += Rat(m - 1);
  const Rat rplus(rplus_difference(sk.R, sk.sp));

  if (r == 0) return WpValue::finite(rplus - constant, {});

  Polyhedron P;
  P.dim = r;
  QVec objective = qvec_zero(r);
  for (const auto& [rho, m] : delta) {
    P.rows.push_back({rho, Rat(-m)});
    objective = add(objective, rho);
  }
  std::vector<QVec> basis;
  for (int i = 0; i < r; ++i) {
    QVec e = qvec_zero(r);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  const Cone T(r, basis);
  const SupOutcome res = solve_lp_sup(P, T, objective);
  switch (res.kind) {
    case SupOutcome::Kind::Unbounded:
      return WpValue::negative_infinity();
    case SupOutcome::Kind::Infeasible:
      throw std::logic_error("wp region empty although 0 is always feasible");
    case SupOutcome::Kind::Value:
      return WpValue::finite(rplus - (constant + res.value), res.argmax);
  }
  throw std::logic_error("unreachable");
}

SphericalSkeleton localize(const SphericalSkeleton& sk,
                           const std::vector<std::string>& labels) {
  const auto colors = reconstruct_colors(sk);
  std::set<int> mover_idx;
  for (const auto& l : labels) {
    bool found = false;
    for (const auto& c : colors)
      if (c.label == l) {
        for (const auto& a : c.moved_by) mover_idx.insert(sk.R.label_index(a));
        found = true;
      }
    for (const auto& d : sk.gamma)
      if (d.label == l) found = true;  // invariant divisors move nothing
    if (!found) throw std::invalid_argument("localize: unknown label " + l);
  }

  std::vector<int> s_loc(mover_idx.begin(), mover_idx.end());
  std::vector<std::string> s_loc_labels;
  for (int i : s_loc) s_loc_labels.push_back(sk.R.simple_labels()[i]);

  SphericalSkeleton out;
  out.R = sk.R.sub_system(s_loc_labels);
  for (const auto& l : sk.sp)
    if (mover_idx.count(sk.R.label_index(l))) out.sp.push_back(l);

  // Spherical roots supported on the retained simple roots.
  std::vector<int> kept_sigma;
  for (int i = 0; i < sk.rank(); ++i) {
    bool supported = true;
    for (int j = 0; j < sk.R.simple_count(); ++j)
      if (sgn(sk.sigma[i][j]) != 0 && !mover_idx.count(j)) supported = false;
    if (!supported) continue;
    kept_sigma.push_back(i);
    QVec g;
    for (int j : s_loc) g.push_back(sk.sigma[i][j]);
    out.sigma.push_back(std::move(g));
  }

  auto restrict_rho = [&](const QVec& rho) {
    QVec v;
    for (int i : kept_sigma) v.push_back(rho[i]);
    return v;
  };

  for (const auto& c : sk.typea) {
    std::vector<std::string> kept_movers;
    for (const auto& a : c.moved_by) {
      const int ai = sk.R.label_index(a);
      if (!mover_idx.count(ai)) continue;
      // The mover must itself remain a spherical root after restriction.
      QVec e = qvec_zero(static_cast<int>(s_loc.size()));
      for (std::size_t j = 0; j < s_loc.size(); ++j)
        if (s_loc[j] == ai) e[j] = 1;
      for (const QVec& g : out.sigma)
        if (compare(g, e) == 0) kept_movers.push_back(a);
    }
    if (kept_movers.empty()) continue;
    out.typea.push_back({c.label, kept_movers, restrict_rho(c.rho)});
  }
  for (const auto& d : sk.gamma)
    if (std::find(labels.begin(), labels.end(), d.label) != labels.end())
      out.gamma.push_back({d.label, restrict_rho(d.rho)});
  return out;
}

SphericalSkeleton reduce_equivalence(const SphericalSkeleton& sk) {
  SphericalSkeleton out = sk;
  out.gamma.clear();
  for (const auto& d : sk.gamma)
    if (!is_zero(d.rho)) out.gamma.push_back(d);
  return out;
}

SphericalSkeleton direct_sum_skeletons(const SphericalSkeleton& s1,
                                       const SphericalSkeleton& s2) {
  SphericalSkeleton out;
  out.R = RootSystem::direct_sum(s1.R, s2.R);
  const int n1 = s1.R.simple_count();
  const int n2 = s2.R.simple_count();
  const int r1 = s1.rank();
  const int r2 = s2.rank();

  auto map2 = [&](const std::string& l) {
    return out.R.simple_labels()[n1 + s2.R.label_index(l)];
  };
  out.sp = s1.sp;
  for (const auto& l : s2.sp) out.sp.push_back(map2(l));

  for (const auto& g : s1.sigma) {
    QVec v = g;
    v.resize(n1 + n2, Rat(0));
    out.sigma.push_back(std::move(v));
  }
  for (const auto& g : s2.sigma) {
    QVec v = qvec_zero(n1 + n2);
    for (int j = 0; j < n2; ++j) v[n1 + j] = g[j];
    out.sigma.push_back(std::move(v));
  }

  std::set<std::string> used;
  for (const auto& c : s1.typea) used.insert(c.label);
  for (const auto& d : s1.gamma) used.insert(d.label);
  auto pad1 = [&](const QVec& rho) {
    QVec v = rho;
    v.resize(r1 + r2, Rat(0));
    return v;
  };
  auto pad2 = [&](const QVec& rho) {
    QVec v = qvec_zero(r1 + r2);
    for (int j = 0; j < r2; ++j) v[r1 + j] = rho[j];
    return v;
  };
  for (const auto& c : s1.typea)
    out.typea.push_back({c.label, c.moved_by, pad1(c.rho)});
  for (const auto& d : s1.gamma) out.gamma.push_back({d.label, pad1(d.rho)});
  for (const auto& c : s2.typea) {
    const std::string label = pick_fresh_label(c.label, used);
    used.insert(label);
    std::vector<std::string> movers;
    for (const auto& a : c.moved_by) movers.push_back(map2(a));
    out.typea.push_back({label, movers, pad2(c.rho)});
  }
  for (const auto& d : s2.gamma) {
    const std::string label = pick_fresh_label(d.label, used);
    used.insert(label);
    out.gamma.push_back({label, pad2(d.rho)});
  }
  return out;
}

bool skeletons_equal(const SphericalSkeleton& a, const SphericalSkeleton& b) {
  if (a.R.simple_labels() != b.R.simple_labels() ||
      a.R.cartan() != b.R.cartan() || a.R.torus_rank() != b.R.torus_rank())
    return false;
  auto as_set = [](const std::vector<std::string>& v) {
    return std::set<std::string>(v.begin(), v.end());
  };
  if (as_set(a.sp) != as_set(b.sp)) return false;
  if (a.rank() != b.rank()) return false;

  // Order Sigma canonically and remap functional coordinates accordingly.
  auto canon = [](const SphericalSkeleton& sk) {
    std::vector<int> perm(sk.rank());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int i, int j) {
      return compare(sk.sigma[i], sk.sigma[j]) < 0;
    });
    std::vector<QVec> sigma;
    for (int i : perm) sigma.push_back(sk.sigma[i]);
    auto remap = [&](const QVec& rho) {
      QVec v;
      for (int i : perm) v.push_back(rho[i]);
      return v;
    };
    std::vector<std::pair<std::vector<std::string>, QVec>> colors;
    for (const auto& c : sk.typea) {
      auto movers = c.moved_by;
      std::sort(movers.begin(), movers.end());
      colors.push_back({movers, remap(c.rho)});
    }
    std::sort(colors.begin(), colors.end(),
              [](const auto& x, const auto& y) {
                if (x.first != y.first) return x.first < y.first;
                return compare(x.second, y.second) < 0;
              });
    std::vector<QVec> gam;
    for (const auto& d : sk.gamma) gam.push_back(remap(d.rho));
    std::sort(gam.begin(), gam.end(), QVecLess{});
    return std::make_tuple(sigma, colors, gam);
  };
  const auto ca = canon(a);
  const auto cb = canon(b);
  auto veq = [](const std::vector<QVec>& x, const std::vector<QVec>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (compare(x[i], y[i]) != 0) return false;
    return true;
  };
  if (!veq(std::get<0>(ca), std::get<0>(cb))) return false;
  if (!veq(std::get<2>(ca), std::get<2>(cb))) return false;
  const auto& x = std::get<1>(ca);
  const auto& y = std::get<1>(cb);
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].first != y[i].first || compare(x[i].second, y[i].second) != 0)
      return false;
  return true;
}

}  // namespace sphcrit
