/** @file
 *  @brief Cartan catalogue, reflection closure, sub-systems, direct sums.
 */
#include "sphcrit/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sphcrit {

namespace {

struct Component {
  char letter;
  int rank;
};

std::vector<Component> parse_components(const std::string& name) {
  std::vector<Component> out;
  std::size_t i = 0;
  while (i < name.size()) {
    const char letter = name[i];
    if (letter < 'A' || (letter > 'G' && letter != 'T'))
      throw std::invalid_argument("root system name: bad type letter in " + name);
    ++i;
    std::size_t j = i;
    while (j < name.size() && name[j] >= '0' && name[j] <= '9') ++j;
    if (j == i)
      throw std::invalid_argument("root system name: missing rank in " + name);
    const int rank = std::stoi(name.substr(i, j - i));
    out.push_back({letter, rank});
    i = j;
    if (i < name.size()) {
      if (name[i] != 'x')
        throw std::invalid_argument("root system name: expected 'x' in " + name);
      ++i;
      if (i == name.size())
        throw std::invalid_argument("root system name: trailing 'x' in " + name);
    }
  }
  if (out.empty())
    throw std::invalid_argument("root system name: empty");
  return out;
}

/** Cartan block of one simple type; entry [i][j] = pairing of coroot i with
 *  root j. */
std::vector<std::vector<int>> cartan_block(char letter, int n) {
  auto path = [](int m) {
    std::vector<std::vector<int>> a(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) a[i][i] = 2;
    for (int i = 0; i + 1 < m; ++i) a[i][i + 1] = a[i + 1][i] = -1;
    return a;
  };
  switch (letter) {
    case 'A':
      if (n < 1) throw std::invalid_argument("A rank must be >= 1");
      return path(n);
    case 'B': {
      if (n < 2) throw std::invalid_argument("B rank must be >= 2");
      auto a = path(n);
      a[n - 1][n - 2] = -2;  // short last root
      return a;
    }
    case 'C': {
      if (n < 2) throw std::invalid_argument("C rank must be >= 2");
      auto a = path(n);
      a[n - 2][n - 1] = -2;  // long last root
      return a;
    }
    case 'D': {
      if (n < 3) throw std::invalid_argument("D rank must be >= 3");
      auto a = path(n - 1);
      a.resize(n);
      for (auto& row : a) row.resize(n, 0);
      a[n - 1][n - 1] = 2;
      a[n - 1][n - 3] = a[n - 3][n - 1] = -1;  // branch at the antepenultimate node
      a[n - 1][n - 2] = a[n - 2][n - 1] = 0;
      return a;
    }
    case 'E': {
      if (n < 6 || n > 8) throw std::invalid_argument("E rank must be 6, 7, or 8");
      std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      auto link = [&](int p, int q) { a[p - 1][q - 1] = a[q - 1][p - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      if (n >= 7) link(6, 7);
      if (n >= 8) link(7, 8);
      link(2, 4);
      return a;
    }
    case 'F': {
      if (n != 4) throw std::invalid_argument("F rank must be 4");
      auto a = path(4);
      a[2][1] = -2;  // middle double edge; third root short
      return a;
    }
    case 'G': {
      if (n != 2) throw std::invalid_argument("G rank must be 2");
      return {{2, -3}, {-1, 2}};
    }
    default:
      throw std::invalid_argument("unknown simple type");
  }
}

}  // namespace

RootSystem RootSystem::parse(const std::string& name) {
  RootSystem r;
  r.name_ = name;
  int next_label = 1;
  for (const Component& c : parse_components(name)) {
    if (c.letter == 'T') {
      if (c.rank < 0) throw std::invalid_argument("torus rank must be >= 0");
      r.torus_rank_ += c.rank;
      continue;
    }
    const auto block = cartan_block(c.letter, c.rank);
    const int offset = r.simple_count();
    for (int i = 0; i < c.rank; ++i)
      r.labels_.push_back("a" + std::to_string(next_label++));
    for (auto& row : r.cartan_) row.resize(offset + c.rank, 0);
    for (int i = 0; i < c.rank; ++i) {
      std::vector<int> row(offset + c.rank, 0);
      for (int j = 0; j < c.rank; ++j) row[offset + j] = block[i][j];
      r.cartan_.push_back(std::move(row));
    }
  }
  return r;
}

RootSystem RootSystem::from_cartan(std::vector<std::string> labels,
                                   std::vector<std::vector<int>> cartan,
                                   int torus_rank) {
  const std::size_t n = labels.size();
  if (cartan.size() != n)
    throw std::invalid_argument("from_cartan: size mismatch");
  for (const auto& row : cartan)
    if (row.size() != n) throw std::invalid_argument("from_cartan: ragged matrix");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != n) throw std::invalid_argument("from_cartan: duplicate labels");
  RootSystem r;
  r.labels_ = std::move(labels);
  r.cartan_ = std::move(cartan);
  r.torus_rank_ = torus_rank;
  r.name_ = classify_name(r.cartan_, torus_rank);
  return r;
}

int RootSystem::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

Rat RootSystem::coroot_pair(const std::string& label, const QVec& weight) const {
  const int i = label_index(label);
  if (i < 0) throw std::invalid_argument("coroot_pair: unknown label " + label);
  if (static_cast<int>(weight.size()) != simple_count() &&
      static_cast<int>(weight.size()) != char_dim())
    throw std::invalid_argument("coroot_pair: weight size mismatch");
  Rat s(0);
  for (int j = 0; j < simple_count(); ++j) s += Rat(cartan_[i][j]) * weight[j];
  return s;
}

std::vector<QVec> RootSystem::positive_roots(
    const std::vector<std::string>& subset) const {
  std::vector<int> idx;
  for (const auto& l : subset) {
    const int i = label_index(l);
    if (i < 0) throw std::invalid_argument("positive_roots: unknown label " + l);
    idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  const int n = simple_count();
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> work;
  for (int i : idx) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    if (roots.insert(e).second) work.push_back(e);
  }
  std::size_t guard = 0;
  while (!work.empty()) {
    if (++guard > 2000000)
      throw std::logic_error("positive_roots: reflection closure does not terminate");
    std::vector<int> beta = work.back();
    work.pop_back();
    for (int j : idx) {
      int pair = 0;
      for (int k = 0; k < n; ++k) pair += cartan_[j][k] * beta[k];
      std::vector<int> refl = beta;
      refl[j] -= pair;
      if (roots.insert(refl).second) work.push_back(refl);
    }
  }
  std::vector<QVec> out;
  for (const auto& r : roots) {
    bool nonneg = true, nonzero = false;
    for (int x : r) {
      if (x < 0) nonneg = false;
      if (x != 0) nonzero = true;
    }
    if (!nonneg || !nonzero) continue;
    QVec q(n);
    for (int k = 0; k < n; ++k) q[k] = r[k];
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), QVecLess{});
  return out;
}

std::vector<QVec> RootSystem::positive_roots() const {
  return positive_roots(labels_);
}

QVec RootSystem::kappa(const std::vector<std::string>& sp) const {
  QVec k = qvec_zero(simple_count());
  for (const auto& r : positive_roots()) k = add(k, r);
  for (const auto& r : positive_roots(sp)) k = sub(k, r);
  return k;
}

RootSystem RootSystem::sub_system(const std::vector<std::string>& subset) const {
  std::vector<int> idx;
  for (const auto& l : subset) {
    const int i = label_index(l);
    if (i < 0) throw std::invalid_argument("sub_system: unknown label " + l);
    idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<std::string> labels;
  std::vector<std::vector<int>> cartan;
  for (int i : idx) {
    labels.push_back(labels_[i]);
    std::vector<int> row;
    for (int j : idx) row.push_back(cartan_[i][j]);
    cartan.push_back(std::move(row));
  }
  return from_cartan(std::move(labels), std::move(cartan), 0);
}

RootSystem RootSystem::direct_sum(const RootSystem& r1, const RootSystem& r2) {
  RootSystem r;
  r.labels_ = r1.labels_;
  std::set<std::string> seen(r.labels_.begin(), r.labels_.end());
  for (const auto& l : r2.labels_) {
    std::string cand = l;
    while (seen.count(cand)) cand = "2:" + cand;
    seen.insert(cand);
    r.labels_.push_back(cand);
  }
  const int n1 = r1.simple_count(), n2 = r2.simple_count();
  r.cartan_.assign(n1 + n2, std::vector<int>(n1 + n2, 0));
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) r.cartan_[i][j] = r1.cartan_[i][j];
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j) r.cartan_[n1 + i][n1 + j] = r2.cartan_[i][j];
  r.torus_rank_ = r1.torus_rank_ + r2.torus_rank_;
  r.name_ = classify_name(r.cartan_, r.torus_rank_);
  return r;
}

// ---- component classification (for display names) --------------------------

std::string RootSystem::classify_name(const std::vector<std::vector<int>>& a,
                                      int torus_rank) {
  const int n = static_cast<int>(a.size());
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (v != u && a[u][v] != 0 && comp[v] < 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  std::vector<std::pair<char, int>> parts;
  for (int cidx = 0; cidx < ncomp; ++cidx) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (comp[i] == cidx) nodes.push_back(i);
    const int m = static_cast<int>(nodes.size());
    auto deg = [&](int u) {
      int d = 0;
      for (int v : nodes)
        if (v != u && a[u][v] != 0) ++d;
      return d;
    };
    char letter = 0;
    if (m == 1) {
      letter = 'A';
    } else {
      int triple = 0, dbl = 0;
      int dbl_i = -1, dbl_j = -1;  // a[i][j] == -2: root i is short
      for (int u : nodes)
        for (int v : nodes) {
          if (u == v) continue;
          if (a[u][v] == -3) ++triple;
          if (a[u][v] == -2) {
            ++dbl;
            dbl_i = u;
            dbl_j = v;
          }
        }
      int branch = -1;
      for (int u : nodes)
        if (deg(u) == 3) branch = u;
      if (triple > 0) {
        if (m != 2) throw std::logic_error("classify_name: bad triple edge");
        letter = 'G';
      } else if (dbl == 1) {
        if (m == 2) {
          letter = (dbl_i == nodes[1]) ? 'B' : 'C';
        } else if (deg(dbl_i) == 1) {
          letter = 'B';  // short root at the end of the path
        } else if (deg(dbl_j) == 1) {
          letter = 'C';  // long root at the end of the path
        } else {
          if (m != 4) throw std::logic_error("classify_name: bad interior double edge");
          letter = 'F';
        }
      } else if (branch >= 0) {
        // Arm lengths from the branch node.
        std::vector<int> arms;
        for (int v : nodes) {
          if (v == branch || a[branch][v] == 0) continue;
          int len = 1, prev = branch, cur = v;
          for (;;) {
            int nxt = -1;
            for (int w : nodes)
              if (w != prev && w != cur && a[cur][w] != 0) nxt = w;
            if (nxt < 0) break;
            prev = cur;
            cur = nxt;
            ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms.size() != 3) throw std::logic_error("classify_name: bad branch");
        if (arms[0] == 1 && arms[1] == 1)
          letter = 'D';
        else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
          letter = 'E';
        else
          throw std::logic_error("classify_name: unrecognized branch diagram");
      } else {
        letter = 'A';
      }
    }
    parts.push_back({letter, m});
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& [letter, rank] : parts) {
    if (!out.empty()) out += "x";
    out += letter + std::to_string(rank);
  }
  if (torus_rank > 0) {
    if (!out.empty()) out += "x";
    out += "T" + std::to_string(torus_rank);
  }
  if (out.empty()) out = "T0";
  return out;
}

}  // namespace sphcrit
