/** @file
 *  @brief Regular subdivisions via face selection on the lifted cone.
 */
#include "sphcrit/subdivision.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sphcrit/cone.hpp"
#include "sphcrit/lp.hpp"

namespace sphcrit {

std::vector<std::vector<std::string>> Subdivision::maximal_cells() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : cells) {
    bool maximal = true;
    for (const auto& d : cells) {
      if (&c == &d || d.size() <= c.size()) continue;
      if (std::includes(d.begin(), d.end(), c.begin(), c.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

Subdivision regular_subdivision(const VectorConfiguration& config,
                                SubdivisionSide side) {
  const int d = config.dim;
  std::set<std::string> labels;
  std::vector<QVec> lifted;
  for (const auto& it : config.items) {
    if (static_cast<int>(it.v.size()) != d)
      throw std::invalid_argument("regular_subdivision: vector size mismatch");
    if (is_zero(it.v))
      throw std::invalid_argument("regular_subdivision: zero vector");
    if (!labels.insert(it.label).second)
      throw std::invalid_argument("regular_subdivision: duplicate label " +
                                  it.label);
    QVec l = it.v;
    l.push_back(it.height);
    lifted.push_back(std::move(l));
  }

  // The side's sign for the last coordinate of a selecting functional.
  const Rat sign_last = (side == SubdivisionSide::Lower) ? Rat(1) : Rat(-1);
  QVec last_axis = qvec_zero(d + 1);
  last_axis[d] = sign_last;

  // Precondition: some functional is nonnegative on the whole lifted
  // configuration with the side's sign in the last coordinate.
  {
    std::vector<LinRow> ge;
    for (const auto& l : lifted) ge.push_back({l, Rat(0), Rel::Ge});
    if (!lp_feasible_strict(d + 1, ge, {{last_axis, Rat(0)}}))
      throw std::invalid_argument(
          "regular_subdivision: no selecting functional for requested side");
  }

  // Candidate cells are the faces of the lifted cone; a face is a cell iff a
  // functional vanishes exactly on it, is positive elsewhere, and has the
  // side's sign in the last coordinate.
  std::vector<std::vector<int>> candidates;
  if (lifted.empty()) {
    candidates.push_back({});
  } else {
    candidates = face_generator_sets(Cone(d + 1, lifted));
  }

  Subdivision out;
  out.side = side;
  for (const auto& idxs : candidates) {
    std::vector<char> on_face(lifted.size(), 0);
    for (int i : idxs) on_face[i] = 1;
    std::vector<LinRow> rows;
    std::vector<std::pair<QVec, Rat>> strict;
    for (std::size_t i = 0; i < lifted.size(); ++i) {
      if (on_face[i])
        rows.push_back({lifted[i], Rat(0), Rel::Eq});
      else
        strict.push_back({lifted[i], Rat(0)});
    }
    strict.push_back({last_axis, Rat(0)});
    if (!lp_feasible_strict(d + 1, rows, strict)) continue;
    std::vector<std::string> cell;
    for (int i : idxs) cell.push_back(config.items[i].label);
    std::sort(cell.begin(), cell.end());
    out.cells.push_back(std::move(cell));
  }
  std::sort(out.cells.begin(), out.cells.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  out.cells.erase(std::unique(out.cells.begin(), out.cells.end()),
                  out.cells.end());
  return out;
}

}  // namespace sphcrit
