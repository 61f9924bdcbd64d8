/** @file
 *  @brief Exact rational scalars and dense rational vectors.
 *
 *  Every quantity in this library is an exact rational number; no floating
 *  point is used anywhere.  Vectors are dense `std::vector<Rat>` with a fixed
 *  ambient dimension agreed upon by the caller.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphcrit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using QVec = std::vector<Rat>;

// ---- scalar helpers --------------------------------------------------------

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sgn(const Rat& q) { return q.sign(); }

/** Canonical string form: "p" for integers, "p/q" otherwise (q > 1). */
inline std::string rat_to_string(const Rat& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

/** Parse "p" or "p/q" (optional leading '-'); throws std::invalid_argument. */
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) throw std::invalid_argument("bad rational literal: " + s);
      return Rat(Int(s));
    }
    const std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (!is_int(ns) || !is_int(ds))
      throw std::invalid_argument("bad rational literal: " + s);
    Int d(ds);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(Int(ns), d);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

// ---- vector helpers --------------------------------------------------------

inline QVec qvec_zero(std::size_t n) { return QVec(n, Rat(0)); }

inline bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: size mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: size mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec scale(const Rat& c, const QVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

inline QVec negate(const QVec& v) { return scale(Rat(-1), v); }

inline bool is_integral(const QVec& v) {
  for (const auto& x : v)
    if (den(x) != 1) return false;
  return true;
}

/** Lexicographic comparison; total order used for canonical sorting. */
inline int compare(const QVec& a, const QVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

struct QVecLess {
  bool operator()(const QVec& a, const QVec& b) const { return compare(a, b) < 0; }
};

/** The unique integer vector with coprime entries spanning the ray through v.
 *  Requires v != 0. */
inline QVec primitive(const QVec& v) {
  if (is_zero(v)) throw std::invalid_argument("primitive: zero vector");
  Int l(1);
  for (const auto& x : v) l = boost::multiprecision::lcm(l, den(x));
  Int g(0);
  QVec r(v.size());
  std::vector<Int> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = num(v[i]) * (l / den(v[i]));
    g = boost::multiprecision::gcd(g, ints[i]);
  }
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(ints[i] / g);
  return r;
}

inline std::string qvec_to_string(const QVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_to_string(v[i]);
  }
  return s + ")";
}

}  // namespace sphcrit
