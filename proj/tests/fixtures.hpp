#pragma once

#include "logmono/graph_core.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace fixtures {

inline logmono::MonoidVector mv(std::initializer_list<logmono::Integer> c) {
  logmono::IntVector v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (auto x : c) v(i++) = x;
  return logmono::MonoidVector(std::move(v));
}

inline logmono::TropicalCurve loop(logmono::Integer length = 1) {
  return {1, {{"v0", 0}}, {{"e0", "v0", "v0", mv({length})}}};
}

/// Three parallel edges u -> v with lengths t1, t2, t3.
inline logmono::TropicalCurve theta() {
  return {3,
          {{"u", 0}, {"v", 0}},
          {{"e0", "u", "v", mv({1, 0, 0})}, {"e1", "u", "v", mv({0, 1, 0})}, {"e2", "u", "v", mv({0, 0, 1})}}};
}

inline logmono::TropicalCurve theta_unit() {
  return {1, {{"u", 0}, {"v", 0}}, {{"e0", "u", "v", mv({1})}, {"e1", "u", "v", mv({1})}, {"e2", "u", "v", mv({1})}}};
}

/// Loops f1, f2 of lengths p, q joined by a bridge m.
inline logmono::TropicalCurve dumbbell() {
  return {3,
          {{"a", 0}, {"b", 0}},
          {{"f1", "a", "a", mv({1, 0, 0})}, {"f2", "b", "b", mv({0, 1, 0})}, {"m", "a", "b", mv({0, 0, 1})}}};
}

inline logmono::TropicalCurve path() { return {1, {{"a", 0}, {"b", 0}}, {{"e0", "a", "b", mv({2})}}}; }

inline logmono::TropicalCurve single_vertex(logmono::Integer genus) { return {1, {{"v", genus}}, {}}; }

}  // namespace fixtures
