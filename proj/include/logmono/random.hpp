#pragma once

// Seeded instance generators shared by the self-test and the test suites.
// Only the raw mt19937_64 stream is used, so sequences are identical across
// standard libraries.

#include "logmono/graph_core.hpp"

#include <random>

namespace logmono {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  Integer uniform(Integer lo, Integer hi);
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

struct RandomCurveOptions {
  Integer max_vertices = 8;
  Integer max_edges = 16;
  Integer base_rank = 1;
  Integer min_length = 1;
  Integer max_length = 5;
  Integer max_genus = 0;
};

/// Connected multigraph: a random spanning tree plus extra edges (loops and
/// parallel edges allowed), random orientations and a shuffled id order.
TropicalCurve random_connected_curve(SeededRng& rng, const RandomCurveOptions& options = {});

/// Product of random elementary operations; determinant +-1.
IntMatrix random_unimodular(SeededRng& rng, Eigen::Index n, int steps = 0);

}  // namespace logmono
