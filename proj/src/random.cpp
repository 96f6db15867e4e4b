#include "logmono/random.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace logmono {

Integer SeededRng::uniform(Integer lo, Integer hi) {
  if (hi < lo) throw std::invalid_argument("uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<Integer>(engine_());
  // rejection sampling keeps the draw unbiased
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<Integer>(x % span);
}

TropicalCurve random_connected_curve(SeededRng& rng, const RandomCurveOptions& options) {
  const Integer nv = rng.uniform(1, options.max_vertices);
  const Integer ne = rng.uniform(nv - 1, std::max(nv - 1, options.max_edges));

  TropicalCurve curve;
  curve.base_rank = options.base_rank;
  for (Integer v = 0; v < nv; ++v) curve.vertices.push_back({"v" + std::to_string(v), rng.uniform(0, options.max_genus)});

  std::vector<Integer> ids(static_cast<std::size_t>(ne));
  std::iota(ids.begin(), ids.end(), 0);
  for (std::size_t i = ids.size(); i > 1; --i)
    std::swap(ids[i - 1], ids[static_cast<std::size_t>(rng.uniform(0, static_cast<Integer>(i) - 1))]);

  auto length = [&] {
    IntVector c(options.base_rank);
    if (options.base_rank == 1) {
      c(0) = rng.uniform(options.min_length, options.max_length);
      return MonoidVector(std::move(c));
    }
    for (Integer k = 0; k < options.base_rank; ++k) c(k) = rng.uniform(0, options.max_length);
    if (options.base_rank > 0 && c.isZero())
      c(rng.uniform(0, options.base_rank - 1)) = rng.uniform(std::max<Integer>(options.min_length, 1), options.max_length);
    return MonoidVector(std::move(c));
  };

  for (Integer e = 0; e < ne; ++e) {
    Integer a, b;
    if (e < nv - 1) {
      a = e + 1;
      b = rng.uniform(0, e);
    } else {
      a = rng.uniform(0, nv - 1);
      b = rng.uniform(0, nv - 1);
    }
    if (rng.coin()) std::swap(a, b);
    char id[16];
    std::snprintf(id, sizeof id, "e%02lld", static_cast<long long>(ids[static_cast<std::size_t>(e)]));
    curve.edges.push_back({id, "v" + std::to_string(a), "v" + std::to_string(b), length()});
  }
  return curve;
}

IntMatrix random_unimodular(SeededRng& rng, Eigen::Index n, int steps) {
  IntMatrix u = IntMatrix::Identity(n, n);
  if (n == 0) return u;
  if (steps <= 0) steps = static_cast<int>(2 * n + 2);
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<Eigen::Index>(rng.uniform(0, n - 1));
    const auto j = static_cast<Eigen::Index>(rng.uniform(0, n - 1));
    switch (rng.uniform(0, 2)) {
      case 0:
        if (i != j) u.row(i) += rng.uniform(-2, 2) * u.row(j);
        break;
      case 1:
        u.row(i).swap(u.row(j));
        break;
      default:
        u.row(i) *= -1;
        break;
    }
  }
  return u;
}

}  // namespace logmono
