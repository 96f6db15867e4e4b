#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "logmono/random.hpp"
#include "logmono/selftest.hpp"

using namespace logmono;
using fixtures::mv;

namespace {

IntMatrix rows(std::initializer_list<std::initializer_list<Integer>> r) {
  IntMatrix m(static_cast<Eigen::Index>(r.size()), r.size() ? static_cast<Eigen::Index>(r.begin()->size()) : 0);
  Eigen::Index i = 0;
  for (const auto& row : r) {
    Eigen::Index j = 0;
    for (Integer x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

// Every kernel vector of the boundary map with entries in [-2, 2] must be an
// integer combination of the rows with coefficients in [-4, 4].
bool spans_small_kernel_vectors(const TropicalCurve& curve, const IntMatrix& c) {
  const IntMatrix d = boundary_matrix(curve);
  const Eigen::Index ne = d.cols();
  const Eigen::Index h = c.rows();
  std::vector<IntVector> combos;
  IntVector coeff = IntVector::Constant(h, -4);
  for (;;) {
    combos.push_back(c.transpose() * coeff);
    Eigen::Index k = 0;
    while (k < h && ++coeff(k) > 4) coeff(k++) = -4;
    if (k == h) break;
  }
  IntVector x = IntVector::Constant(ne, -2);
  for (;;) {
    if ((d * x).isZero() &&
        std::none_of(combos.begin(), combos.end(), [&](const IntVector& v) { return v == x; }))
      return false;
    Eigen::Index k = 0;
    while (k < ne && ++x(k) > 2) x(k++) = -2;
    if (k == ne) break;
  }
  return true;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(fixtures::single_vertex(0)).empty());
  CHECK(validate(TropicalCurve{1, {{"v0", 0}}, {}}).empty());

  SUBCASE("undeclared vertex is named") {
    TropicalCurve c{1, {{"v0", 0}}, {{"e0", "v0", "v9", mv({1})}}};
    const auto v = validate(c);
    REQUIRE(v.size() == 1);
    CHECK(to_string(v[0]).find("v9") != std::string::npos);
  }
  SUBCASE("zero length") {
    TropicalCurve c{2, {{"v0", 0}}, {{"e0", "v0", "v0", mv({0, 0})}}};
    const auto v = validate(c);
    REQUIRE(v.size() == 1);
    CHECK(v[0].message == "length is zero");
  }
  SUBCASE("every violation is reported") {
    TropicalCurve c{2,
                    {{"v0", -1}, {"v0", 0}},
                    {{"e0", "v0", "v0", mv({1})}, {"e0", "v0", "x", mv({-1, 2})}}};
    CHECK(validate(c).size() == 6);
  }
  SUBCASE("invalid curves are rejected by the operations") {
    TropicalCurve c{1, {{"v0", 0}}, {{"e0", "v0", "v9", mv({1})}}};
    CHECK_THROWS_AS(betti_number(c), InvalidCurve);
    CHECK_THROWS_AS(cycle_basis(c), InvalidCurve);
  }
}

TEST_CASE("betti number") {
  CHECK(betti_number(fixtures::loop()) == 1);
  CHECK(betti_number(fixtures::theta()) == 2);
  CHECK(betti_number(fixtures::path()) == 0);
  CHECK(betti_number(fixtures::dumbbell()) == 2);
  TropicalCurve tree{1, {{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}},
                     {{"x", "a", "b", mv({1})}, {"y", "c", "b", mv({1})}, {"z", "b", "d", mv({1})}}};
  CHECK(betti_number(tree) == 0);
  TropicalCurve two_loops_apart{1, {{"a", 0}, {"b", 0}}, {{"x", "a", "a", mv({1})}, {"y", "b", "b", mv({1})}}};
  CHECK(connected_components(two_loops_apart) == 2);
  CHECK(betti_number(two_loops_apart) == 2);
}

TEST_CASE("cycle basis examples") {
  SUBCASE("loop") {
    const auto b = cycle_basis(fixtures::loop());
    CHECK(b.matrix == rows({{1}}));
    CHECK(b.generators == std::vector<std::string>{"e0"});
  }
  SUBCASE("theta: brute-force kernel check") {
    const auto curve = fixtures::theta();
    const auto b = cycle_basis(curve);
    CHECK(b.matrix == rows({{-1, 1, 0}, {-1, 0, 1}}));
    CHECK((boundary_matrix(curve) * b.matrix.transpose()).isZero());
    CHECK(spans_small_kernel_vectors(curve, b.matrix));
  }
  SUBCASE("path has no cycles") {
    const auto b = cycle_basis(fixtures::path());
    CHECK(b.matrix.rows() == 0);
    CHECK(b.matrix.cols() == 1);
  }
  SUBCASE("dumbbell omits the bridge") {
    const auto b = cycle_basis(fixtures::dumbbell());
    CHECK(b.matrix == rows({{1, 0, 0}, {0, 1, 0}}));
  }
  SUBCASE("forest follows edge ids, not declaration order") {
    TropicalCurve c{1, {{"u", 0}, {"v", 0}}, {{"b", "u", "v", mv({1})}, {"a", "v", "u", mv({1})}}};
    const auto b = cycle_basis(c);
    CHECK(b.generators == std::vector<std::string>{"b"});
    CHECK(b.matrix == rows({{1, 1}}));
  }
  SUBCASE("triangle with reversed edge") {
    TropicalCurve c{1, {{"a", 0}, {"b", 0}, {"c", 0}},
                    {{"e0", "a", "b", mv({1})}, {"e1", "c", "b", mv({1})}, {"e2", "c", "a", mv({1})}}};
    const auto b = cycle_basis(c);
    CHECK(b.matrix == rows({{1, -1, 1}}));
    CHECK(spans_small_kernel_vectors(c, b.matrix));
  }
}

TEST_CASE("verify_cycle_basis rejects bad bases") {
  const auto curve = fixtures::theta();
  CHECK(verify_cycle_basis(curve, rows({{-1, 1, 0}, {-1, 0, 1}})).empty());
  CHECK_FALSE(verify_cycle_basis(curve, rows({{-2, 2, 0}, {-1, 0, 1}})).empty());  // index 2 sublattice
  CHECK_FALSE(verify_cycle_basis(curve, rows({{1, 1, 0}, {-1, 0, 1}})).empty());   // not a cycle
  CHECK_FALSE(verify_cycle_basis(curve, rows({{-1, 1, 0}})).empty());              // too few rows
}

TEST_CASE("random multigraphs: basis invariants, orientation reversal, determinism") {
  SeededRng rng(2024);
  RandomCurveOptions options;
  options.base_rank = 2;
  for (int trial = 0; trial < 200; ++trial) {
    auto curve = random_connected_curve(rng, options);
    REQUIRE(validate(curve).empty());
    REQUIRE(connected_components(curve) == 1);
    const auto basis = cycle_basis(curve);
    REQUIRE(verify_cycle_basis(curve, basis.matrix).empty());
    REQUIRE(basis.rank() == betti_number(curve));
    REQUIRE(cycle_basis(curve).matrix == basis.matrix);
    if (curve.edges.empty()) continue;

    const auto e = static_cast<std::size_t>(rng.uniform(0, static_cast<Integer>(curve.edges.size()) - 1));
    std::swap(curve.edges[e].src, curve.edges[e].dst);
    IntMatrix flipped = basis.matrix;
    flipped.col(static_cast<Eigen::Index>(e)) *= -1;
    REQUIRE(verify_cycle_basis(curve, flipped).empty());
    REQUIRE(same_saturated_row_lattice(flipped, cycle_basis(curve).matrix));
  }
}
