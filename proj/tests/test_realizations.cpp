#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "logmono/pairing.hpp"
#include "logmono/random.hpp"
#include "logmono/realizations.hpp"

#include <numeric>

using namespace logmono;

namespace {

IntMatrix sym(Eigen::Index n, std::initializer_list<Integer> values) {
  IntMatrix m(n, n);
  auto it = values.begin();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}

}  // namespace

TEST_CASE("weight, torsion and Hodge dimensions") {
  CHECK(weight_dims(fixtures::loop()) == WeightDims{1, 0, 2});
  CHECK(weight_dims(fixtures::single_vertex(2)) == WeightDims{0, 2, 4});
  CHECK(weight_dims(fixtures::theta()) == WeightDims{2, 0, 4});

  CHECK(torsion_dims(fixtures::loop(), 5) == TorsionRanks{5, 1, 0, 1});
  CHECK(torsion_dims(fixtures::single_vertex(2), 2) == TorsionRanks{2, 0, 4, 0});
  CHECK(torsion_dims(fixtures::theta(), 3) == TorsionRanks{3, 2, 0, 2});
  CHECK_THROWS_AS(torsion_dims(fixtures::loop(), 1), std::invalid_argument);

  HodgeTable loop_table;
  loop_table.rows = {{{1, 0}, {0, 0}, {1, 1}}};
  CHECK(hodge_table(fixtures::loop()) == loop_table);
  CHECK(hodge_table(fixtures::loop()).f1_total() == 1);
  HodgeTable abelian;
  abelian.rows = {{{0, 0}, {6, 3}, {0, 0}}};
  CHECK(hodge_table(fixtures::single_vertex(3)) == abelian);
  HodgeTable theta;
  theta.rows = {{{2, 0}, {0, 0}, {2, 2}}};
  CHECK(hodge_table(fixtures::theta()) == theta);
}

TEST_CASE("Picard-Lefschetz examples") {
  SUBCASE("Tate curve") {
    const auto n = picard_lefschetz(sym(1, {3}), 0, 1);
    CHECK(n.matrix() == sym(2, {1, 3, 0, 1}));
    IntVector alpha(2);
    alpha << 0, 1;
    IntVector expected(2);
    expected << 3, 1;
    CHECK(n.apply(alpha) == expected);
    CHECK(n.order() == 0);
  }
  SUBCASE("trivial loop") {
    const auto n = picard_lefschetz(sym(2, {2, 1, 1, 2}), 1, 0);
    CHECK(n.matrix() == IntMatrix::Identity(6, 6));
    CHECK(n.order() == 1);
  }
  SUBCASE("theta mod 3") {
    const IntMatrix b = sym(2, {2, 1, 1, 2});
    const auto n = picard_lefschetz(b, 0, 1, 3);
    CHECK(n.variation_block() == b);
    CHECK(n.check_invariants(b).empty());
    CHECK(n.order() == 3);
  }
  SUBCASE("layout with an abelian part") {
    const auto n = picard_lefschetz(sym(1, {5}), 1, 2);
    IntMatrix expected = IntMatrix::Identity(4, 4);
    expected(0, 3) = 10;
    CHECK(n.matrix() == expected);
  }
  SUBCASE("negative winding mod n is reduced") {
    const auto n = picard_lefschetz(sym(1, {1}), 0, -1, 5);
    CHECK(n.winding() == 4);
    CHECK(n.matrix() == sym(2, {1, 4, 0, 1}));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(picard_lefschetz(sym(2, {1, 2, 3, 4}), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(picard_lefschetz(sym(1, {1}), 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(picard_lefschetz(sym(1, {1}), -1, 1), std::invalid_argument);
  }
}

TEST_CASE("monodromy weight check") {
  CHECK(monodromy_weight_check(sym(2, {2, 1, 1, 2})));
  CHECK_FALSE(monodromy_weight_check(sym(1, {0})));
  CHECK(monodromy_weight_check(IntMatrix(0, 0)));
}

TEST_CASE("operator properties on random graphs") {
  SeededRng rng(31);
  RandomCurveOptions options;
  options.max_genus = 2;
  for (int trial = 0; trial < 100; ++trial) {
    const auto curve = random_connected_curve(rng, options);
    const IntMatrix b = specialize(pairing_matrix(curve, cycle_basis(curve)), std::vector<Integer>{1});
    const Integer a = curve.abelian_rank();
    const Integer w1 = rng.uniform(-4, 4), w2 = rng.uniform(-4, 4);

    const auto n = picard_lefschetz(b, a, w1);
    REQUIRE(n.check_invariants(b).empty());
    const IntMatrix id = IntMatrix::Identity(n.size(), n.size());
    REQUIRE(((n.matrix() - id) * (n.matrix() - id)).isZero());
    REQUIRE(picard_lefschetz(b, a, w1 + w2) == n * picard_lefschetz(b, a, w2));
    REQUIRE(integer_rank(picard_lefschetz(b, a, 1).matrix() - id) == integer_rank(b));
    REQUIRE(monodromy_weight_check(b));

    // W_0 (first h + 2a coordinates) is fixed pointwise
    for (Eigen::Index j = 0; j < b.rows() + 2 * a; ++j) {
      IntVector e = IntVector::Zero(n.size());
      e(j) = 1;
      REQUIRE(n.apply(e) == e);
    }

    const Integer det = determinant(b);
    for (Integer m = 2; m <= 7; ++m) {
      const auto reduced = picard_lefschetz(reduce_mod(b, m), a, w1, m);
      REQUIRE(n.reduced(m) == reduced);
      REQUIRE(reduced.check_invariants(b).empty());
      if (b.rows() > 0 && std::gcd(det, m) == 1 && std::gcd(w1, m) == 1) REQUIRE(reduced.order() == m);
    }
  }
}

TEST_CASE("composition requires matching lattices") {
  const auto x = picard_lefschetz(sym(1, {1}), 0, 1);
  const auto y = picard_lefschetz(sym(1, {1}), 1, 1);
  CHECK_THROWS_AS(x * y, std::invalid_argument);
  CHECK_THROWS_AS(x * picard_lefschetz(sym(1, {1}), 0, 1, 3), std::invalid_argument);
}
