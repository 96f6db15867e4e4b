#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logmono/extpan.hpp"
#include "logmono/random.hpp"

#include <functional>

using namespace logmono::extpan;

namespace {

GroupPtr z(std::vector<int> factors) { return make_group(std::move(factors)); }

ExtClass nonsplit_2_2() { return ExtClass(carry_cocycle(z({2}), z({2}), std::vector<int>{1})); }

// Literal search over every h : Q -> A with h(0) = 0, |A|^(|Q|-1) candidates.
bool brute_force_coboundary(const Cocycle& d) {
  const int n = d.source().order();
  const int a = d.target().order();
  std::vector<int> h(static_cast<std::size_t>(n), 0);
  for (;;) {
    if (coboundary(d.source_ptr(), d.target_ptr(), h) == d) return true;
    int k = 1;
    while (k < n && ++h[static_cast<std::size_t>(k)] == a) h[static_cast<std::size_t>(k++)] = 0;
    if (k >= n) return false;
  }
}

// Every normalized symmetric table on Q with values in A that is a cocycle,
// optionally restricted by `keep`. Returns nothing when over `limit` tables.
std::optional<std::vector<Cocycle>> all_cocycles(const GroupPtr& q, const GroupPtr& a, long limit,
                                                 const std::function<bool(const std::vector<int>&)>& keep = {}) {
  const int n = q->order();
  std::vector<std::pair<int, int>> cells;
  for (int x = 1; x < n; ++x)
    for (int y = x; y < n; ++y) cells.emplace_back(x, y);
  long total = 1;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if ((total *= a->order()) > limit) return std::nullopt;
  std::vector<Cocycle> out;
  std::vector<int> values(cells.size(), 0);
  for (long index = 0; index < total; ++index) {
    long rest = index;
    for (auto& v : values) {
      v = static_cast<int>(rest % a->order());
      rest /= a->order();
    }
    std::vector<int> table(static_cast<std::size_t>(n * n), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto [x, y] = cells[i];
      table[static_cast<std::size_t>(x * n + y)] = table[static_cast<std::size_t>(y * n + x)] = values[i];
    }
    if (!cocycle_violations(*q, *a, table).empty()) continue;
    if (keep && !keep(table)) continue;
    out.emplace_back(q, a, std::move(table));
  }
  return out;
}

// Class count by partitioning with the brute-force coboundary search.
std::size_t count_classes(const std::vector<Cocycle>& cocycles) {
  std::vector<const Cocycle*> reps;
  for (const auto& c : cocycles)
    if (std::none_of(reps.begin(), reps.end(), [&](const Cocycle* r) { return brute_force_coboundary(c - *r); }))
      reps.push_back(&c);
  return reps.size();
}

const std::vector<std::vector<int>> kSmall = {{}, {2}, {3}, {4}, {2, 2}};

}  // namespace

TEST_CASE("abelian groups") {
  CHECK(AbelianGroup().order() == 1);
  CHECK(AbelianGroup::parse("trivial").order() == 1);
  CHECK(AbelianGroup::parse("").order() == 1);
  CHECK(AbelianGroup::parse("2,4") == AbelianGroup({2, 4}));
  CHECK(AbelianGroup::parse("2,4").describe() == "Z/2+Z/4");
  CHECK_THROWS_AS(AbelianGroup::parse("1"), std::invalid_argument);
  CHECK_THROWS_AS(AbelianGroup::parse("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(AbelianGroup({64, 128}), BudgetExceeded);

  const AbelianGroup g({2, 4});
  CHECK(g.order() == 8);
  for (int x = 0; x < g.order(); ++x) {
    CHECK(g.element(g.coords(x)) == x);
    CHECK(g.add(x, g.neg(x)) == 0);
    CHECK(g.scale(4, x) == 0);
  }
  CHECK(g.scale(-1, 3) == g.neg(3));

  CHECK_THROWS_AS(AbelianGroup::from_table(2, {0, 1, 1, 1}), std::invalid_argument);
  const auto z2 = AbelianGroup::from_table(2, {0, 1, 1, 0});
  CHECK_FALSE(z2.presented());
  CHECK(z2.add(1, 1) == 0);
}

TEST_CASE("homomorphisms") {
  const AbelianGroup z4({4}), z2({2}), k({2, 2});
  CHECK(homomorphisms(z4, z2).size() == 2);
  CHECK(homomorphisms(z2, z4).size() == 2);
  CHECK(homomorphisms(k, z4).size() == 4);
  CHECK(homomorphisms(AbelianGroup({3}), z4).size() == 1);
  for (const auto& h : homomorphisms(k, AbelianGroup({2, 4}))) CHECK(is_homomorphism(k, AbelianGroup({2, 4}), h));
  CHECK_FALSE(is_homomorphism(z2, z4, std::vector<int>{0, 1}));
}

TEST_CASE("cocycle validation") {
  const auto q = z({3}), a = z({3});
  CHECK_THROWS_AS(Cocycle(q, a, std::vector<int>(9, 1)), std::invalid_argument);  // not normalized
  std::vector<int> t(9, 0);
  t[1 * 3 + 2] = 1;  // asymmetric
  CHECK_THROWS_AS(Cocycle(q, a, t), std::invalid_argument);
  t[2 * 3 + 1] = 1;
  t[1 * 3 + 1] = 0;  // symmetric but fails the cocycle identity
  CHECK_FALSE(cocycle_violations(*q, *a, t).empty());
  CHECK(Cocycle::zero(q, a).is_zero());
  CHECK(cocycle_violations(*q, *a, carry_cocycle(q, a, std::vector<int>{2}).table()).empty());
}

TEST_CASE("coboundary search agrees with the brute-force oracle and the class invariant") {
  logmono::SeededRng rng(17);
  for (const auto& qf : kSmall)
    for (const auto& af : kSmall) {
      const auto q = z(qf), a = z(af);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> coeff;
        for (std::size_t i = 0; i < qf.size(); ++i) coeff.push_back(static_cast<int>(rng.uniform(0, a->order() - 1)));
        std::vector<int> h(static_cast<std::size_t>(q->order()), 0);
        for (std::size_t i = 1; i < h.size(); ++i) h[i] = static_cast<int>(rng.uniform(0, a->order() - 1));
        const Cocycle d = carry_cocycle(q, a, coeff) + coboundary(q, a, h);

        const bool brute = brute_force_coboundary(d);
        const auto witness = coboundary_witness(d);
        REQUIRE(witness.has_value() == brute);
        if (witness) REQUIRE(coboundary(q, a, *witness) == d);
        const auto zero = class_invariant(Cocycle::zero(q, a));
        REQUIRE((class_invariant(d) == zero) == brute);
        REQUIRE(ExtClass(d) == ExtClass(carry_cocycle(q, a, coeff)));
      }
    }
}

TEST_CASE("Ext1 class counts against exhaustive cocycle enumeration") {
  int checked = 0;
  for (const auto& qf : kSmall)
    for (const auto& af : kSmall) {
      const auto q = z(qf), a = z(af);
      const auto cocycles = all_cocycles(q, a, 5000);
      if (!cocycles) continue;
      ++checked;
      const auto classes = count_classes(*cocycles);
      CAPTURE(q->describe());
      CAPTURE(a->describe());
      REQUIRE(static_cast<std::int64_t>(classes) == ext1_order(*q, *a));
      REQUIRE(ext1_representatives(q, a).size() == classes);
    }
  CHECK(checked >= 20);
}

TEST_CASE("Ext1 examples") {
  CHECK(ext1_order(AbelianGroup({2}), AbelianGroup({2})) == 2);
  CHECK(ext1_order(AbelianGroup({2}), AbelianGroup({3})) == 1);
  CHECK(ext1_order(AbelianGroup({4}), AbelianGroup({2})) == 2);
  CHECK(ext1_order(AbelianGroup({6}), AbelianGroup({4})) == 2);
  CHECK(ext1_order(AbelianGroup({2, 2}), AbelianGroup({2, 4})) == 16);
  CHECK(ext1_order(AbelianGroup(), AbelianGroup({5})) == 1);

  const auto classes = ext1_classes(z({2}), z({2}));
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].is_split());
  CHECK_FALSE(classes[1].is_split());
  CHECK(classes[1] == nonsplit_2_2());

  CHECK_THROWS_AS(ext1_classes(z({13}), z({2})), BudgetExceeded);
  CHECK_THROWS_AS(ext1_classes(z({2}), z({2, 7})), BudgetExceeded);
}

TEST_CASE("Baer sum is a group law on classes") {
  for (const auto& qf : kSmall)
    for (const auto& pf : kSmall) {
      const auto q = z(qf), p = z(pf);
      const auto classes = ext1_classes(q, p);
      const auto zero = split_class(q, p);
      for (const auto& x : classes) {
        REQUIRE(baer_sum(x, zero) == x);
        REQUIRE(baer_sum(x, negate(x)) == zero);
        for (const auto& y : classes) {
          REQUIRE(baer_sum(x, y) == baer_sum(y, x));
          const auto hits = std::count_if(classes.begin(), classes.end(),
                                          [&](const ExtClass& c) { return c == baer_sum(x, y); });
          REQUIRE(hits == 1);
          for (const auto& w : classes) REQUIRE(baer_sum(baer_sum(x, y), w) == baer_sum(x, baer_sum(y, w)));
        }
      }
    }
}

TEST_CASE("pushforward and pullback") {
  const auto q = z({4}), p = z({4});
  const auto x = ext1_classes(q, p)[1];
  std::vector<int> identity{0, 1, 2, 3}, zero(4, 0), doubling{0, 2, 0, 2};
  CHECK(pushforward(x, p, identity) == x);
  CHECK(pushforward(x, p, zero).is_split());
  CHECK(pullback(x, q, identity) == x);
  CHECK(pullback(x, q, zero).is_split());
  CHECK(pushforward(x, p, doubling) == baer_sum(x, x));
  CHECK_THROWS_AS(pushforward(x, p, std::vector<int>{0, 1, 1, 1}), std::invalid_argument);

  const auto onto_z2 = pushforward(x, z({2}), std::vector<int>{0, 1, 0, 1});
  CHECK(onto_z2 == ExtClass(carry_cocycle(q, z({2}), std::vector<int>{1})));
}

TEST_CASE("twisted groups") {
  CHECK(twisted_group(Cocycle::zero(z({2}), z({2})))->order() == 4);
  const auto z4 = twisted_group(nonsplit_2_2().cocycle());
  int generators_of_order_4 = 0;
  for (int x = 0; x < z4->order(); ++x)
    if (z4->add(x, x) != 0) ++generators_of_order_4;
  CHECK(generators_of_order_4 == 2);
}

TEST_CASE("extpan fibers") {
  SUBCASE("R = 0: the fiber is Ext1(Q, P)") {
    const auto q = z({2, 2}), p = z({2});
    const auto report = torsor_report(split_class(q, z({})), split_class(z({}), p));
    CHECK(report.fiber_size == 4);
    CHECK(report.ext1_order == 4);
    CHECK(report.stabilizer_order == 1);
  }
  SUBCASE("P = 0: a single class") {
    const auto e = ext1_classes(z({2}), z({2}))[1];
    CHECK(extpan_fiber(e, split_class(z({2}), z({}))).size() == 1);
  }
  SUBCASE("Z/2 throughout, F nonsplit") {
    const auto f = nonsplit_2_2();
    for (const auto& e : ext1_classes(z({2}), z({2}))) {
      const auto report = torsor_report(e, f);
      CHECK(report.fiber_size == 1);
      CHECK(report.ext1_order == 2);
      CHECK(report.stabilizer_order == 2);
      CHECK(report.connecting_image_order == 2);
      CHECK(report.transitive);
      CHECK(report.section_ok);
    }
  }
  SUBCASE("F split: stabilizer is trivial") {
    const auto e = nonsplit_2_2();
    const auto report = torsor_report(e, split_class(z({2}), z({2})));
    CHECK(report.fiber_size == 2);
    CHECK(report.stabilizer_order == 1);
  }
  SUBCASE("mismatched layers and budgets") {
    CHECK_THROWS_AS(extpan_fiber(nonsplit_2_2(), split_class(z({3}), z({2}))), std::invalid_argument);
    CHECK_THROWS_AS(extpan_fiber(split_class(z({9}), z({2})), split_class(z({2}), z({2}))), BudgetExceeded);
  }
}

TEST_CASE("fiber sizes against brute-force enumeration of normalized cocycles") {
  int checked = 0;
  for (const auto& qf : kSmall)
    for (const auto& rf : kSmall)
      for (const auto& pf : kSmall) {
        const auto q = z(qf), r = z(rf), p = z(pf);
        for (const auto& e : ext1_classes(q, r))
          for (const auto& f : ext1_classes(r, p)) {
            const auto middle = twisted_group(f.cocycle());
            const auto& target = e.cocycle().table();
            const int po = p->order();
            auto projects_onto_e = [&](const std::vector<int>& t) {
              for (std::size_t i = 0; i < t.size(); ++i)
                if (t[i] / po != target[i]) return false;
              return true;
            };
            const auto cocycles = all_cocycles(q, middle, 4096, projects_onto_e);
            if (!cocycles) continue;
            ++checked;
            CAPTURE(q->describe());
            CAPTURE(r->describe());
            CAPTURE(p->describe());
            REQUIRE(extpan_fiber(e, f).size() == count_classes(*cocycles));
          }
      }
  CHECK(checked >= 100);
}

TEST_CASE("action, difference and butterflies") {
  for (const auto& qf : kSmall)
    for (const auto& rf : kSmall) {
      const auto q = z(qf), r = z(rf), p = z({2});
      for (const auto& e : ext1_classes(q, r))
        for (const auto& f : ext1_classes(r, p)) {
          const auto fiber = extpan_fiber(e, f);
          const auto ext1 = ext1_classes(q, p);
          for (const auto& w : fiber) {
            REQUIRE(pushforward(w) == e);
            REQUIRE(check_butterfly(w, butterfly(w)).empty());
            REQUIRE(isomorphic(w, w));
            for (const auto& x : ext1) {
              const auto moved = act(w, x);
              REQUIRE(difference(w, moved).cocycle() == x.cocycle());
              REQUIRE(pushforward(moved) == e);
            }
            for (const auto& w2 : fiber) {
              REQUIRE(isomorphic(act(w, difference(w, w2)), w2));
              REQUIRE(difference(w2, w) == negate(difference(w, w2)));
              const auto iso = filtered_isomorphism(w, w2);
              REQUIRE(iso.has_value() == (&w == &w2));
            }
          }
        }
    }
}

TEST_CASE("make_variegated rejects cocycles over the wrong class") {
  const auto e = nonsplit_2_2();
  const auto f = split_class(z({2}), z({2}));
  const auto middle = twisted_group(f.cocycle());
  CHECK_THROWS_AS(make_variegated(e, f, Cocycle::zero(z({2}), middle)), std::invalid_argument);
  const auto w = make_variegated(split_class(z({2}), z({2})), f, Cocycle::zero(z({2}), middle));
  CHECK(w.w.is_zero());
}
