#include "logmono/selftest.hpp"

#include "logmono/random.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace logmono {

namespace {

struct Failure {
  std::string what;
};

void expect(bool condition, const std::string& what) {
  if (!condition) throw Failure{what};
}

std::vector<Integer> ones(Integer r) { return std::vector<Integer>(static_cast<std::size_t>(r), 1); }

IntMatrix gram(const TropicalCurve& curve) {
  return specialize(pairing_matrix(curve, cycle_basis(curve)), ones(curve.base_rank));
}

std::vector<Integer> row(const IntMatrix& m, Eigen::Index i) {
  std::vector<Integer> v(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) v[static_cast<std::size_t>(j)] = m(i, j);
  return v;
}

using Check = std::function<void(SeededRng&)>;

struct Property {
  std::string name;
  Check check;
};

std::vector<extpan::GroupPtr> small_groups() {
  return {extpan::make_group(std::vector<int>{}), extpan::make_group({2}), extpan::make_group({3}),
          extpan::make_group({4}), extpan::make_group({2, 2})};
}

std::vector<Property> properties() {
  RandomCurveOptions rank1;
  RandomCurveOptions rank2;
  rank2.base_rank = 2;
  RandomCurveOptions genera;
  genera.max_genus = 3;

  return {
      {"cycle_basis_invariants",
       [=](SeededRng& rng) {
         const auto curve = random_connected_curve(rng, rank2);
         const auto basis = cycle_basis(curve);
         const auto violations = verify_cycle_basis(curve, basis.matrix);
         expect(violations.empty(), violations.empty() ? "" : to_string(violations.front()));
         expect(basis.rank() == betti_number(curve), "row count differs from the Betti number");
       }},
      {"cycle_basis_deterministic",
       [=](SeededRng& rng) {
         const auto curve = random_connected_curve(rng, rank1);
         expect(cycle_basis(curve).matrix == cycle_basis(curve).matrix, "two calls disagree");
       }},
      {"orientation_reversal",
       [=](SeededRng& rng) {
         auto curve = random_connected_curve(rng, rank1);
         if (curve.edges.empty()) return;
         const auto before = cycle_basis(curve);
         const auto e = static_cast<std::size_t>(rng.uniform(0, static_cast<Integer>(curve.edges.size()) - 1));
         std::swap(curve.edges[e].src, curve.edges[e].dst);
         IntMatrix flipped = before.matrix;
         flipped.col(static_cast<Eigen::Index>(e)) *= -1;
         expect(same_saturated_row_lattice(flipped, cycle_basis(curve).matrix), "row lattices differ after reversal");
       }},
      {"edge_pairing_bilinear_symmetric",
       [=](SeededRng& rng) {
         const auto curve = random_connected_curve(rng, rank2);
         const auto ne = static_cast<Integer>(curve.edges.size());
         auto vec = [&] {
           std::vector<Integer> v(static_cast<std::size_t>(ne));
           for (auto& x : v) x = rng.uniform(-3, 3);
           return v;
         };
         const auto a = vec(), a2 = vec(), b = vec();
         std::vector<Integer> sum(a.size());
         for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + a2[i];
         expect(edge_pairing(sum, b, curve) == edge_pairing(a, b, curve) + edge_pairing(a2, b, curve),
                "not additive in the first argument");
         expect(edge_pairing(a, b, curve) == edge_pairing(b, a, curve), "not symmetric");
       }},
      {"pairing_matches_edge_oracle",
       [=](SeededRng& rng) {
         const auto curve = random_connected_curve(rng, rank2);
         const auto basis = cycle_basis(curve);
         const auto pm = pairing_matrix(curve, basis);
         for (Eigen::Index i = 0; i < pm.h(); ++i)
           for (Eigen::Index j = 0; j < pm.h(); ++j)
             expect(pm.entry(i, j) == edge_pairing(row(basis.matrix, i), row(basis.matrix, j), curve),
                    "entry differs from the edge-pairing sum");
         const auto violations = pm.check_invariants();
         expect(violations.empty(), violations.empty() ? "" : to_string(violations.front()));
       }},
      {"specialize_commutes_with_evaluation",
       [=](SeededRng& rng) {
         const auto curve = random_connected_curve(rng, rank2);
         const auto pm = pairing_matrix(curve, cycle_basis(curve));
         const std::vector<Integer> weights{rng.uniform(1, 9), rng.uniform(1, 9)};
         const IntMatrix b = specialize(pm, weights);
         for (Eigen::Index i = 0; i < pm.h(); ++i)
           for (Eigen::Index j = 0; j < pm.h(); ++j) {
             const auto v = pm.entry(i, j);
             expect(b(i, j) == weights[0] * v.coords(0) + weights[1] * v.coords(1), "evaluation mismatch");
           }
       }},
      {"positive_definite",
       [=](SeededRng& rng) {
         expect(is_positive_definite(gram(random_connected_curve(rng, rank1))), "specialization not positive definite");
       }},
      {"tree_edge_independence",
       [=](SeededRng& rng) {
         auto curve = random_connected_curve(rng, rank1);
         const auto basis = cycle_basis(curve);
         const auto before = pairing_matrix(curve, basis);
         for (Eigen::Index e = 0; e < basis.matrix.cols(); ++e)
           if (basis.matrix.col(e).isZero()) curve.edges[static_cast<std::size_t>(e)].length.coords(0) += 7;
         expect(pairing_matrix(curve, basis) == before, "bridge length changed the pairing");
       }},
      {"basis_invariance",
       [=](SeededRng& rng) {
         const auto curve = random_connected_curve(rng, rank1);
         const auto basis = cycle_basis(curve);
         const auto pm = pairing_matrix(curve, basis);
         const IntMatrix b = specialize(pm, ones(1));
         const IntMatrix u = random_unimodular(rng, pm.h());
         CycleBasis moved = basis;
         moved.matrix = u * basis.matrix;
         const auto direct = pairing_matrix(curve, moved);
         expect(direct == change_basis(pm, u), "pairing in the new basis differs from U B U^T");
         const IntMatrix b2 = specialize(direct, ones(1));
         expect(component_group(b2) == component_group(b), "component group changed");
         expect(is_positive_definite(b2) == is_positive_definite(b), "definiteness changed");
       }},
      {"picard_lefschetz_structure",
       [=](SeededRng& rng) {
         const auto curve = random_connected_curve(rng, genera);
         const IntMatrix b = gram(curve);
         const Integer a = curve.abelian_rank();
         const Integer w1 = rng.uniform(-3, 3), w2 = rng.uniform(-3, 3);
         const auto n1 = picard_lefschetz(b, a, w1);
         const auto violations = n1.check_invariants(b);
         expect(violations.empty(), violations.empty() ? "" : to_string(violations.front()));
         expect(picard_lefschetz(b, a, w1 + w2) == n1 * picard_lefschetz(b, a, w2), "windings do not compose");
         const auto unit = picard_lefschetz(b, a, 1);
         const IntMatrix variation = unit.matrix() - IntMatrix::Identity(unit.size(), unit.size());
         expect(integer_rank(variation) == integer_rank(b), "rank(N - I) differs from rank(B)");
         expect(unit.matrix().leftCols(b.rows() + 2 * a) == IntMatrix::Identity(unit.size(), b.rows() + 2 * a),
                "W_0 is not fixed");
       }},
      {"reduction_mod_n",
       [=](SeededRng& rng) {
         const auto curve = random_connected_curve(rng, genera);
         const IntMatrix b = gram(curve);
         const Integer a = curve.abelian_rank();
         const Integer det = determinant(b);
         for (Integer n = 2; n <= 5; ++n) {
           const auto reduced = picard_lefschetz(reduce_mod(b, n), a, 1, n);
           expect(picard_lefschetz(b, a, 1).reduced(n) == reduced, "reduction does not commute");
           expect(reduced.check_invariants(b).empty(), "mod-n operator violates its invariants");
           if (b.rows() > 0 && std::gcd(det, n) == 1) expect(reduced.order() == n, "order differs from n");
         }
       }},
      {"hodge_and_weights",
       [=](SeededRng& rng) {
         const auto curve = random_connected_curve(rng, genera);
         const auto d = weight_dims(curve);
         const auto t = hodge_table(curve);
         expect(t.f1_total() == d.h + d.a, "F^1 total differs from g");
         expect(t.rows[0][0] + t.rows[1][0] + t.rows[2][0] == d.total, "weight rows do not sum to 2g");
         expect(monodromy_weight_check(gram(curve)), "monodromy is not an isomorphism on gr");
       }},
      {"ext1_group_law",
       [=](SeededRng& rng) {
         const auto groups = small_groups();
         const auto q = groups[static_cast<std::size_t>(rng.uniform(0, 4))];
         const auto p = groups[static_cast<std::size_t>(rng.uniform(0, 4))];
         const auto classes = extpan::ext1_classes(q, p);
         expect(static_cast<Integer>(classes.size()) == extpan::ext1_order(*q, *p), "class count mismatch");
         const auto zero = extpan::split_class(q, p);
         for (const auto& x : classes) {
           expect(extpan::baer_sum(zero, x) == x, "split class is not the identity");
           expect(extpan::baer_sum(x, extpan::negate(x)).is_split(), "negation is not the inverse");
           for (const auto& y : classes) expect(extpan::baer_sum(x, y) == extpan::baer_sum(y, x), "not commutative");
         }
       }},
      {"extpan_torsor",
       [=](SeededRng& rng) {
         const auto groups = small_groups();
         const auto p = groups[static_cast<std::size_t>(rng.uniform(0, 4))];
         const auto q = groups[static_cast<std::size_t>(rng.uniform(0, 4))];
         const auto r = groups[static_cast<std::size_t>(rng.uniform(0, 4))];
         const auto es = extpan::ext1_classes(q, r);
         const auto fs = extpan::ext1_classes(r, p);
         const auto& e = es[static_cast<std::size_t>(rng.uniform(0, static_cast<Integer>(es.size()) - 1))];
         const auto& f = fs[static_cast<std::size_t>(rng.uniform(0, static_cast<Integer>(fs.size()) - 1))];
         const auto report = extpan::torsor_report(e, f);
         expect(report.fiber_size > 0, "empty fiber");
         expect(report.transitive, "action is not transitive");
         expect(report.section_ok, "difference is not a section of the action");
         expect(report.stabilizer_is_connecting_image, "stabilizer differs from the connecting image");
         expect(report.fiber_size * report.stabilizer_order == report.ext1_order, "orbit-stabilizer count fails");
       }},
  };
}

}  // namespace

bool SelftestReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

bool same_saturated_row_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  IntMatrix stacked(a.rows() + b.rows(), a.cols());
  stacked << a, b;
  return integer_rank(stacked) == a.rows() && integer_rank(a) == a.rows();
}

SelftestReport run_selftest(std::uint64_t seed, Integer count) {
  if (count < 1) throw std::invalid_argument("count must be at least 1");
  SelftestReport report;
  report.seed = seed;
  report.count = count;
  std::uint64_t stream = 0;
  for (const auto& property : properties()) {
    SeededRng rng(seed * 1000003u + stream++);
    PropertyResult result;
    result.name = property.name;
    for (Integer i = 0; i < count && result.passed; ++i) {
      try {
        property.check(rng);
        ++result.checked;
      } catch (const Failure& f) {
        result.passed = false;
        result.failure = "instance " + std::to_string(i) + ": " + f.what;
      } catch (const std::exception& e) {
        result.passed = false;
        result.failure = "instance " + std::to_string(i) + ": unexpected error: " + e.what();
      }
    }
    report.properties.push_back(std::move(result));
  }
  return report;
}

io::Json to_json(const SelftestReport& report) {
  io::Json doc;
  doc["seed"] = report.seed;
  doc["count"] = report.count;
  doc["properties"] = io::Json::array();
  for (const auto& p : report.properties) {
    io::Json entry;
    entry["name"] = p.name;
    entry["passed"] = p.passed;
    entry["checked"] = p.checked;
    if (!p.passed) entry["failure"] = p.failure;
    doc["properties"].push_back(std::move(entry));
  }
  doc["all_passed"] = report.all_passed();
  return doc;
}

}  // namespace logmono
