#pragma once

// Torsion, Betti/etale and Hodge shadows of the monodromy weight filtration.
//
// Cohomology coordinates are ordered lowest weight first:
//   [0, h)            gr_-1 = Hom(H, Z)
//   [h, h + 2a)       gr_0  = H^1 of the abelian part
//   [h + 2a, 2h + 2a) gr_1  = H(-1)
// The loop's winding datum is an integer w under the fixed identifications
// mu_n = Z/n (generator e^{2 pi i / n} -> 1) and Z(1) = Z (2 pi i -> 1).

#include "logmono/graph_core.hpp"

#include <array>
#include <vector>

namespace logmono {

struct WeightDims {
  Integer h = 0;
  Integer a = 0;
  Integer total = 0;

  friend bool operator==(const WeightDims&, const WeightDims&) = default;
};

/// Free ranks over Z/n of Hom(H, mu_n), A[n] and H/nH.
struct TorsionRanks {
  Integer modulus = 0;
  Integer toric = 0;
  Integer abelian = 0;
  Integer discrete = 0;

  friend bool operator==(const TorsionRanks&, const TorsionRanks&) = default;
};

/// Rows gr_-1, gr_0, gr_1; columns dim F^0, dim F^1.
struct HodgeTable {
  std::array<std::array<Integer, 2>, 3> rows{};

  Integer f1_total() const { return rows[0][1] + rows[1][1] + rows[2][1]; }
  friend bool operator==(const HodgeTable&, const HodgeTable&) = default;
};

WeightDims weight_dims(const TropicalCurve& curve);
TorsionRanks torsion_dims(const TropicalCurve& curve, Integer n);
HodgeTable hodge_table(const TropicalCurve& curve);

/// Unipotent operator N = I + w * B placed in the gr_1 -> gr_-1 block.
class MonodromyOperator {
 public:
  MonodromyOperator(Integer modulus, Integer h, Integer a, Integer w, IntMatrix matrix);

  Integer modulus() const { return modulus_; }
  Integer h() const { return h_; }
  Integer a() const { return a_; }
  Integer winding() const { return w_; }
  Eigen::Index size() const { return matrix_.rows(); }
  const IntMatrix& matrix() const { return matrix_; }

  /// The gr_1 -> gr_-1 block of N - I.
  IntMatrix variation_block() const;
  IntVector apply(const IntVector& alpha) const;
  /// Entrywise reduction of an integral operator.
  MonodromyOperator reduced(Integer n) const;
  /// Smallest k >= 1 with N^k = I, or 0 for an integral operator of infinite order.
  Integer order() const;

  /// Structural conditions relative to the pairing the operator came from.
  std::vector<Violation> check_invariants(const IntMatrix& b) const;

  friend MonodromyOperator operator*(const MonodromyOperator& x, const MonodromyOperator& y);
  friend bool operator==(const MonodromyOperator& x, const MonodromyOperator& y);

 private:
  Integer modulus_;
  Integer h_;
  Integer a_;
  Integer w_;
  IntMatrix matrix_;
};

/// alpha -> alpha + w * B(gr_1 part of alpha), over Z (modulus 0) or Z/n.
MonodromyOperator picard_lefschetz(const IntMatrix& b, Integer a, Integer w, Integer modulus = 0);

/// gr_1 (x) Q -> gr_-1 (x) Q is an isomorphism iff det B != 0.
bool monodromy_weight_check(const IntMatrix& b);

}  // namespace logmono
