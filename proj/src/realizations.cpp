#include "logmono/realizations.hpp"

#include <stdexcept>

namespace logmono {

namespace {

void require_modulus(Integer modulus) {
  if (modulus != 0 && modulus < 2) throw std::invalid_argument("modulus must be 0 (integers) or at least 2");
}

IntMatrix normalize(IntMatrix m, Integer modulus) { return modulus == 0 ? m : reduce_mod(m, modulus); }

}  // namespace

WeightDims weight_dims(const TropicalCurve& curve) {
  const Integer h = betti_number(curve);
  const Integer a = curve.abelian_rank();
  return {h, a, 2 * (h + a)};
}

TorsionRanks torsion_dims(const TropicalCurve& curve, Integer n) {
  if (n < 2) throw std::invalid_argument("torsion level must be at least 2");
  const WeightDims d = weight_dims(curve);
  return {n, d.h, 2 * d.a, d.h};
}

HodgeTable hodge_table(const TropicalCurve& curve) {
  const WeightDims d = weight_dims(curve);
  HodgeTable t;
  t.rows[0] = {d.h, 0};
  t.rows[1] = {2 * d.a, d.a};
  t.rows[2] = {d.h, d.h};
  return t;
}

MonodromyOperator::MonodromyOperator(Integer modulus, Integer h, Integer a, Integer w, IntMatrix matrix)
    : modulus_(modulus), h_(h), a_(a), w_(w), matrix_(std::move(matrix)) {
  require_modulus(modulus_);
  if (h_ < 0 || a_ < 0) throw std::invalid_argument("graded ranks must be nonnegative");
  const Integer size = 2 * (h_ + a_);
  if (matrix_.rows() != size || matrix_.cols() != size)
    throw std::invalid_argument("operator matrix must be " + std::to_string(size) + "x" + std::to_string(size));
}

IntMatrix MonodromyOperator::variation_block() const {
  IntMatrix block = matrix_.topRightCorner(h_, h_);
  return block;
}

IntVector MonodromyOperator::apply(const IntVector& alpha) const {
  if (alpha.size() != size()) throw std::invalid_argument("vector length does not match the operator");
  IntMatrix col = alpha;
  return mul_mod(matrix_, col, modulus_).col(0);
}

MonodromyOperator MonodromyOperator::reduced(Integer n) const {
  if (modulus_ != 0) throw std::invalid_argument("operator is already reduced");
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  return {n, h_, a_, mod_floor(w_, n), reduce_mod(matrix_, n)};
}

Integer MonodromyOperator::order() const {
  const IntMatrix id = IntMatrix::Identity(size(), size());
  if (matrix_ == id) return 1;
  if (modulus_ == 0) return 0;
  IntMatrix power = matrix_;
  // unipotent of index two: N^k = I + k (N - I), so the order divides n
  for (Integer k = 2; k <= modulus_; ++k) {
    power = mul_mod(power, matrix_, modulus_);
    if (power == id) return k;
  }
  throw std::logic_error("operator is not unipotent modulo n");
}

std::vector<Violation> MonodromyOperator::check_invariants(const IntMatrix& b) const {
  std::vector<Violation> out;
  if (b.rows() != h_ || b.cols() != h_) {
    out.push_back({"pairing", "shape does not match h = " + std::to_string(h_)});
    return out;
  }
  const Eigen::Index n = size();
  const IntMatrix variation = normalize(matrix_ - IntMatrix::Identity(n, n), modulus_);
  IntMatrix outside = variation;
  outside.topRightCorner(h_, h_).setZero();
  if (!outside.isZero()) out.push_back({"N - I", "nonzero outside the gr_1 -> gr_-1 block"});
  if (!mul_mod(variation, variation, modulus_).isZero()) out.push_back({"N - I", "does not square to zero"});
  if (variation.topRightCorner(h_, h_) != normalize(w_ * b, modulus_))
    out.push_back({"N - I", "block differs from w * B"});
  return out;
}

MonodromyOperator operator*(const MonodromyOperator& x, const MonodromyOperator& y) {
  if (x.modulus_ != y.modulus_ || x.h_ != y.h_ || x.a_ != y.a_)
    throw std::invalid_argument("cannot compose operators on different lattices");
  const Integer w = x.modulus_ == 0 ? x.w_ + y.w_ : mod_floor(x.w_ + y.w_, x.modulus_);
  return {x.modulus_, x.h_, x.a_, w, mul_mod(x.matrix_, y.matrix_, x.modulus_)};
}

bool operator==(const MonodromyOperator& x, const MonodromyOperator& y) {
  return x.modulus_ == y.modulus_ && x.h_ == y.h_ && x.a_ == y.a_ && x.w_ == y.w_ && x.matrix_ == y.matrix_;
}

MonodromyOperator picard_lefschetz(const IntMatrix& b, Integer a, Integer w, Integer modulus) {
  require_modulus(modulus);
  if (!is_symmetric(b)) throw std::invalid_argument("pairing matrix is not symmetric");
  if (a < 0) throw std::invalid_argument("abelian rank must be nonnegative");
  const Integer h = b.rows();
  const Integer size = 2 * (h + a);
  const Integer winding = modulus == 0 ? w : mod_floor(w, modulus);
  IntMatrix n = IntMatrix::Identity(size, size);
  n.topRightCorner(h, h) = normalize(winding * b, modulus);
  return {modulus, h, a, winding, normalize(std::move(n), modulus)};
}

bool monodromy_weight_check(const IntMatrix& b) {
  if (b.rows() != b.cols()) throw std::invalid_argument("pairing matrix is not square");
  return determinant(b) != 0;
}

}  // namespace logmono
