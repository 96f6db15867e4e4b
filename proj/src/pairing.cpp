#include "logmono/pairing.hpp"

#include <algorithm>

namespace logmono {

namespace {

void require_symmetric(const IntMatrix& b) {
  if (!is_symmetric(b)) throw std::invalid_argument("matrix is not symmetric");
}

}  // namespace

PairingMatrix::PairingMatrix(Integer base_rank, std::vector<IntMatrix> layers)
    : base_rank_(base_rank), layers_(std::move(layers)) {
  if (base_rank_ < 0) throw std::invalid_argument("base_rank must be nonnegative");
  if (static_cast<Integer>(layers_.size()) != base_rank_)
    throw std::invalid_argument("pairing needs one layer per base generator");
  if (!layers_.empty()) h_ = layers_.front().rows();
  for (const auto& layer : layers_) {
    if (layer.rows() != h_ || layer.cols() != h_) throw std::invalid_argument("pairing layers differ in shape");
    require_symmetric(layer);
  }
}

MonoidVector PairingMatrix::entry(Eigen::Index i, Eigen::Index j) const {
  IntVector v(base_rank_);
  for (Integer k = 0; k < base_rank_; ++k) v(k) = layers_[static_cast<std::size_t>(k)](i, j);
  return MonoidVector(std::move(v));
}

std::vector<Violation> PairingMatrix::check_invariants() const {
  std::vector<Violation> out;
  for (Integer k = 0; k < base_rank_; ++k) {
    const auto& layer = layers_[static_cast<std::size_t>(k)];
    if (!is_positive_semidefinite(layer))
      out.push_back({"generator " + std::to_string(k), "layer is not positive semidefinite"});
  }
  for (Eigen::Index i = 0; i < h_; ++i) {
    const MonoidVector d = entry(i, i);
    if ((d.coords.array() < 0).any())
      out.push_back({"entry (" + std::to_string(i) + "," + std::to_string(i) + ")", "negative diagonal coordinate"});
    if (base_rank_ > 0 && d.is_zero())
      out.push_back({"entry (" + std::to_string(i) + "," + std::to_string(i) + ")", "zero diagonal entry"});
  }
  return out;
}

bool operator==(const PairingMatrix& a, const PairingMatrix& b) {
  if (a.base_rank_ != b.base_rank_ || a.h_ != b.h_) return false;
  for (std::size_t k = 0; k < a.layers_.size(); ++k)
    if (a.layers_[k] != b.layers_[k]) return false;
  return true;
}

MonoidVector edge_pairing(std::span<const Integer> c1, std::span<const Integer> c2, const TropicalCurve& curve) {
  if (c1.size() != curve.edges.size() || c2.size() != curve.edges.size())
    throw std::invalid_argument("edge vectors must have one coordinate per edge");
  MonoidVector sum = MonoidVector::zero(curve.base_rank);
  for (std::size_t e = 0; e < curve.edges.size(); ++e)
    if (c1[e] != 0 && c2[e] != 0) sum += (c1[e] * c2[e]) * curve.edges[e].length;
  return sum;
}

PairingMatrix pairing_matrix(const TropicalCurve& curve, const CycleBasis& basis) {
  require_valid(curve);
  if (!basis.belongs_to(curve)) throw std::invalid_argument("cycle basis was built for a different curve");
  std::vector<IntMatrix> layers;
  const Eigen::Index ne = static_cast<Eigen::Index>(curve.edges.size());
  for (Integer k = 0; k < curve.base_rank; ++k) {
    IntVector lengths(ne);
    for (Eigen::Index e = 0; e < ne; ++e) lengths(e) = curve.edges[static_cast<std::size_t>(e)].length.coords(k);
    layers.emplace_back(basis.matrix * lengths.asDiagonal() * basis.matrix.transpose());
  }
  return PairingMatrix(curve.base_rank, std::move(layers));
}

IntMatrix specialize(const PairingMatrix& pm, std::span<const Integer> weights) {
  if (static_cast<Integer>(weights.size()) != pm.base_rank())
    throw std::invalid_argument("need one weight per base generator");
  if (std::any_of(weights.begin(), weights.end(), [](Integer w) { return w < 1; }))
    throw std::invalid_argument("weights must be positive");
  IntMatrix b = IntMatrix::Zero(pm.h(), pm.h());
  for (Integer k = 0; k < pm.base_rank(); ++k) b += weights[static_cast<std::size_t>(k)] * pm.layer(k);
  return b;
}

bool is_positive_definite(const IntMatrix& b) {
  require_symmetric(b);
  return leading_minors_positive(b);
}

std::vector<Integer> component_group(const IntMatrix& b) {
  require_symmetric(b);
  auto divisors = smith_normal_form(b);
  if (static_cast<Eigen::Index>(divisors.size()) < b.rows())
    throw DegeneratePairing("degenerate pairing: determinant is zero, cokernel is infinite");
  divisors.erase(std::remove(divisors.begin(), divisors.end(), Integer{1}), divisors.end());
  return divisors;
}

PairingMatrix change_basis(const PairingMatrix& pm, const IntMatrix& u) {
  if (u.rows() != pm.h() || u.cols() != pm.h()) throw std::invalid_argument("change of basis has the wrong shape");
  if (std::abs(determinant(u)) != 1) throw std::invalid_argument("change of basis is not unimodular");
  std::vector<IntMatrix> layers;
  for (const auto& layer : pm.layers()) layers.emplace_back(u * layer * u.transpose());
  return PairingMatrix(pm.base_rank(), std::move(layers));
}

}  // namespace logmono
