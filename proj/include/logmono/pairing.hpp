#pragma once

// The monoid-valued edge-length pairing on Z^E and its restriction to H1.

#include "logmono/graph_core.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace logmono {

/// Symmetric matrix of MonoidVector entries, stored as one integer layer per
/// base generator: entry(i, j).coords[k] == layer(k)(i, j).
class PairingMatrix {
 public:
  PairingMatrix() = default;
  /// Throws std::invalid_argument unless the layers are square, equally
  /// sized and symmetric.
  PairingMatrix(Integer base_rank, std::vector<IntMatrix> layers);

  Integer base_rank() const { return base_rank_; }
  Eigen::Index h() const { return h_; }
  const IntMatrix& layer(Eigen::Index k) const { return layers_[static_cast<std::size_t>(k)]; }
  const std::vector<IntMatrix>& layers() const { return layers_; }
  MonoidVector entry(Eigen::Index i, Eigen::Index j) const;

  /// Per-generator semidefiniteness and the diagonal sign conditions.
  std::vector<Violation> check_invariants() const;

  friend bool operator==(const PairingMatrix& a, const PairingMatrix& b);

 private:
  Integer base_rank_ = 0;
  Eigen::Index h_ = 0;
  std::vector<IntMatrix> layers_;
};

/// Raised by component_group on a singular pairing.
class DegeneratePairing : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// sum_e c1[e] * c2[e] * length(e).
MonoidVector edge_pairing(std::span<const Integer> c1, std::span<const Integer> c2, const TropicalCurve& curve);

PairingMatrix pairing_matrix(const TropicalCurve& curve, const CycleBasis& basis);

/// Evaluate at the monoid homomorphism sending generator k to weights[k].
IntMatrix specialize(const PairingMatrix& pm, std::span<const Integer> weights);

/// Leading principal minors, exactly. The empty matrix is positive definite.
bool is_positive_definite(const IntMatrix& b);

/// Elementary divisors greater than one of a nondegenerate symmetric matrix.
std::vector<Integer> component_group(const IntMatrix& b);

/// Rows of `u` times the basis: the pairing in the new basis is U B U^T.
PairingMatrix change_basis(const PairingMatrix& pm, const IntMatrix& u);

}  // namespace logmono
