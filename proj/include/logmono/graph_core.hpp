#pragma once

// Metrized dual graphs and their first homology.

#include "logmono/integer_matrix.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace logmono {

/// Element of the free abelian group on the r generators of the base monoid.
/// Edge lengths are the nonzero elements with nonnegative coordinates;
/// pairing values may have any sign.
struct MonoidVector {
  IntVector coords;

  MonoidVector() = default;
  explicit MonoidVector(IntVector c) : coords(std::move(c)) {}
  static MonoidVector zero(Eigen::Index rank) { return MonoidVector(IntVector::Zero(rank)); }

  Eigen::Index rank() const { return coords.size(); }
  bool is_zero() const { return (coords.array() == 0).all(); }
  /// Nonnegative and nonzero: an element of the monoid minus the origin.
  bool is_length() const { return (coords.array() >= 0).all() && (coords.array() > 0).any(); }

  MonoidVector& operator+=(const MonoidVector& o) {
    coords += o.coords;
    return *this;
  }
  friend MonoidVector operator+(MonoidVector a, const MonoidVector& b) { return a += b; }
  friend MonoidVector operator-(const MonoidVector& a, const MonoidVector& b) { return MonoidVector(a.coords - b.coords); }
  friend MonoidVector operator*(Integer k, const MonoidVector& a) { return MonoidVector(k * a.coords); }
  friend bool operator==(const MonoidVector& a, const MonoidVector& b) {
    return a.coords.size() == b.coords.size() && a.coords == b.coords;
  }
};

struct Vertex {
  std::string id;
  Integer genus = 0;
};

struct Edge {
  std::string id;
  std::string src;
  std::string dst;
  MonoidVector length;
};

/// Genus-marked multigraph with oriented, monoid-metrized edges. Self-loops
/// and parallel edges are allowed; the graph need not be connected.
struct TropicalCurve {
  Integer base_rank = 0;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  /// Position of a vertex id in `vertices`, or -1.
  Eigen::Index vertex_index(const std::string& id) const;
  Integer abelian_rank() const;
};

struct Violation {
  std::string locus;
  std::string message;
};

std::string to_string(const Violation& v);

class InvalidCurve : public std::invalid_argument {
 public:
  explicit InvalidCurve(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Every invariant violation of the curve, in a stable order.
std::vector<Violation> validate(const TropicalCurve& curve);
void require_valid(const TropicalCurve& curve);

/// Oriented incidence matrix, |V| x |E|, column e equal to dst(e) - src(e).
IntMatrix boundary_matrix(const TropicalCurve& curve);

Eigen::Index connected_components(const TropicalCurve& curve);
Integer betti_number(const TropicalCurve& curve);

/// Integral basis of H1 inside Z^E, one row per cycle. Columns follow the
/// curve's edge order.
struct CycleBasis {
  std::vector<std::string> edge_ids;
  /// Non-tree edge generating each row.
  std::vector<std::string> generators;
  IntMatrix matrix;

  Eigen::Index rank() const { return matrix.rows(); }
  bool belongs_to(const TropicalCurve& curve) const;
};

/// Fundamental cycles of the greedy spanning forest taken in edge-id order.
/// Rows are sorted by the id of their non-tree edge; each row traverses that
/// edge positively and returns through the forest.
CycleBasis cycle_basis(const TropicalCurve& curve);

/// Checks rows against the boundary map and saturation via Smith normal form.
std::vector<Violation> verify_cycle_basis(const TropicalCurve& curve, const IntMatrix& rows);

}  // namespace logmono
