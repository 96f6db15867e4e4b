#include "logmono/graph_core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace logmono {

namespace {

std::string join_messages(const std::vector<Violation>& violations) {
  std::ostringstream os;
  os << "invalid curve";
  for (const auto& v : violations) os << "\n  " << to_string(v);
  return os.str();
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::size_t> edges_by_id(const TropicalCurve& curve) {
  std::vector<std::size_t> order(curve.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return curve.edges[a].id < curve.edges[b].id; });
  return order;
}

}  // namespace

Eigen::Index TropicalCurve::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return static_cast<Eigen::Index>(i);
  return -1;
}

Integer TropicalCurve::abelian_rank() const {
  Integer a = 0;
  for (const auto& v : vertices) a += v.genus;
  return a;
}

std::string to_string(const Violation& v) { return v.locus + ": " + v.message; }

InvalidCurve::InvalidCurve(std::vector<Violation> violations)
    : std::invalid_argument(join_messages(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(const TropicalCurve& curve) {
  std::vector<Violation> out;
  if (curve.base_rank < 0)
    out.push_back({"base_rank", "must be nonnegative, got " + std::to_string(curve.base_rank)});

  std::set<std::string> vertex_ids;
  for (std::size_t i = 0; i < curve.vertices.size(); ++i) {
    const auto& v = curve.vertices[i];
    const std::string locus = "vertex \"" + v.id + "\"";
    if (v.id.empty()) out.push_back({"vertices[" + std::to_string(i) + "]", "empty id"});
    if (!vertex_ids.insert(v.id).second) out.push_back({locus, "duplicate vertex id"});
    if (v.genus < 0) out.push_back({locus, "genus must be nonnegative, got " + std::to_string(v.genus)});
  }

  std::set<std::string> edge_ids;
  for (std::size_t i = 0; i < curve.edges.size(); ++i) {
    const auto& e = curve.edges[i];
    const std::string locus = "edge \"" + e.id + "\"";
    if (e.id.empty()) out.push_back({"edges[" + std::to_string(i) + "]", "empty id"});
    if (!edge_ids.insert(e.id).second) out.push_back({locus, "duplicate edge id"});
    if (!vertex_ids.count(e.src)) out.push_back({locus, "source references undeclared vertex \"" + e.src + "\""});
    if (!vertex_ids.count(e.dst)) out.push_back({locus, "target references undeclared vertex \"" + e.dst + "\""});
    if (e.length.rank() != curve.base_rank) {
      out.push_back({locus, "length has " + std::to_string(e.length.rank()) + " coordinates, base_rank is " +
                                std::to_string(curve.base_rank)});
    } else if ((e.length.coords.array() < 0).any()) {
      out.push_back({locus, "length has a negative coordinate"});
    } else if (!e.length.is_length()) {
      out.push_back({locus, "length is zero"});
    }
  }
  return out;
}

void require_valid(const TropicalCurve& curve) {
  auto violations = validate(curve);
  if (!violations.empty()) throw InvalidCurve(std::move(violations));
}

IntMatrix boundary_matrix(const TropicalCurve& curve) {
  IntMatrix d = IntMatrix::Zero(static_cast<Eigen::Index>(curve.vertices.size()),
                                static_cast<Eigen::Index>(curve.edges.size()));
  for (std::size_t j = 0; j < curve.edges.size(); ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    d(curve.vertex_index(curve.edges[j].dst), col) += 1;
    d(curve.vertex_index(curve.edges[j].src), col) -= 1;
  }
  return d;
}

Eigen::Index connected_components(const TropicalCurve& curve) {
  DisjointSets sets(curve.vertices.size());
  Eigen::Index components = static_cast<Eigen::Index>(curve.vertices.size());
  for (const auto& e : curve.edges)
    if (sets.unite(static_cast<std::size_t>(curve.vertex_index(e.src)),
                   static_cast<std::size_t>(curve.vertex_index(e.dst))))
      --components;
  return components;
}

Integer betti_number(const TropicalCurve& curve) {
  require_valid(curve);
  return static_cast<Integer>(curve.edges.size()) - static_cast<Integer>(curve.vertices.size()) +
         static_cast<Integer>(connected_components(curve));
}

bool CycleBasis::belongs_to(const TropicalCurve& curve) const {
  if (edge_ids.size() != curve.edges.size() || matrix.cols() != static_cast<Eigen::Index>(curve.edges.size()))
    return false;
  for (std::size_t i = 0; i < edge_ids.size(); ++i)
    if (edge_ids[i] != curve.edges[i].id) return false;
  return true;
}

CycleBasis cycle_basis(const TropicalCurve& curve) {
  require_valid(curve);
  const std::size_t nv = curve.vertices.size();
  const std::size_t ne = curve.edges.size();

  std::vector<std::size_t> src(ne), dst(ne);
  for (std::size_t j = 0; j < ne; ++j) {
    src[j] = static_cast<std::size_t>(curve.vertex_index(curve.edges[j].src));
    dst[j] = static_cast<std::size_t>(curve.vertex_index(curve.edges[j].dst));
  }

  // greedy forest in edge-id order is the lexicographically least one
  DisjointSets sets(nv);
  std::vector<bool> in_forest(ne, false);
  std::vector<std::size_t> non_tree;
  for (std::size_t j : edges_by_id(curve)) {
    if (sets.unite(src[j], dst[j]))
      in_forest[j] = true;
    else
      non_tree.push_back(j);
  }

  // root every tree at its least-index vertex and record parent edges
  std::vector<std::vector<std::size_t>> incident(nv);
  for (std::size_t j = 0; j < ne; ++j)
    if (in_forest[j]) {
      incident[src[j]].push_back(j);
      incident[dst[j]].push_back(j);
    }
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(nv, none), depth(nv, 0);
  std::vector<bool> seen(nv, false);
  for (std::size_t root = 0; root < nv; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t j : incident[x]) {
        const std::size_t y = src[j] == x ? dst[j] : src[j];
        if (seen[y]) continue;
        seen[y] = true;
        parent_edge[y] = j;
        depth[y] = depth[x] + 1;
        stack.push_back(y);
      }
    }
  }
  auto parent_of = [&](std::size_t x) {
    const std::size_t j = parent_edge[x];
    return src[j] == x ? dst[j] : src[j];
  };

  CycleBasis basis;
  for (const auto& e : curve.edges) basis.edge_ids.push_back(e.id);
  basis.matrix = IntMatrix::Zero(static_cast<Eigen::Index>(non_tree.size()), static_cast<Eigen::Index>(ne));
  for (std::size_t r = 0; r < non_tree.size(); ++r) {
    const std::size_t e = non_tree[r];
    const auto row = static_cast<Eigen::Index>(r);
    basis.generators.push_back(curve.edges[e].id);
    basis.matrix(row, static_cast<Eigen::Index>(e)) += 1;
    if (src[e] == dst[e]) continue;

    // close the cycle: walk dst -> lca upward, then lca -> src downward
    std::size_t up = dst[e];
    std::size_t down = src[e];
    while (up != down) {
      if (depth[up] >= depth[down]) {
        const std::size_t j = parent_edge[up];
        const std::size_t p = parent_of(up);
        basis.matrix(row, static_cast<Eigen::Index>(j)) += (src[j] == up && dst[j] == p) ? 1 : -1;
        up = p;
      } else {
        const std::size_t j = parent_edge[down];
        const std::size_t p = parent_of(down);
        basis.matrix(row, static_cast<Eigen::Index>(j)) += (src[j] == p && dst[j] == down) ? 1 : -1;
        down = p;
      }
    }
  }
  return basis;
}

std::vector<Violation> verify_cycle_basis(const TropicalCurve& curve, const IntMatrix& rows) {
  std::vector<Violation> out;
  if (rows.cols() != static_cast<Eigen::Index>(curve.edges.size())) {
    out.push_back({"cycle basis", "has " + std::to_string(rows.cols()) + " columns, curve has " +
                                      std::to_string(curve.edges.size()) + " edges"});
    return out;
  }
  const IntMatrix boundary = boundary_matrix(curve);
  for (Eigen::Index i = 0; i < rows.rows(); ++i)
    if (!(boundary * rows.row(i).transpose()).isZero())
      out.push_back({"cycle " + std::to_string(i), "not in the kernel of the boundary map"});

  const Integer h = betti_number(curve);
  if (rows.rows() != h)
    out.push_back({"cycle basis", "has " + std::to_string(rows.rows()) + " rows, first Betti number is " +
                                      std::to_string(h)});
  const auto divisors = smith_normal_form(rows);
  if (static_cast<Eigen::Index>(divisors.size()) != rows.rows())
    out.push_back({"cycle basis", "rows are linearly dependent"});
  if (std::any_of(divisors.begin(), divisors.end(), [](Integer d) { return d != 1; }))
    out.push_back({"cycle basis", "rows span a non-saturated sublattice"});
  return out;
}

}  // namespace logmono
