#pragma once

// Extensions and variegated extensions of finite abelian groups, computed on
// normalized symmetric 2-cocycles.
//
// An extension 0 -> A -> X -> Q -> 0 with cocycle f is modelled as X = Q x A
// with (q, a) + (q', a') = (q + q', a + a' + f(q, q')). Baer sum is pointwise
// addition of cocycles and two cocycles define isomorphic extensions iff they
// differ by a coboundary (dh)(q, q') = h(q) + h(q') - h(q + q').
//
// A variegated extension of E in Ext1(Q, R) by F in Ext1(R, P) is stored as a
// cocycle w on Q with values in the middle group F = R x_F P, normalized so
// that its image under F -> R equals E's cocycle on the nose. Classes are
// compared up to filtered isomorphisms that are the identity on F and on Q.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace logmono::extpan {

/// Finite abelian group on the elements 0..order-1 (0 is the identity),
/// either presented as a sum of cyclic groups or given by an addition table.
class AbelianGroup {
 public:
  /// The trivial group.
  AbelianGroup();
  /// Z/m_1 + ... + Z/m_k. Elements are mixed-radix indices, last factor fastest.
  explicit AbelianGroup(std::vector<int> factors);

  /// Parses "2,4"; "" and "trivial" give the trivial group.
  static AbelianGroup parse(std::string_view spec);
  /// Validates closure, identity, inverses, commutativity and associativity.
  static AbelianGroup from_table(int order, std::vector<int> add_table);

  int order() const { return order_; }
  int add(int x, int y) const { return add_[static_cast<std::size_t>(x * order_ + y)]; }
  int neg(int x) const { return neg_[static_cast<std::size_t>(x)]; }
  int sub(int x, int y) const { return add(x, neg(y)); }
  int scale(std::int64_t k, int x) const;

  bool presented() const { return presented_; }
  const std::vector<int>& factors() const { return factors_; }
  /// Unit vectors of the presentation.
  std::vector<int> generators() const;
  std::vector<int> coords(int x) const;
  int element(std::span<const int> coords) const;

  std::string describe() const;
  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b);

 private:
  int order_ = 1;
  bool presented_ = true;
  std::vector<int> factors_;
  std::vector<int> add_;
  std::vector<int> neg_;
};

using GroupPtr = std::shared_ptr<const AbelianGroup>;

GroupPtr make_group(std::vector<int> factors);
GroupPtr make_group(AbelianGroup g);

/// A group homomorphism given by the image of every element.
bool is_homomorphism(const AbelianGroup& source, const AbelianGroup& target, std::span<const int> map);
/// Every homomorphism from a presented source, by images of generators.
std::vector<std::vector<int>> homomorphisms(const AbelianGroup& source, const AbelianGroup& target);

class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Normalized symmetric 2-cocycle Q x Q -> A.
class Cocycle {
 public:
  /// Throws std::invalid_argument listing the first failed condition.
  Cocycle(GroupPtr source, GroupPtr target, std::vector<int> table);
  static Cocycle zero(GroupPtr source, GroupPtr target);

  const AbelianGroup& source() const { return *source_; }
  const AbelianGroup& target() const { return *target_; }
  const GroupPtr& source_ptr() const { return source_; }
  const GroupPtr& target_ptr() const { return target_; }
  int operator()(int a, int b) const { return table_[static_cast<std::size_t>(a * source_->order() + b)]; }
  const std::vector<int>& table() const { return table_; }
  bool is_zero() const;

  friend Cocycle operator+(const Cocycle& x, const Cocycle& y);
  friend Cocycle operator-(const Cocycle& x, const Cocycle& y);
  friend Cocycle operator-(const Cocycle& x);
  /// Literal equality of tables.
  friend bool operator==(const Cocycle& x, const Cocycle& y);

 private:
  struct Unchecked {};
  Cocycle(GroupPtr source, GroupPtr target, std::vector<int> table, Unchecked);
  friend Cocycle make_unchecked(GroupPtr, GroupPtr, std::vector<int>);

  GroupPtr source_;
  GroupPtr target_;
  std::vector<int> table_;
};

/// Every violated condition (normalization, symmetry, cocycle identity),
/// checked over all pairs and triples.
std::vector<std::string> cocycle_violations(const AbelianGroup& source, const AbelianGroup& target,
                                            std::span<const int> table);

/// dh for h : Q -> A with h(0) = 0.
Cocycle coboundary(GroupPtr source, GroupPtr target, std::span<const int> h);

/// Some h with dh = d, or nothing when d is not a coboundary. The search runs
/// over lifts of each cyclic generator of Q to elements of the extension
/// defined by d of the same order; such lifts exist iff d is a coboundary.
std::optional<std::vector<int>> coboundary_witness(const Cocycle& d);
bool cohomologous(const Cocycle& x, const Cocycle& y);

/// Transgression along each cyclic generator g of order m:
/// sum_{k<m} f(k g, g) taken in A / mA, as the least element of its coset.
std::vector<int> class_invariant(const Cocycle& f);

/// f(a, b) = sum_i c_i * carry_i(a, b), carry_i = 1 iff a_i + b_i >= m_i.
Cocycle carry_cocycle(GroupPtr source, GroupPtr target, std::span<const int> coefficients);

/// Least representatives of the cosets of m A in A.
std::vector<int> coset_representatives(const AbelianGroup& group, int m);

/// An extension class; equality is cohomology of representatives.
class ExtClass {
 public:
  explicit ExtClass(Cocycle c) : cocycle_(std::move(c)) {}
  const Cocycle& cocycle() const { return cocycle_; }
  const AbelianGroup& source() const { return cocycle_.source(); }
  const AbelianGroup& target() const { return cocycle_.target(); }
  bool is_split() const;

  friend bool operator==(const ExtClass& x, const ExtClass& y) { return cohomologous(x.cocycle_, y.cocycle_); }

 private:
  Cocycle cocycle_;
};

ExtClass split_class(GroupPtr source, GroupPtr target);

/// |Ext1(Q, A)| = prod_i |A / m_i A|.
std::int64_t ext1_order(const AbelianGroup& source, const AbelianGroup& target);

/// One carry-cocycle representative per class, without a size budget.
std::vector<ExtClass> ext1_representatives(GroupPtr source, GroupPtr target);

/// Representatives of Ext1(Q, P) for |Q|, |P| <= 12.
std::vector<ExtClass> ext1_classes(GroupPtr q, GroupPtr p);

ExtClass baer_sum(const ExtClass& x, const ExtClass& y);
ExtClass negate(const ExtClass& x);

/// Compose with a homomorphism target -> new_target.
ExtClass pushforward(const ExtClass& x, GroupPtr new_target, std::span<const int> hom);
/// Precompose with a homomorphism new_source -> source.
ExtClass pullback(const ExtClass& x, GroupPtr new_source, std::span<const int> hom);

/// The middle group R x_F P of an extension F of R by P; element (r, p) has
/// index r * |P| + p.
GroupPtr twisted_group(const Cocycle& f);

struct VariegatedClass {
  ExtClass e;       // Ext1(Q, R)
  ExtClass f;       // Ext1(R, P)
  GroupPtr middle;  // R x_F P
  Cocycle w;        // Q x Q -> middle, projecting onto e's cocycle exactly

  const AbelianGroup& q() const { return e.source(); }
  const AbelianGroup& r() const { return e.target(); }
  const AbelianGroup& p() const { return f.target(); }
  int project(int m) const;
  int include(int p) const { return p; }
};

/// Normalizes `w` against E; throws std::invalid_argument unless the image of
/// w in Ext1(Q, R) is the class of E.
VariegatedClass make_variegated(const ExtClass& e, const ExtClass& f, const Cocycle& w);

/// Image of W in Ext1(Q, R) along the projection F -> R.
ExtClass pushforward(const VariegatedClass& w);

/// All classes over (E, F); budget |P|, |Q|, |R| <= 8. Never empty.
std::vector<VariegatedClass> extpan_fiber(const ExtClass& e, const ExtClass& f);

/// Pull back W + X along the diagonal of Q, push out along the codiagonal of P.
VariegatedClass act(const VariegatedClass& w, const ExtClass& x);
/// Pull back W + W' along the diagonal, push out along (p, p') -> p' - p.
ExtClass difference(const VariegatedClass& w, const VariegatedClass& w2);

/// Table of a filtered isomorphism W -> W' on the total groups
/// (element (q, m) at index q * |F| + m), identity on F and inducing the
/// identity on Q, if one exists.
std::optional<std::vector<int>> filtered_isomorphism(const VariegatedClass& w, const VariegatedClass& w2);
bool isomorphic(const VariegatedClass& w, const VariegatedClass& w2);

/// Splitting data of 0 -> P -> F -> E -> Q -> 0: the total group W with its
/// two diagonals F -> W -> Q and P -> W -> E.
struct Butterfly {
  GroupPtr total;           // Q x_w F, index q * |F| + m
  GroupPtr e_group;         // Q x_e R, index q * |R| + r
  std::vector<int> from_f;  // F -> W
  std::vector<int> from_p;  // P -> W
  std::vector<int> to_q;    // W -> Q
  std::vector<int> to_e;    // W -> E
};

Butterfly butterfly(const VariegatedClass& w);
/// Exactness of both diagonals and commutativity with F -> E.
std::vector<std::string> check_butterfly(const VariegatedClass& w, const Butterfly& b);

/// Image of Hom(Q, R) -> Ext1(Q, P), phi -> phi^* F, as distinct classes.
std::vector<ExtClass> connecting_image(GroupPtr q, const ExtClass& f);

struct TorsorReport {
  std::int64_t fiber_size = 0;
  std::int64_t ext1_order = 0;
  std::int64_t stabilizer_order = 0;
  std::int64_t connecting_image_order = 0;
  bool transitive = false;
  bool section_ok = false;
  bool stabilizer_is_connecting_image = false;
};

TorsorReport torsor_report(const ExtClass& e, const ExtClass& f);

}  // namespace logmono::extpan
