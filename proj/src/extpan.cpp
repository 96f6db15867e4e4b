#include "logmono/extpan.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace logmono::extpan {

namespace {

constexpr int kMaxGroupOrder = 4096;
constexpr int kExt1Budget = 12;
constexpr int kFiberBudget = 8;

std::size_t at(int i) { return static_cast<std::size_t>(i); }

void require_presented(const AbelianGroup& g, const char* role) {
  if (!g.presented()) throw std::invalid_argument(std::string(role) + " must be given by invariant factors");
}

void require_budget(const AbelianGroup& g, int budget, const char* role) {
  if (g.order() > budget)
    throw BudgetExceeded(std::string(role) + " has order " + std::to_string(g.order()) + ", budget is " +
                         std::to_string(budget));
}

// Cartesian product of candidate lists, first list slowest.
template <typename Fn>
void for_each_choice(const std::vector<std::vector<int>>& options, Fn&& fn) {
  for (const auto& o : options)
    if (o.empty()) return;
  std::vector<std::size_t> pos(options.size(), 0);
  std::vector<int> choice(options.size());
  for (;;) {
    for (std::size_t i = 0; i < options.size(); ++i) choice[i] = options[i][pos[i]];
    fn(std::as_const(choice));
    std::size_t i = options.size();
    while (i > 0) {
      --i;
      if (++pos[i] < options[i].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
    if (options.empty()) return;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// AbelianGroup

AbelianGroup::AbelianGroup() : order_(1), presented_(true), add_{0}, neg_{0} {}

AbelianGroup::AbelianGroup(std::vector<int> factors) : presented_(true), factors_(std::move(factors)) {
  order_ = 1;
  for (int m : factors_) {
    if (m < 2) throw std::invalid_argument("invariant factor " + std::to_string(m) + " is less than 2");
    if (order_ > kMaxGroupOrder / m) throw BudgetExceeded("group order exceeds " + std::to_string(kMaxGroupOrder));
    order_ *= m;
  }
  add_.resize(at(order_ * order_));
  neg_.resize(at(order_));
  for (int x = 0; x < order_; ++x) {
    const auto cx = coords(x);
    std::vector<int> c(cx.size());
    for (std::size_t i = 0; i < cx.size(); ++i) c[i] = (factors_[i] - cx[i]) % factors_[i];
    neg_[at(x)] = element(c);
    for (int y = 0; y < order_; ++y) {
      const auto cy = coords(y);
      for (std::size_t i = 0; i < cx.size(); ++i) c[i] = (cx[i] + cy[i]) % factors_[i];
      add_[at(x * order_ + y)] = element(c);
    }
  }
}

AbelianGroup AbelianGroup::parse(std::string_view spec) {
  if (spec.empty() || spec == "trivial") return AbelianGroup();
  std::vector<int> factors;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', start), spec.size());
    const std::string_view token = spec.substr(start, comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("group spec \"" + std::string(spec) + "\": \"" + std::string(token) +
                                  "\" is not an integer");
    if (value < 2)
      throw std::invalid_argument("group spec \"" + std::string(spec) + "\": invariant factor " +
                                  std::to_string(value) + " is less than 2");
    factors.push_back(value);
    start = comma + 1;
  }
  return AbelianGroup(std::move(factors));
}

AbelianGroup AbelianGroup::from_table(int order, std::vector<int> add_table) {
  if (order < 1 || order > kMaxGroupOrder) throw std::invalid_argument("group order out of range");
  if (add_table.size() != at(order * order)) throw std::invalid_argument("addition table has the wrong size");
  AbelianGroup g;
  g.order_ = order;
  g.presented_ = false;
  g.factors_.clear();
  g.add_ = std::move(add_table);
  g.neg_.assign(at(order), -1);
  for (int v : g.add_)
    if (v < 0 || v >= order) throw std::invalid_argument("addition table leaves the group");
  for (int x = 0; x < order; ++x) {
    if (g.add(0, x) != x || g.add(x, 0) != x) throw std::invalid_argument("0 is not the identity");
    for (int y = 0; y < order; ++y) {
      if (g.add(x, y) != g.add(y, x)) throw std::invalid_argument("addition is not commutative");
      if (g.add(x, y) == 0) g.neg_[at(x)] = y;
    }
    if (g.neg_[at(x)] < 0) throw std::invalid_argument("element without inverse");
  }
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      for (int z = 0; z < order; ++z)
        if (g.add(g.add(x, y), z) != g.add(x, g.add(y, z))) throw std::invalid_argument("addition is not associative");
  return g;
}

int AbelianGroup::scale(std::int64_t k, int x) const {
  if (k < 0) return scale(-k, neg(x));
  int result = 0;
  int base = x;
  while (k > 0) {
    if (k & 1) result = add(result, base);
    base = add(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<int> AbelianGroup::generators() const {
  require_presented(*this, "group");
  std::vector<int> gens;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::vector<int> c(factors_.size(), 0);
    c[i] = 1;
    gens.push_back(element(c));
  }
  return gens;
}

std::vector<int> AbelianGroup::coords(int x) const {
  std::vector<int> c(factors_.size());
  for (std::size_t i = factors_.size(); i > 0; --i) {
    c[i - 1] = x % factors_[i - 1];
    x /= factors_[i - 1];
  }
  return c;
}

int AbelianGroup::element(std::span<const int> c) const {
  int x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) x = x * factors_[i] + c[i];
  return x;
}

std::string AbelianGroup::describe() const {
  if (!presented_) return "group of order " + std::to_string(order_);
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "+Z/" : "Z/") + std::to_string(factors_[i]);
  return s;
}

bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
  return a.order_ == b.order_ && a.presented_ == b.presented_ && a.factors_ == b.factors_ && a.add_ == b.add_;
}

GroupPtr make_group(std::vector<int> factors) { return std::make_shared<const AbelianGroup>(std::move(factors)); }
GroupPtr make_group(AbelianGroup g) { return std::make_shared<const AbelianGroup>(std::move(g)); }

bool is_homomorphism(const AbelianGroup& source, const AbelianGroup& target, std::span<const int> map) {
  if (map.size() != at(source.order())) return false;
  for (int v : map)
    if (v < 0 || v >= target.order()) return false;
  for (int x = 0; x < source.order(); ++x)
    for (int y = 0; y < source.order(); ++y)
      if (map[at(source.add(x, y))] != target.add(map[at(x)], map[at(y)])) return false;
  return true;
}

std::vector<std::vector<int>> homomorphisms(const AbelianGroup& source, const AbelianGroup& target) {
  require_presented(source, "source");
  std::vector<std::vector<int>> options;
  for (int m : source.factors()) {
    std::vector<int> killed;
    for (int t = 0; t < target.order(); ++t)
      if (target.scale(m, t) == 0) killed.push_back(t);
    options.push_back(std::move(killed));
  }
  std::vector<std::vector<int>> out;
  for_each_choice(options, [&](const std::vector<int>& images) {
    std::vector<int> map(at(source.order()));
    for (int x = 0; x < source.order(); ++x) {
      const auto c = source.coords(x);
      int v = 0;
      for (std::size_t i = 0; i < c.size(); ++i) v = target.add(v, target.scale(c[i], images[i]));
      map[at(x)] = v;
    }
    out.push_back(std::move(map));
  });
  return out;
}

// ---------------------------------------------------------------------------
// Cocycle

Cocycle make_unchecked(GroupPtr source, GroupPtr target, std::vector<int> table) {
  return Cocycle(std::move(source), std::move(target), std::move(table), Cocycle::Unchecked{});
}

Cocycle::Cocycle(GroupPtr source, GroupPtr target, std::vector<int> table, Unchecked)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {}

Cocycle::Cocycle(GroupPtr source, GroupPtr target, std::vector<int> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (!source_ || !target_) throw std::invalid_argument("cocycle needs source and target groups");
  const auto violations = cocycle_violations(*source_, *target_, table_);
  if (!violations.empty()) throw std::invalid_argument("not a normalized symmetric cocycle: " + violations.front());
}

Cocycle Cocycle::zero(GroupPtr source, GroupPtr target) {
  const int n = source->order();
  return make_unchecked(std::move(source), std::move(target), std::vector<int>(at(n * n), 0));
}

bool Cocycle::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](int v) { return v == 0; });
}

namespace {

void require_same_shape(const Cocycle& x, const Cocycle& y) {
  if (!(x.source() == y.source()) || !(x.target() == y.target()))
    throw std::invalid_argument("cocycles have different source or target groups");
}

}  // namespace

Cocycle operator+(const Cocycle& x, const Cocycle& y) {
  require_same_shape(x, y);
  std::vector<int> t(x.table_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = x.target().add(x.table_[i], y.table_[i]);
  return make_unchecked(x.source_, x.target_, std::move(t));
}

Cocycle operator-(const Cocycle& x) {
  std::vector<int> t(x.table_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = x.target().neg(x.table_[i]);
  return make_unchecked(x.source_, x.target_, std::move(t));
}

Cocycle operator-(const Cocycle& x, const Cocycle& y) { return x + (-y); }

bool operator==(const Cocycle& x, const Cocycle& y) {
  return x.source() == y.source() && x.target() == y.target() && x.table_ == y.table_;
}

std::vector<std::string> cocycle_violations(const AbelianGroup& source, const AbelianGroup& target,
                                            std::span<const int> table) {
  std::vector<std::string> out;
  const int n = source.order();
  if (table.size() != at(n * n)) {
    out.push_back("table has " + std::to_string(table.size()) + " entries, expected " + std::to_string(n * n));
    return out;
  }
  auto f = [&](int a, int b) { return table[at(a * n + b)]; };
  for (int v : table)
    if (v < 0 || v >= target.order()) {
      out.push_back("value " + std::to_string(v) + " is not an element of the target");
      return out;
    }
  for (int a = 0; a < n; ++a) {
    if (f(0, a) != 0 || f(a, 0) != 0) out.push_back("not normalized at element " + std::to_string(a));
    for (int b = 0; b < n; ++b)
      if (f(a, b) != f(b, a)) out.push_back("not symmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (target.add(f(a, b), f(source.add(a, b), c)) != target.add(f(b, c), f(a, source.add(b, c))))
          out.push_back("cocycle identity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + ")");
  return out;
}

Cocycle coboundary(GroupPtr source, GroupPtr target, std::span<const int> h) {
  const int n = source->order();
  if (h.size() != at(n) || h[0] != 0) throw std::invalid_argument("cochain must be defined on Q and vanish at 0");
  std::vector<int> t(at(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[at(a * n + b)] = target->sub(target->add(h[at(a)], h[at(b)]), h[at(source->add(a, b))]);
  return make_unchecked(std::move(source), std::move(target), std::move(t));
}

std::optional<std::vector<int>> coboundary_witness(const Cocycle& d) {
  const AbelianGroup& q = d.source();
  const AbelianGroup& a = d.target();
  require_presented(q, "cocycle source");

  // elements of the extension X = Q x A twisted by d
  struct Pair {
    int q;
    int a;
  };
  auto add = [&](Pair x, Pair y) { return Pair{q.add(x.q, y.q), a.add(a.add(x.a, y.a), d(x.q, y.q))}; };

  const auto gens = q.generators();
  std::vector<Pair> lifts;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int m = q.factors()[i];
    std::optional<Pair> found;
    for (int c = 0; c < a.order() && !found; ++c) {
      Pair s{0, 0};
      for (int k = 0; k < m; ++k) s = add(s, Pair{gens[i], c});
      if (s.a == 0) found = Pair{gens[i], c};
    }
    if (!found) return std::nullopt;
    lifts.push_back(*found);
  }

  // the lifts generate a section Q -> X; its A-part is -h
  std::vector<int> h(at(q.order()));
  for (int x = 0; x < q.order(); ++x) {
    const auto c = q.coords(x);
    Pair s{0, 0};
    for (std::size_t i = 0; i < c.size(); ++i)
      for (int k = 0; k < c[i]; ++k) s = add(s, lifts[i]);
    h[at(x)] = a.neg(s.a);
  }
  if (!(coboundary(d.source_ptr(), d.target_ptr(), h) == d))
    throw std::logic_error("section of an abelian extension failed to split the cocycle");
  return h;
}

bool cohomologous(const Cocycle& x, const Cocycle& y) { return coboundary_witness(x - y).has_value(); }

std::vector<int> coset_representatives(const AbelianGroup& group, int m) {
  std::set<int> multiples;
  for (int x = 0; x < group.order(); ++x) multiples.insert(group.scale(m, x));
  std::vector<int> reps;
  for (int x = 0; x < group.order(); ++x) {
    int least = x;
    for (int y : multiples) least = std::min(least, group.add(x, y));
    if (least == x) reps.push_back(x);
  }
  return reps;
}

std::vector<int> class_invariant(const Cocycle& f) {
  const AbelianGroup& q = f.source();
  const AbelianGroup& a = f.target();
  require_presented(q, "cocycle source");
  const auto gens = q.generators();
  std::vector<int> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int m = q.factors()[i];
    int c = 0;
    int multiple = 0;
    for (int k = 0; k < m; ++k) {
      c = a.add(c, f(multiple, gens[i]));
      multiple = q.add(multiple, gens[i]);
    }
    int least = c;
    for (int x = 0; x < a.order(); ++x) least = std::min(least, a.add(c, a.scale(m, x)));
    out.push_back(least);
  }
  return out;
}

Cocycle carry_cocycle(GroupPtr source, GroupPtr target, std::span<const int> coefficients) {
  require_presented(*source, "cocycle source");
  const auto& factors = source->factors();
  if (coefficients.size() != factors.size()) throw std::invalid_argument("need one coefficient per cyclic factor");
  const int n = source->order();
  std::vector<std::vector<int>> coords(at(n));
  for (int x = 0; x < n; ++x) coords[at(x)] = source->coords(x);
  std::vector<int> t(at(n * n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = 0;
      for (std::size_t i = 0; i < factors.size(); ++i)
        if (coords[at(x)][i] + coords[at(y)][i] >= factors[i]) v = target->add(v, coefficients[i]);
      t[at(x * n + y)] = v;
    }
  return make_unchecked(std::move(source), std::move(target), std::move(t));
}

// ---------------------------------------------------------------------------
// Ext1

bool ExtClass::is_split() const { return coboundary_witness(cocycle_).has_value(); }

ExtClass split_class(GroupPtr source, GroupPtr target) {
  return ExtClass(Cocycle::zero(std::move(source), std::move(target)));
}

std::int64_t ext1_order(const AbelianGroup& source, const AbelianGroup& target) {
  require_presented(source, "source");
  std::int64_t order = 1;
  for (int m : source.factors()) order *= static_cast<std::int64_t>(coset_representatives(target, m).size());
  return order;
}

std::vector<ExtClass> ext1_representatives(GroupPtr source, GroupPtr target) {
  require_presented(*source, "source");
  std::vector<std::vector<int>> options;
  for (int m : source->factors()) options.push_back(coset_representatives(*target, m));
  std::vector<ExtClass> out;
  for_each_choice(options, [&](const std::vector<int>& c) { out.emplace_back(carry_cocycle(source, target, c)); });
  return out;
}

std::vector<ExtClass> ext1_classes(GroupPtr q, GroupPtr p) {
  require_presented(*q, "Q");
  require_presented(*p, "P");
  require_budget(*q, kExt1Budget, "Q");
  require_budget(*p, kExt1Budget, "P");
  return ext1_representatives(std::move(q), std::move(p));
}

ExtClass baer_sum(const ExtClass& x, const ExtClass& y) { return ExtClass(x.cocycle() + y.cocycle()); }

ExtClass negate(const ExtClass& x) { return ExtClass(-x.cocycle()); }

ExtClass pushforward(const ExtClass& x, GroupPtr new_target, std::span<const int> hom) {
  if (!is_homomorphism(x.target(), *new_target, hom)) throw std::invalid_argument("pushforward along a non-homomorphism");
  std::vector<int> t(x.cocycle().table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = hom[at(x.cocycle().table()[i])];
  return ExtClass(make_unchecked(x.cocycle().source_ptr(), std::move(new_target), std::move(t)));
}

ExtClass pullback(const ExtClass& x, GroupPtr new_source, std::span<const int> hom) {
  if (!is_homomorphism(*new_source, x.source(), hom)) throw std::invalid_argument("pullback along a non-homomorphism");
  const int n = new_source->order();
  std::vector<int> t(at(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[at(a * n + b)] = x.cocycle()(hom[at(a)], hom[at(b)]);
  return ExtClass(make_unchecked(std::move(new_source), x.cocycle().target_ptr(), std::move(t)));
}

GroupPtr twisted_group(const Cocycle& f) {
  const AbelianGroup& r = f.source();
  const AbelianGroup& p = f.target();
  const int n = r.order() * p.order();
  std::vector<int> t(at(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int rx = x / p.order(), px = x % p.order();
      const int ry = y / p.order(), py = y % p.order();
      t[at(x * n + y)] = r.add(rx, ry) * p.order() + p.add(p.add(px, py), f(rx, ry));
    }
  return make_group(AbelianGroup::from_table(n, std::move(t)));
}

// ---------------------------------------------------------------------------
// Variegated extensions

int VariegatedClass::project(int m) const { return m / p().order(); }

namespace {

Cocycle project_cocycle(const VariegatedClass& v, const Cocycle& w) {
  std::vector<int> t(w.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = v.project(w.table()[i]);
  return make_unchecked(v.e.cocycle().source_ptr(), v.e.cocycle().target_ptr(), std::move(t));
}

void require_same_fiber(const VariegatedClass& x, const VariegatedClass& y) {
  if (!(x.e.cocycle() == y.e.cocycle()) || !(x.f.cocycle() == y.f.cocycle()) || !(*x.middle == *y.middle))
    throw std::invalid_argument("variegated extensions lie over different (E, F)");
}

}  // namespace

VariegatedClass make_variegated(const ExtClass& e, const ExtClass& f, const Cocycle& w) {
  if (!(e.target() == f.source())) throw std::invalid_argument("E must extend Q by the quotient R of F");
  if (!(w.source() == e.source())) throw std::invalid_argument("W must be an extension of Q");
  GroupPtr middle = twisted_group(f.cocycle());
  if (!(w.target() == *middle)) throw std::invalid_argument("W must be an extension by the middle group of F");

  VariegatedClass v{e, f, middle, w};
  const Cocycle image = project_cocycle(v, w);
  const auto h = coboundary_witness(image - e.cocycle());
  if (!h) throw std::invalid_argument("W does not project to the class of E");

  // subtract the coboundary of the set-theoretic lift r -> (r, 0)
  std::vector<int> lifted(h->size());
  for (std::size_t i = 0; i < lifted.size(); ++i) lifted[i] = (*h)[i] * v.p().order();
  v.w = w - coboundary(w.source_ptr(), middle, lifted);
  if (!(project_cocycle(v, v.w) == e.cocycle())) throw std::logic_error("normalization of W failed");
  return v;
}

ExtClass pushforward(const VariegatedClass& w) { return ExtClass(project_cocycle(w, w.w)); }

std::vector<VariegatedClass> extpan_fiber(const ExtClass& e, const ExtClass& f) {
  require_budget(e.source(), kFiberBudget, "Q");
  require_budget(e.target(), kFiberBudget, "R");
  require_budget(f.target(), kFiberBudget, "P");
  if (!(e.target() == f.source())) throw std::invalid_argument("E must extend Q by the quotient R of F");

  GroupPtr middle = twisted_group(f.cocycle());
  std::vector<VariegatedClass> fiber;
  VariegatedClass probe{e, f, middle, Cocycle::zero(e.cocycle().source_ptr(), middle)};
  for (const auto& candidate : ext1_representatives(e.cocycle().source_ptr(), middle)) {
    if (!cohomologous(project_cocycle(probe, candidate.cocycle()), e.cocycle())) continue;
    fiber.push_back(make_variegated(e, f, candidate.cocycle()));
  }
  if (fiber.empty()) throw std::logic_error("empty fiber: Ext2 vanishes for abelian groups");
  return fiber;
}

VariegatedClass act(const VariegatedClass& w, const ExtClass& x) {
  if (!(x.source() == w.q()) || !(x.target() == w.p()))
    throw std::invalid_argument("acting class must lie in Ext1(Q, P)");
  std::vector<int> t(w.w.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = w.middle->add(w.w.table()[i], w.include(x.cocycle().table()[i]));
  VariegatedClass out = w;
  out.w = make_unchecked(w.w.source_ptr(), w.middle, std::move(t));
  return out;
}

ExtClass difference(const VariegatedClass& w, const VariegatedClass& w2) {
  require_same_fiber(w, w2);
  std::vector<int> t(w.w.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const int m = w.middle->sub(w2.w.table()[i], w.w.table()[i]);
    if (w.project(m) != 0) throw std::logic_error("difference of normalized cocycles left P");
    t[i] = m;
  }
  return ExtClass(Cocycle(w.e.cocycle().source_ptr(), w.f.cocycle().target_ptr(), std::move(t)));
}

std::optional<std::vector<int>> filtered_isomorphism(const VariegatedClass& w, const VariegatedClass& w2) {
  require_same_fiber(w, w2);
  const auto k = coboundary_witness(w2.w - w.w);
  if (!k) return std::nullopt;
  const int nm = w.middle->order();
  std::vector<int> iso(at(w.q().order() * nm));
  for (int q = 0; q < w.q().order(); ++q)
    for (int m = 0; m < nm; ++m) iso[at(q * nm + m)] = q * nm + w.middle->sub(m, (*k)[at(q)]);
  return iso;
}

bool isomorphic(const VariegatedClass& w, const VariegatedClass& w2) { return filtered_isomorphism(w, w2).has_value(); }

Butterfly butterfly(const VariegatedClass& w) {
  Butterfly b;
  b.total = twisted_group(w.w);
  b.e_group = twisted_group(w.e.cocycle());
  const int nm = w.middle->order();
  const int nr = w.r().order();
  for (int m = 0; m < nm; ++m) b.from_f.push_back(m);
  for (int p = 0; p < w.p().order(); ++p) b.from_p.push_back(w.include(p));
  for (int x = 0; x < b.total->order(); ++x) {
    b.to_q.push_back(x / nm);
    b.to_e.push_back((x / nm) * nr + w.project(x % nm));
  }
  return b;
}

namespace {

void check_short_exact(const AbelianGroup& a, const AbelianGroup& b, const AbelianGroup& c, std::span<const int> i,
                       std::span<const int> j, const std::string& name, std::vector<std::string>& out) {
  if (!is_homomorphism(a, b, i) || !is_homomorphism(b, c, j)) {
    out.push_back(name + ": maps are not homomorphisms");
    return;
  }
  std::set<int> image(i.begin(), i.end());
  if (image.size() != i.size()) out.push_back(name + ": first map is not injective");
  if (std::set<int>(j.begin(), j.end()).size() != at(c.order())) out.push_back(name + ": second map is not surjective");
  std::set<int> kernel;
  for (int x = 0; x < b.order(); ++x)
    if (j[at(x)] == 0) kernel.insert(x);
  if (kernel != image) out.push_back(name + ": not exact in the middle");
}

}  // namespace

std::vector<std::string> check_butterfly(const VariegatedClass& w, const Butterfly& b) {
  std::vector<std::string> out;
  check_short_exact(*w.middle, *b.total, w.q(), b.from_f, b.to_q, "0 -> F -> W -> Q -> 0", out);
  check_short_exact(w.p(), *b.total, *b.e_group, b.from_p, b.to_e, "0 -> P -> W -> E -> 0", out);
  const int nr = w.r().order();
  for (int m = 0; m < w.middle->order(); ++m)
    if (b.to_e[at(b.from_f[at(m)])] != w.project(m) % nr) out.push_back("F -> W -> E differs from F -> R -> E");
  for (int p = 0; p < w.p().order(); ++p)
    if (b.from_p[at(p)] != b.from_f[at(w.include(p))]) out.push_back("P -> W differs from P -> F -> W");
  return out;
}

std::vector<ExtClass> connecting_image(GroupPtr q, const ExtClass& f) {
  std::vector<ExtClass> image;
  for (const auto& phi : homomorphisms(*q, f.source())) {
    ExtClass x = pullback(f, q, phi);
    if (std::none_of(image.begin(), image.end(), [&](const ExtClass& y) { return y == x; }))
      image.push_back(std::move(x));
  }
  return image;
}

TorsorReport torsor_report(const ExtClass& e, const ExtClass& f) {
  const auto fiber = extpan_fiber(e, f);
  const GroupPtr q = e.cocycle().source_ptr();
  const GroupPtr p = f.cocycle().target_ptr();
  const auto ext1 = ext1_representatives(q, p);
  const auto image = connecting_image(q, f);

  auto locate = [&](const VariegatedClass& v) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < fiber.size(); ++i)
      if (isomorphic(v, fiber[i])) return i;
    return std::nullopt;
  };
  auto in_image = [&](const ExtClass& x) {
    return std::any_of(image.begin(), image.end(), [&](const ExtClass& y) { return y == x; });
  };

  TorsorReport report;
  report.fiber_size = static_cast<std::int64_t>(fiber.size());
  report.ext1_order = static_cast<std::int64_t>(ext1.size());
  report.connecting_image_order = static_cast<std::int64_t>(image.size());

  // action table: where each class goes under each element of Ext1(Q, P)
  bool closed = true;
  std::vector<std::vector<std::optional<std::size_t>>> moves(fiber.size());
  for (std::size_t i = 0; i < fiber.size(); ++i)
    for (const auto& x : ext1) {
      moves[i].push_back(locate(act(fiber[i], x)));
      if (!moves[i].back()) closed = false;
    }

  std::set<std::size_t> orbit;
  for (const auto& target : moves[0])
    if (target) orbit.insert(*target);
  report.transitive = closed && orbit.size() == fiber.size();

  report.stabilizer_is_connecting_image = closed;
  for (std::size_t i = 0; i < fiber.size() && closed; ++i) {
    std::int64_t stabilizer = 0;
    for (std::size_t k = 0; k < ext1.size(); ++k) {
      const bool fixes = moves[i][k] == i;
      stabilizer += fixes ? 1 : 0;
      if (fixes != in_image(ext1[k])) report.stabilizer_is_connecting_image = false;
    }
    if (i == 0) report.stabilizer_order = stabilizer;
  }

  bool section = closed;
  for (std::size_t i = 0; i < fiber.size() && section; ++i) {
    if (!difference(fiber[i], fiber[i]).is_split()) section = false;
    for (std::size_t j = 0; j < fiber.size() && section; ++j)
      if (locate(act(fiber[i], difference(fiber[i], fiber[j]))) != j) section = false;
    for (const auto& x : ext1) {
      if (!section) break;
      const ExtClass d = difference(fiber[i], act(fiber[i], x));
      if (!in_image(baer_sum(d, negate(x)))) section = false;
    }
  }
  report.section_ok = section;
  return report;
}

}  // namespace logmono::extpan
