#pragma once

// Exact integer linear algebra on Eigen dense matrices: Smith normal form,
// fraction-free determinants, rank and modular reduction. Routines returning
// integers are templated on the scalar and work in 128-bit intermediates; a
// result that does not fit back into the scalar raises std::overflow_error.
// Sign-only tests (definiteness) run in arbitrary precision.

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logmono {

using Integer = std::int64_t;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = VectorX<Integer>;
using IntMatrix = MatrixX<Integer>;

namespace detail {

using Wide = __int128;

inline Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in exact arithmetic");
  return r;
}

inline Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in exact arithmetic");
  return r;
}

inline Wide checked_sub(Wide a, Wide b) {
  Wide r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in exact arithmetic");
  return r;
}

template <typename Scalar>
Scalar narrow(Wide v) {
  if (v > static_cast<Wide>(std::numeric_limits<Scalar>::max()) ||
      v < static_cast<Wide>(std::numeric_limits<Scalar>::min()))
    throw std::overflow_error("exact result does not fit the scalar type");
  return static_cast<Scalar>(v);
}

inline Wide abs_wide(Wide v) { return v < 0 ? -v : v; }

// Row-major scratch copy used by the elimination routines.
struct WideMatrix {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::vector<Wide> data;

  Wide& operator()(Eigen::Index i, Eigen::Index j) { return data[static_cast<std::size_t>(i * cols + j)]; }
  Wide operator()(Eigen::Index i, Eigen::Index j) const { return data[static_cast<std::size_t>(i * cols + j)]; }

  void swap_rows(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    for (Eigen::Index j = 0; j < cols; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    for (Eigen::Index i = 0; i < rows; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
};

template <typename Derived>
WideMatrix widen(const Eigen::MatrixBase<Derived>& m) {
  WideMatrix w{m.rows(), m.cols(), std::vector<Wide>(static_cast<std::size_t>(m.rows() * m.cols()))};
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) w(i, j) = static_cast<Wide>(m(i, j));
  return w;
}

// Invariant factors of an integer matrix, in divisibility order.
inline std::vector<Wide> smith_diagonal(WideMatrix a) {
  std::vector<Wide> diag;
  const Eigen::Index n = std::min(a.rows, a.cols);
  for (Eigen::Index t = 0; t < n; ++t) {
    for (;;) {
      // pivot: nonzero entry of least absolute value in the trailing block
      Eigen::Index pi = -1, pj = -1;
      Wide best = 0;
      for (Eigen::Index i = t; i < a.rows; ++i)
        for (Eigen::Index j = t; j < a.cols; ++j)
          if (a(i, j) != 0 && (pi < 0 || abs_wide(a(i, j)) < best)) {
            best = abs_wide(a(i, j));
            pi = i;
            pj = j;
          }
      if (pi < 0) return diag;
      a.swap_rows(t, pi);
      a.swap_cols(t, pj);

      bool clean = true;
      const Wide p = a(t, t);
      for (Eigen::Index i = t + 1; i < a.rows; ++i) {
        if (a(i, t) == 0) continue;
        const Wide q = a(i, t) / p;
        for (Eigen::Index j = t; j < a.cols; ++j) a(i, j) = checked_sub(a(i, j), checked_mul(q, a(t, j)));
        if (a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < a.cols; ++j) {
        if (a(t, j) == 0) continue;
        const Wide q = a(t, j) / p;
        for (Eigen::Index i = t; i < a.rows; ++i) a(i, j) = checked_sub(a(i, j), checked_mul(q, a(i, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // the pivot must divide the whole trailing block
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < a.rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < a.cols; ++j)
          if (a(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (Eigen::Index j = t; j < a.cols; ++j) a(t, j) = checked_add(a(t, j), a(bad, j));
    }
    diag.push_back(abs_wide(a(t, t)));
  }
  return diag;
}

// Bareiss elimination with row pivoting; exact for integer input.
inline Wide bareiss_determinant(WideMatrix a) {
  const Eigen::Index n = a.rows;
  if (n == 0) return 1;
  Wide sign = 1;
  Wide prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j))) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

using Big = boost::multiprecision::cpp_int;

template <typename Derived>
std::vector<Big> to_big(const Eigen::MatrixBase<Derived>& m) {
  std::vector<Big> a(static_cast<std::size_t>(m.rows() * m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a[static_cast<std::size_t>(i * m.cols() + j)] = m(i, j);
  return a;
}

// Bareiss without pivoting on an n x n row-major matrix; the k-th pivot is
// the k-th leading principal minor. Returns how many leading minors are
// positive before the first one that is not.
inline Eigen::Index positive_pivots(std::vector<Big> a, Eigen::Index n) {
  auto at = [&](Eigen::Index i, Eigen::Index j) -> Big& { return a[static_cast<std::size_t>(i * n + j)]; };
  Big prev = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (at(k, k) <= 0) return k;
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return n;
}

// Sign of the determinant, Bareiss with row pivoting.
inline int determinant_sign(std::vector<Big> a, Eigen::Index n) {
  auto at = [&](Eigen::Index i, Eigen::Index j) -> Big& { return a[static_cast<std::size_t>(i * n + j)]; };
  if (n == 0) return 1;
  int sign = 1;
  Big prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (Eigen::Index j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1).sign();
}

}  // namespace detail

/// Nonzero invariant factors d1 | d2 | ... of `m` (all positive).
template <typename Derived>
std::vector<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  std::vector<Scalar> out;
  for (detail::Wide d : detail::smith_diagonal(detail::widen(m))) out.push_back(detail::narrow<Scalar>(d));
  return out;
}

template <typename Derived>
Eigen::Index integer_rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(detail::smith_diagonal(detail::widen(m)).size());
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  return detail::narrow<typename Derived::Scalar>(detail::bareiss_determinant(detail::widen(m)));
}

/// Leading principal minors det(m[0..k, 0..k]) for k = 1..n.
template <typename Derived>
std::vector<typename Derived::Scalar> leading_principal_minors(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("leading minors of a non-square matrix");
  std::vector<typename Derived::Scalar> minors;
  for (Eigen::Index k = 1; k <= m.rows(); ++k) minors.push_back(determinant(m.topLeftCorner(k, k)));
  return minors;
}

/// True iff every leading principal minor is positive. Decides by sign
/// only, so minors beyond the scalar range are fine.
template <typename Derived>
bool leading_minors_positive(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("leading minors of a non-square matrix");
  return detail::positive_pivots(detail::to_big(m), m.rows()) == m.rows();
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols() && m == m.transpose();
}

/// Exact semidefiniteness: every principal minor is nonnegative.
template <typename Derived>
bool is_positive_semidefinite(const Eigen::MatrixBase<Derived>& m) {
  if (!is_symmetric(m)) return false;
  const Eigen::Index n = m.rows();
  if (n > 20) throw std::invalid_argument("principal-minor test limited to 20x20 matrices");
  using Scalar = typename Derived::Scalar;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    MatrixX<Scalar> sub(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = m(idx[i], idx[j]);
    int sign;
    try {
      const detail::Wide d = detail::bareiss_determinant(detail::widen(sub));
      sign = d < 0 ? -1 : (d > 0 ? 1 : 0);
    } catch (const std::overflow_error&) {
      sign = detail::determinant_sign(detail::to_big(sub), sub.rows());
    }
    if (sign < 0) return false;
  }
  return true;
}

/// Least nonnegative residue.
template <typename Scalar>
Scalar mod_floor(Scalar v, Scalar n) {
  const Scalar r = v % n;
  return r < 0 ? r + n : r;
}

template <typename Derived>
MatrixX<typename Derived::Scalar> reduce_mod(const Eigen::MatrixBase<Derived>& m, typename Derived::Scalar n) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  return m.unaryExpr([n](typename Derived::Scalar v) { return mod_floor(v, n); });
}

/// Matrix product reduced modulo n; n == 0 means plain integer product.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> mul_mod(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                                           typename DerivedA::Scalar n) {
  using Scalar = typename DerivedA::Scalar;
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  MatrixX<Scalar> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      detail::Wide acc = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        acc = detail::checked_add(acc, detail::checked_mul(a(i, k), b(k, j)));
        if (n > 0) acc %= n;
      }
      out(i, j) = n > 0 ? mod_floor(detail::narrow<Scalar>(acc), n) : detail::narrow<Scalar>(acc);
    }
  return out;
}

}  // namespace logmono
