#pragma once

// Hermite and Smith normal forms over the integers, generic in the scalar
// type (toric::Integer in production; long long where callers know entries
// stay small).

#include "toric/linalg/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace toric {

namespace detail {

template <class Scalar>
Scalar magnitude(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

// row(target) -= q * row(source)
template <class Scalar>
void sub_row(Matrix<Scalar>& m, Index target, Index source, const Scalar& q) {
  if (is_zero(q)) return;
  for (Index c = 0; c < m.cols(); ++c) {
    const Scalar& s = m(source, c);
    if (!is_zero(s)) m(target, c) -= q * s;
  }
}

// col(target) -= q * col(source)
template <class Scalar>
void sub_col(Matrix<Scalar>& m, Index target, Index source, const Scalar& q) {
  if (is_zero(q)) return;
  for (Index r = 0; r < m.rows(); ++r) {
    const Scalar& s = m(r, source);
    if (!is_zero(s)) m(r, target) -= q * s;
  }
}

template <class Scalar>
void negate_row(Matrix<Scalar>& m, Index r) {
  for (Index c = 0; c < m.cols(); ++c) {
    if (!is_zero(m(r, c))) m(r, c) = -m(r, c);
  }
}

template <class Scalar>
void negate_col(Matrix<Scalar>& m, Index c) {
  for (Index r = 0; r < m.rows(); ++r) {
    if (!is_zero(m(r, c))) m(r, c) = -m(r, c);
  }
}

}  // namespace detail

/// Row-style Hermite normal form: transform * input = h, with h in row
/// echelon form, positive pivots, and entries above each pivot in [0, pivot).
template <class Scalar>
struct HermiteDecomposition {
  Matrix<Scalar> h;
  Matrix<Scalar> transform;  // unimodular
  std::vector<Index> pivot_columns;

  [[nodiscard]] Index rank() const { return static_cast<Index>(pivot_columns.size()); }
};

template <class Derived>
HermiteDecomposition<typename Derived::Scalar> hnf(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using detail::magnitude;
  HermiteDecomposition<Scalar> out;
  Matrix<Scalar>& h = out.h;
  Matrix<Scalar>& t = out.transform;
  h = input;
  t = Matrix<Scalar>::Identity(h.rows(), h.rows());

  Index row = 0;
  for (Index col = 0; col < h.cols() && row < h.rows(); ++col) {
    bool has_pivot = false;
    for (;;) {
      // Smallest nonzero magnitude at or below `row`, lowest row index on ties.
      Index best = -1;
      for (Index r = row; r < h.rows(); ++r) {
        if (is_zero(h(r, col))) continue;
        if (best < 0 || magnitude(h(r, col)) < magnitude(h(best, col))) best = r;
      }
      if (best < 0) break;
      has_pivot = true;
      if (best != row) {
        h.row(best).swap(h.row(row));
        t.row(best).swap(t.row(row));
      }
      bool clean = true;
      for (Index r = row + 1; r < h.rows(); ++r) {
        if (is_zero(h(r, col))) continue;
        Scalar q = floor_div(h(r, col), h(row, col));
        detail::sub_row(h, r, row, q);
        detail::sub_row(t, r, row, q);
        if (!is_zero(h(r, col))) clean = false;
      }
      if (clean) break;
    }
    if (!has_pivot) continue;
    if (h(row, col) < Scalar(0)) {
      detail::negate_row(h, row);
      detail::negate_row(t, row);
    }
    for (Index r = 0; r < row; ++r) {
      Scalar q = floor_div(h(r, col), h(row, col));
      detail::sub_row(h, r, row, q);
      detail::sub_row(t, r, row, q);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  return out;
}

/// u * input * v = s with u, v unimodular and s diagonal; the nonzero
/// diagonal entries are positive, lead the zero ones, and divide each other
/// in order. The inverses of u and v are tracked alongside.
template <class Scalar>
struct SmithDecomposition {
  Matrix<Scalar> u;
  Matrix<Scalar> s;
  Matrix<Scalar> v;
  Matrix<Scalar> u_inverse;
  Matrix<Scalar> v_inverse;
  Index rank = 0;

  [[nodiscard]] std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    for (Index i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
    return d;
  }
};

template <class Derived>
SmithDecomposition<typename Derived::Scalar> snf(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using detail::magnitude;
  SmithDecomposition<Scalar> out;
  Matrix<Scalar>& s = out.s;
  Matrix<Scalar>& u = out.u;
  Matrix<Scalar>& ui = out.u_inverse;
  Matrix<Scalar>& v = out.v;
  Matrix<Scalar>& vi = out.v_inverse;
  s = input;
  const Index m = s.rows(), n = s.cols();
  u = Matrix<Scalar>::Identity(m, m);
  ui = Matrix<Scalar>::Identity(m, m);
  v = Matrix<Scalar>::Identity(n, n);
  vi = Matrix<Scalar>::Identity(n, n);

  auto swap_rows = [&](Index a, Index b) {
    if (a == b) return;
    s.row(a).swap(s.row(b));
    u.row(a).swap(u.row(b));
    ui.col(a).swap(ui.col(b));
  };
  auto swap_cols = [&](Index a, Index b) {
    if (a == b) return;
    s.col(a).swap(s.col(b));
    v.col(a).swap(v.col(b));
    vi.row(a).swap(vi.row(b));
  };
  // row(i) -= q row(t)
  auto row_op = [&](Index i, Index t, const Scalar& q) {
    detail::sub_row(s, i, t, q);
    detail::sub_row(u, i, t, q);
    detail::sub_col(ui, t, i, Scalar(-q));
  };
  // col(j) -= q col(t)
  auto col_op = [&](Index j, Index t, const Scalar& q) {
    detail::sub_col(s, j, t, q);
    detail::sub_col(v, j, t, q);
    detail::sub_row(vi, t, j, Scalar(-q));
  };

  const Index diag = std::min(m, n);
  Index t = 0;
  for (; t < diag; ++t) {
    bool found_any = false;
    for (;;) {
      // Smallest nonzero magnitude in the trailing block, lexicographic ties.
      Index bi = -1, bj = -1;
      for (Index i = t; i < m; ++i) {
        for (Index j = t; j < n; ++j) {
          if (is_zero(s(i, j))) continue;
          if (bi < 0 || magnitude(s(i, j)) < magnitude(s(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi < 0) break;
      found_any = true;
      swap_rows(t, bi);
      swap_cols(t, bj);

      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (is_zero(s(i, t))) continue;
        row_op(i, t, floor_div(s(i, t), s(t, t)));
        if (!is_zero(s(i, t))) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (is_zero(s(t, j))) continue;
        col_op(j, t, floor_div(s(t, j), s(t, t)));
        if (!is_zero(s(t, j))) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide everything left in the trailing block.
      Index bad = -1;
      for (Index i = t + 1; i < m && bad < 0; ++i) {
        for (Index j = t + 1; j < n; ++j) {
          if (!is_zero(mod_floor(s(i, j), s(t, t)))) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      row_op(t, bad, Scalar(-1));  // row(t) += row(bad)
    }
    if (!found_any) break;
    if (s(t, t) < Scalar(0)) {
      detail::negate_row(s, t);
      detail::negate_row(u, t);
      detail::negate_col(ui, t);
    }
  }
  out.rank = t;
  return out;
}

/// Rank over the rationals.
template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& a) {
  return hnf(a).rank();
}

/// |det| of a square matrix, via the Smith form.
template <class Derived>
typename Derived::Scalar abs_determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  auto d = snf(a);
  if (d.rank < a.rows()) return Scalar(0);
  Scalar p = 1;
  for (Index i = 0; i < d.rank; ++i) p *= d.s(i, i);
  return p;
}

}  // namespace toric
