#pragma once

#include "toric/integer.hpp"

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace toric {

using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

/// Builds a matrix from nested initializer data, row by row.
template <class Scalar = Integer>
Matrix<Scalar> matrix_from_rows(const std::vector<std::vector<Scalar>>& rows, Index cols = -1) {
  Index n = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<Index>(rows.front().size()));
  Matrix<Scalar> m(static_cast<Index>(rows.size()), n);
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

template <class Scalar = Integer>
Vector<Scalar> vector_from(const std::vector<Scalar>& values) {
  Vector<Scalar> v(static_cast<Index>(values.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = values[static_cast<std::size_t>(i)];
  return v;
}

template <class Derived>
std::vector<typename Derived::Scalar> to_std_vector(const Eigen::MatrixBase<Derived>& v) {
  std::vector<typename Derived::Scalar> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

/// Stacks matrices with equal column counts vertically.
template <class Scalar>
Matrix<Scalar> vstack(const std::vector<Matrix<Scalar>>& blocks, Index cols) {
  Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix<Scalar> out(rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    if (b.rows() > 0) out.block(at, 0, b.rows(), cols) = b;
    at += b.rows();
  }
  return out;
}

/// Product that skips zero entries of the left factor; the matrices built
/// from fans are overwhelmingly sparse.
template <class DA, class DB>
Matrix<typename DA::Scalar> multiply(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  Matrix<Scalar> c = Matrix<Scalar>::Zero(a.rows(), b.cols());
  for (Index l = 0; l < a.cols(); ++l) {
    for (Index i = 0; i < a.rows(); ++i) {
      const Scalar& ail = a(i, l);
      if (is_zero(ail)) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        const Scalar& blj = b(l, j);
        if (!is_zero(blj)) c(i, j) += ail * blj;
      }
    }
  }
  return c;
}

template <class Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

/// Dot product of two vectors with matching length.
template <class DA, class DB>
typename DA::Scalar dot(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  typename DA::Scalar s = 0;
  for (Index i = 0; i < a.size(); ++i) {
    if (!is_zero(a(i)) && !is_zero(b(i))) s += a(i) * b(i);
  }
  return s;
}

/// gcd of the entries; zero for the zero vector.
template <class Derived>
Integer content(const Eigen::MatrixBase<Derived>& v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    if (!is_zero(v(i))) g = gcd(g, v(i));
  }
  return g;
}

/// Divides a nonzero vector by the gcd of its entries.
inline IntVector primitive(IntVector v) {
  Integer g = content(v);
  if (!g.is_zero() && !(g == 1)) {
    for (Index i = 0; i < v.size(); ++i) v(i) /= g;
  }
  return v;
}

/// Lexicographic comparison of two vectors (shorter first on a common prefix).
template <class DA, class DB>
bool lex_less(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  Index n = std::min(a.size(), b.size());
  for (Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

template <class DA, class DB>
bool equal(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

}  // namespace toric
