#pragma once

// Lattice operations built on the normal forms: kernels, saturation,
// integer solving, cokernels.

#include "toric/linalg/fin_ab_group.hpp"
#include "toric/linalg/matrix.hpp"
#include "toric/linalg/normal_form.hpp"

#include <optional>

namespace toric {

/// Rows form a basis of the left kernel {x : x * a = 0}, returned in Hermite
/// form. The basis is saturated since it comes from a unimodular transform.
template <class Derived>
Matrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  auto dec = hnf(a);
  Index r = dec.rank();
  Matrix<Scalar> k = dec.transform.bottomRows(a.rows() - r);
  if (k.rows() == 0) return k;
  return hnf(k).h;
}

/// Rows of the Hermite form of `a` with zero rows dropped.
template <class Derived>
Matrix<typename Derived::Scalar> row_lattice_basis(const Eigen::MatrixBase<Derived>& a) {
  auto dec = hnf(a);
  return dec.h.topRows(dec.rank());
}

/// Basis (Hermite form) of the saturation of the row lattice of `a`:
/// {v : m v in rowspan(a) for some m != 0}.
template <class Derived>
Matrix<typename Derived::Scalar> saturate(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  // (a^perp)^perp over Z.
  Matrix<Scalar> orth = kernel_basis(Matrix<Scalar>(a.transpose()));
  if (orth.rows() == 0) return Matrix<Scalar>::Identity(a.cols(), a.cols());
  return kernel_basis(Matrix<Scalar>(orth.transpose()));
}

/// Reduces v against a Hermite-form row basis: each pivot coordinate lands in
/// [0, pivot). The result is a canonical coset representative.
template <class Scalar>
Vector<Scalar> hnf_reduce(Vector<Scalar> v, const HermiteDecomposition<Scalar>& basis) {
  for (Index r = 0; r < basis.rank(); ++r) {
    Index c = basis.pivot_columns[static_cast<std::size_t>(r)];
    Scalar q = floor_div(v(c), basis.h(r, c));
    if (is_zero(q)) continue;
    for (Index j = 0; j < v.size(); ++j) {
      if (!is_zero(basis.h(r, j))) v(j) -= q * basis.h(r, j);
    }
  }
  return v;
}

/// Solves a * x = b over the integers for a fixed a, reusing one Smith form.
class IntegerSolver {
 public:
  explicit IntegerSolver(IntMatrix a);

  /// A particular integer solution, or nullopt if none exists.
  [[nodiscard]] std::optional<IntVector> solve(const IntVector& b) const;
  /// Solves column by column; nullopt if any column has no solution.
  [[nodiscard]] std::optional<IntMatrix> solve(const IntMatrix& b) const;

  [[nodiscard]] const IntMatrix& matrix() const { return a_; }
  [[nodiscard]] const SmithDecomposition<Integer>& smith() const { return smith_; }

 private:
  IntMatrix a_;
  SmithDecomposition<Integer> smith_;
};

/// For a matrix whose columns span a saturated lattice, an integer left
/// inverse p with p * a = identity. Throws std::invalid_argument otherwise.
IntMatrix left_inverse(const IntMatrix& a);

/// Z^rows / (column span of a), for a viewed as a map Z^cols -> Z^rows.
FinAbGroup cokernel(const IntMatrix& a);

/// Index of the row lattice of a inside its saturation.
Integer saturation_index(const IntMatrix& a);

/// True if the row lattices of a and b coincide.
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

/// Whether the homomorphism src -> dst given on cyclic coordinates by
/// `images` (column i is the image of generator i in dst coordinates) is an
/// isomorphism.
bool is_isomorphism(const FinAbGroup& src, const FinAbGroup& dst, const IntMatrix& images);

}  // namespace toric
