#include "toric/linalg/lattice.hpp"

#include <stdexcept>

namespace toric {

IntegerSolver::IntegerSolver(IntMatrix a) : a_(std::move(a)), smith_(snf(a_)) {}

std::optional<IntVector> IntegerSolver::solve(const IntVector& b) const {
  if (b.size() != a_.rows()) throw std::invalid_argument("IntegerSolver: size mismatch");
  // s * (v^-1 x) = u b
  IntVector c = multiply(smith_.u, b);
  IntVector y = IntVector::Zero(a_.cols());
  for (Index i = 0; i < c.size(); ++i) {
    if (i < smith_.rank) {
      const Integer& d = smith_.s(i, i);
      if (!mod_floor(c(i), d).is_zero()) return std::nullopt;
      y(i) = c(i) / d;
    } else if (!c(i).is_zero()) {
      return std::nullopt;
    }
  }
  return IntVector(multiply(smith_.v, y));
}

std::optional<IntMatrix> IntegerSolver::solve(const IntMatrix& b) const {
  IntMatrix x(a_.cols(), b.cols());
  for (Index j = 0; j < b.cols(); ++j) {
    auto col = solve(IntVector(b.col(j)));
    if (!col) return std::nullopt;
    x.col(j) = *col;
  }
  return x;
}

IntMatrix left_inverse(const IntMatrix& a) {
  auto d = snf(a);
  const Index k = a.cols();
  if (d.rank != k) throw std::invalid_argument("left_inverse: columns are not independent");
  for (Index i = 0; i < k; ++i) {
    if (!(d.s(i, i) == 1)) throw std::invalid_argument("left_inverse: column lattice is not saturated");
  }
  // s^T u a v = I  =>  (v s^T u) a = I
  return multiply(d.v, IntMatrix(d.u.topRows(k)));
}

FinAbGroup cokernel(const IntMatrix& a) {
  auto d = snf(a);
  return FinAbGroup::from_smith_diagonal(d.diagonal(), static_cast<std::size_t>(a.rows()));
}

Integer saturation_index(const IntMatrix& a) {
  auto d = snf(a);
  Integer p = 1;
  for (Index i = 0; i < d.rank; ++i) p *= d.s(i, i);
  return p;
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return equal(row_lattice_basis(a), row_lattice_basis(b));
}

bool is_isomorphism(const FinAbGroup& src, const FinAbGroup& dst, const IntMatrix& images) {
  const Index na = static_cast<Index>(src.generator_count());
  const Index nb = static_cast<Index>(dst.generator_count());
  if (images.rows() != nb || images.cols() != na) {
    throw std::invalid_argument("is_isomorphism: image matrix has the wrong shape");
  }
  IntMatrix rel_b = IntMatrix::Zero(nb, nb);
  for (Index i = 0; i < nb; ++i) rel_b(i, i) = dst.coordinate_order(static_cast<std::size_t>(i));

  // Well defined: order_i * F e_i lies in the relation lattice of dst.
  IntegerSolver rel_solver(rel_b);
  for (Index i = 0; i < na; ++i) {
    Integer o = src.coordinate_order(static_cast<std::size_t>(i));
    if (o.is_zero()) continue;
    IntVector img = images.col(i);
    for (Index r = 0; r < nb; ++r) img(r) *= o;
    if (!rel_solver.solve(img)) return false;
  }

  // Surjective: [F | R_b] spans Z^nb.
  IntMatrix joined(nb, na + nb);
  joined.leftCols(na) = images;
  joined.rightCols(nb) = rel_b;
  if (!cokernel(joined).is_trivial()) return false;

  // Injective: every x with F x in im R_b lies in im R_a.
  IntMatrix stacked(nb, na + nb);
  stacked.leftCols(na) = images;
  stacked.rightCols(nb) = -rel_b;
  IntMatrix ker = kernel_basis(IntMatrix(stacked.transpose()));
  for (Index r = 0; r < ker.rows(); ++r) {
    for (Index i = 0; i < na; ++i) {
      Integer o = src.coordinate_order(static_cast<std::size_t>(i));
      const Integer& x = ker(r, i);
      if (o.is_zero() ? !x.is_zero() : !mod_floor(x, o).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace toric
