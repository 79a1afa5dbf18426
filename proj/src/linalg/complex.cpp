#include "toric/linalg/complex.hpp"

#include "toric/linalg/lattice.hpp"

#include <stdexcept>
#include <string>

namespace toric {

IntComplex::IntComplex(std::vector<Index> term_ranks, std::vector<IntMatrix> differentials)
    : ranks_(std::move(term_ranks)), diffs_(std::move(differentials)) {
  if (ranks_.empty()) throw std::invalid_argument("IntComplex: at least one term required");
  if (diffs_.size() + 1 != ranks_.size()) {
    throw std::invalid_argument("IntComplex: need exactly one differential between consecutive terms");
  }
  for (std::size_t p = 0; p < diffs_.size(); ++p) {
    if (diffs_[p].cols() != ranks_[p] || diffs_[p].rows() != ranks_[p + 1]) {
      throw std::invalid_argument("IntComplex: differential d^" + std::to_string(p) + " has the wrong shape");
    }
  }
  for (std::size_t p = 0; p + 1 < diffs_.size(); ++p) {
    if (!all_zero(multiply(diffs_[p + 1], diffs_[p]))) {
      throw std::invalid_argument("IntComplex: d^" + std::to_string(p + 1) + " d^" + std::to_string(p) +
                                  " != 0");
    }
  }
}

namespace {
std::vector<Index> ranks_of(const std::vector<IntMatrix>& diffs) {
  if (diffs.empty()) throw std::invalid_argument("IntComplex: no differentials to infer ranks from");
  std::vector<Index> r;
  for (const auto& d : diffs) r.push_back(d.cols());
  r.push_back(diffs.back().rows());
  return r;
}
}  // namespace

IntComplex::IntComplex(std::vector<IntMatrix> differentials)
    : IntComplex(ranks_of(differentials), differentials) {}

Index IntComplex::term_rank(Index p) const {
  if (p < 0 || p > length()) return 0;
  return ranks_[static_cast<std::size_t>(p)];
}

IntMatrix IntComplex::differential(Index p) const {
  if (p >= 0 && p < length()) return diffs_[static_cast<std::size_t>(p)];
  return IntMatrix::Zero(term_rank(p + 1), term_rank(p));
}

Homology homology(const IntComplex& complex, Index p) {
  if (p < 0 || p > complex.length()) {
    throw std::out_of_range("homology: degree " + std::to_string(p) + " outside [0, " +
                            std::to_string(complex.length()) + "]");
  }
  Homology h;
  h.degree_ = p;
  h.next_ = SparseMatrix::from_dense(complex.differential(p));
  const Index n = complex.term_rank(p);

  // Cocycles: saturated basis as columns.
  IntMatrix cycles = kernel_basis(IntMatrix(complex.differential(p).transpose())).transpose();
  const Index k = cycles.cols();
  if (k == 0) {
    h.reps_ = IntMatrix(n, 0);
    h.to_coords_ = IntMatrix(0, n);
    return h;
  }
  IntMatrix to_cycle_coords = left_inverse(cycles);
  IntMatrix boundaries = multiply(to_cycle_coords, complex.differential(p - 1));

  auto smith = snf(boundaries);
  std::vector<Index> kept;
  for (Index i = 0; i < k; ++i) {
    if (i >= smith.rank) {
      kept.push_back(i);
      h.orders_.push_back(0);
    } else if (!(smith.s(i, i) == 1)) {
      kept.push_back(i);
      h.orders_.push_back(smith.s(i, i));
    }
  }
  std::vector<Integer> diag = smith.diagonal();
  h.group_ = FinAbGroup::from_smith_diagonal(diag, static_cast<std::size_t>(k));

  IntMatrix coords = multiply(smith.u, to_cycle_coords);
  h.to_coords_.resize(static_cast<Index>(kept.size()), n);
  h.reps_.resize(n, static_cast<Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    h.to_coords_.row(static_cast<Index>(c)) = coords.row(kept[c]);
    h.reps_.col(static_cast<Index>(c)) = multiply(cycles, IntMatrix(smith.u_inverse.col(kept[c])));
  }
  return h;
}

bool Homology::is_cocycle(const IntVector& x) const {
  if (x.size() != next_.cols()) return false;
  return all_zero(next_.apply(x));
}

IntVector Homology::reduce(const IntVector& x) const {
  if (!is_cocycle(x)) throw std::invalid_argument("Homology::reduce: not a cocycle");
  IntVector c = multiply(to_coords_, x);
  for (Index i = 0; i < c.size(); ++i) {
    const Integer& o = orders_[static_cast<std::size_t>(i)];
    if (!o.is_zero()) c(i) = mod_floor(c(i), o);
  }
  return c;
}

IntVector Homology::lift(const IntVector& coordinates) const {
  if (coordinates.size() != reps_.cols()) throw std::invalid_argument("Homology::lift: wrong coordinate count");
  return multiply(reps_, coordinates);
}

}  // namespace toric
