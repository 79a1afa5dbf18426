#pragma once

#include "toric/linalg/fin_ab_group.hpp"
#include "toric/linalg/matrix.hpp"
#include "toric/linalg/sparse.hpp"

#include <vector>

namespace toric {

/// Cochain complex of free abelian groups C^0 -> C^1 -> ... -> C^n.
/// Differential d^p maps C^p -> C^{p+1} and is stored as a
/// rank(C^{p+1}) x rank(C^p) matrix acting on column vectors.
class IntComplex {
 public:
  /// Checks shapes and d^{p+1} d^p = 0; throws std::invalid_argument.
  IntComplex(std::vector<Index> term_ranks, std::vector<IntMatrix> differentials);
  /// Term ranks inferred from the differentials (at least one required).
  explicit IntComplex(std::vector<IntMatrix> differentials);

  /// Index n of the last term.
  [[nodiscard]] Index length() const { return static_cast<Index>(ranks_.size()) - 1; }
  [[nodiscard]] Index term_rank(Index p) const;
  /// d^p; a zero map for p outside [0, length).
  [[nodiscard]] IntMatrix differential(Index p) const;

 private:
  std::vector<Index> ranks_;
  std::vector<IntMatrix> diffs_;
};

/// H^p = ker d^p / im d^{p-1}, with representatives and a reduction map.
///
/// Coordinates follow the group's decomposition: torsion coordinates in
/// ascending order first (reduced into [0, order)), then free coordinates.
class Homology {
 public:
  [[nodiscard]] Index degree() const { return degree_; }
  [[nodiscard]] const FinAbGroup& group() const { return group_; }
  /// Column i is a cocycle mapping to the i-th generator.
  [[nodiscard]] const IntMatrix& representatives() const { return reps_; }
  [[nodiscard]] Index cochain_rank() const { return next_.cols(); }

  [[nodiscard]] bool is_cocycle(const IntVector& x) const;
  /// Canonical coordinates of the class of x; std::invalid_argument if x is
  /// not a cocycle.
  [[nodiscard]] IntVector reduce(const IntVector& x) const;
  /// The cocycle sum_i c_i rep_i.
  [[nodiscard]] IntVector lift(const IntVector& coordinates) const;

  friend Homology homology(const IntComplex& complex, Index p);
  friend Homology sparse_homology(const SparseMatrix& prev, const SparseMatrix& next, Index degree);

 private:
  Index degree_ = 0;
  FinAbGroup group_;
  IntMatrix reps_;
  SparseMatrix next_;      // d^p, for the cocycle test
  IntMatrix to_coords_;    // cocycle -> coordinates in the chosen basis, restricted
  std::vector<Integer> orders_;
};

/// Throws std::out_of_range unless 0 <= p <= complex.length().
Homology homology(const IntComplex& complex, Index p);

/// Cohomology at the middle of C^{p-1} -> C^p -> C^{p+1} given by sparse
/// differentials (prev = d^{p-1}, next = d^p). Unit pivots are cancelled
/// first, then the remainder goes through the dense routine; representatives
/// and reduce() still refer to the original coordinates of C^p.
Homology sparse_homology(const SparseMatrix& prev, const SparseMatrix& next, Index degree);

}  // namespace toric
