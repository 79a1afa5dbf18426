#pragma once

#include "toric/linalg/matrix.hpp"

#include <utility>
#include <vector>

namespace toric {

/// Column-compressed integer matrix. Entries within a column are sorted by
/// row and nonzero.
class SparseMatrix {
 public:
  using Entry = std::pair<Index, Integer>;

  SparseMatrix() = default;
  SparseMatrix(Index rows, Index cols);

  [[nodiscard]] Index rows() const { return rows_; }
  [[nodiscard]] Index cols() const { return static_cast<Index>(cols_.size()); }
  [[nodiscard]] const std::vector<Entry>& col(Index c) const { return cols_[static_cast<std::size_t>(c)]; }
  [[nodiscard]] std::size_t nonzeros() const;

  /// Adds v to entry (r, c). Entries of one column must be added in
  /// nondecreasing row order.
  void add(Index r, Index c, const Integer& v);

  [[nodiscard]] IntVector apply(const IntVector& x) const;
  [[nodiscard]] IntMatrix to_dense() const;
  static SparseMatrix from_dense(const IntMatrix& m);

  /// Whether this * other is the zero matrix.
  [[nodiscard]] bool composes_to_zero(const SparseMatrix& other) const;

 private:
  Index rows_ = 0;
  std::vector<std::vector<Entry>> cols_;
};

}  // namespace toric
