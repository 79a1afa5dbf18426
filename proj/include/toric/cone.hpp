#pragma once

#include "toric/errors.hpp"
#include "toric/linalg/matrix.hpp"

#include <compare>
#include <memory>
#include <vector>

namespace toric {

/// Strongly convex rational polyhedral cone in N = Z^r. Immutable; copies
/// share the computed data.
class Cone {
 public:
  /// The zero cone of rank 0.
  Cone();

  [[nodiscard]] Index ambient_rank() const { return data_->rank; }
  [[nodiscard]] Index dim() const { return data_->span.rows(); }
  [[nodiscard]] bool is_zero() const { return data_->rays.empty(); }

  /// Primitive ray generators, sorted lexicographically.
  [[nodiscard]] const std::vector<IntVector>& rays() const { return data_->rays; }
  /// Rays as the rows of a matrix.
  [[nodiscard]] const IntMatrix& ray_matrix() const { return data_->ray_matrix; }
  /// The generators as passed to make_cone.
  [[nodiscard]] const std::vector<IntVector>& generators() const { return data_->generators; }
  /// Inward primitive facet normals in M, each reduced modulo the
  /// orthogonal lattice and sorted.
  [[nodiscard]] const std::vector<IntVector>& facet_normals() const { return data_->facets; }
  /// Rows: Hermite basis of N_sigma = N ∩ R sigma.
  [[nodiscard]] const IntMatrix& span_basis() const { return data_->span; }
  /// Rows: Hermite basis of sigma^perp ∩ M.
  [[nodiscard]] const IntMatrix& orthogonal_basis() const { return data_->orth; }

  /// Whether v lies in the linear span of the cone.
  [[nodiscard]] bool spans(const IntVector& v) const;
  [[nodiscard]] bool contains(const IntVector& v) const;
  /// v in the span with every facet normal strictly positive.
  [[nodiscard]] bool relative_interior_contains(const IntVector& v) const;
  [[nodiscard]] bool contains(const Cone& other) const;

  /// Coordinates of v in span_basis(); v must lie in the span.
  [[nodiscard]] IntVector span_coordinates(const IntVector& v) const;
  /// Matrix taking N-coordinates to span coordinates (r x dim):
  /// span_coordinates(v) = v^T * to_span.
  [[nodiscard]] const IntMatrix& to_span() const { return data_->to_span; }

  friend bool operator==(const Cone& a, const Cone& b);
  /// Orders by dimension, then lexicographically by rays.
  friend std::strong_ordering operator<=>(const Cone& a, const Cone& b);

 private:
  struct Data {
    Index rank = 0;
    std::vector<IntVector> generators;
    std::vector<IntVector> rays;
    IntMatrix ray_matrix;
    std::vector<IntVector> facets;
    IntMatrix span;
    IntMatrix orth;
    IntMatrix to_span;
  };
  explicit Cone(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;

  friend Cone make_cone(Index ambient_rank, const std::vector<IntVector>& generators);
};

/// Throws NotStronglyConvex if the generators span a cone containing a line.
Cone make_cone(Index ambient_rank, const std::vector<IntVector>& generators);

/// All faces, ordered by (dim, rays); includes {0} and c.
std::vector<Cone> faces(const Cone& c);

Cone intersect(const Cone& a, const Cone& b);

/// Whether t is a face of s.
bool is_face(const Cone& t, const Cone& s);

/// Basis of N ∩ R c as rows.
IntMatrix span_lattice(const Cone& c);

/// Index of the ray lattice in N_sigma; throws NotSimplicial.
Integer multiplicity(const Cone& c);

bool is_simplicial(const Cone& c);
bool is_smooth(const Cone& c);

}  // namespace toric
