#pragma once

// Čech cohomology of the sheaves SF, U, W on a fan.
//
// The finest cover {Δ(σ_i)} over the maximal cones is used: the term at an
// increasing tuple I is F(Δ(σ_I)) with σ_I the intersection of the σ_i, and
// (δc)(i_0..i_{p+1}) = Σ_k (-1)^k c(i_0..î_k..i_{p+1})|σ_I.

#include "toric/fan.hpp"
#include "toric/linalg/complex.hpp"
#include "toric/sheaf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace toric {

class CohomologyResult {
 public:
  CohomologyResult(Sheaf sheaf, Homology h) : sheaf_(sheaf), h_(std::move(h)) {}

  [[nodiscard]] Sheaf sheaf() const { return sheaf_; }
  [[nodiscard]] Index degree() const { return h_.degree(); }
  [[nodiscard]] const FinAbGroup& group() const { return h_.group(); }
  /// Columns are cocycles in C^p, one per cyclic coordinate of group().
  [[nodiscard]] const IntMatrix& representatives() const { return h_.representatives(); }
  [[nodiscard]] bool is_cocycle(const IntVector& x) const { return h_.is_cocycle(x); }
  [[nodiscard]] IntVector reduce(const IntVector& x) const { return h_.reduce(x); }
  [[nodiscard]] IntVector lift(const IntVector& coordinates) const { return h_.lift(coordinates); }
  [[nodiscard]] const Homology& homology() const { return h_; }

 private:
  Sheaf sheaf_;
  Homology h_;
};

/// The finest-cover complex. Levels and restriction blocks are built on
/// demand and cached; const methods are safe to call concurrently.
class CechComplex {
 public:
  CechComplex(Fan f, Sheaf sheaf);

  [[nodiscard]] const Fan& fan() const { return fan_; }
  [[nodiscard]] Sheaf sheaf() const { return sheaf_; }
  /// Number of maximal cones.
  [[nodiscard]] std::size_t cover_size() const { return fan_.maximal_ids().size(); }
  /// Top degree, #maximal - 1.
  [[nodiscard]] Index length() const { return static_cast<Index>(cover_size()) - 1; }

  /// Number of tuples of size p + 1.
  [[nodiscard]] std::size_t tuple_count(Index p) const;
  /// The k-th tuple of size p + 1 in lexicographic order (positions into
  /// maximal_ids()).
  [[nodiscard]] std::vector<std::size_t> tuple(Index p, std::size_t k) const;
  /// σ_I for the k-th tuple of size p + 1.
  [[nodiscard]] ConeId tuple_cone(Index p, std::size_t k) const;
  /// First coordinate of the k-th tuple's block in C^p.
  [[nodiscard]] Index block_offset(Index p, std::size_t k) const;
  [[nodiscard]] Index term_rank(Index p) const;

  /// d^p : C^p -> C^{p+1}; the zero map outside [0, length).
  [[nodiscard]] SparseMatrix differential(Index p) const;

 private:
  struct Level {
    std::vector<ConeId> cones;
    std::vector<Index> offsets;  // size cones.size() + 1
  };
  const Level& level(Index p) const;
  const IntMatrix& restriction(ConeId sigma, ConeId tau) const;
  std::size_t lex_rank(const std::vector<std::size_t>& tuple) const;

  Fan fan_;
  Sheaf sheaf_;
  std::vector<std::vector<std::size_t>> binom_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<Index, std::unique_ptr<Level>> levels_;
  mutable std::map<std::pair<ConeId, ConeId>, IntMatrix> restrictions_;
};

/// H^p over the finest cover; trivial for p > length. Throws
/// std::out_of_range for p < 0.
CohomologyResult cohomology(const CechComplex& complex, Index p);
CohomologyResult cohomology(const Fan& f, Sheaf sheaf, Index p);

/// R^p Γ(Δ, F) from the complex of strict chains σ_0 > ... > σ_p of cones,
/// with term F(Δ(σ_p)). Same groups as the finest cover, but the complex
/// grows with the number of flags instead of tuples of maximal cones, and
/// vanishes above the fan dimension. Throws std::out_of_range for p < 0.
CohomologyResult derived_cohomology(const Fan& f, Sheaf sheaf, Index p);

/// Čech cohomology on an arbitrary cover by subfans; terms on the finite
/// intersections are full sections F(V_I). Throws NotACover.
CohomologyResult cover_cohomology(const Fan& f, const std::vector<Subfan>& cover, Sheaf sheaf, Index p);
FinAbGroup cohomology_on_cover(const Fan& f, const std::vector<Subfan>& cover, Sheaf sheaf, Index p);

/// H^p(cover) -> H^p(finest cover) induced by the refinement sending σ_i to
/// the first cover element containing it.
struct RefinementMap {
  FinAbGroup source;
  FinAbGroup target;
  /// Column j: image of the j-th source coordinate in target coordinates.
  IntMatrix matrix;
  [[nodiscard]] bool is_isomorphism() const;
};

RefinementMap refinement_map(const Fan& f, const std::vector<Subfan>& cover, Sheaf sheaf, Index p);

}  // namespace toric
