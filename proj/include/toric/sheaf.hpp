#pragma once

// The sheaves SF (integral support functions), U (Δ' ↦ |Δ'|^⊥ ∩ M) and
// W (invariant Weil divisors) on the open sets of a fan.
//
// Coordinates. On a cone σ, Hom(N_σ, Z) uses the basis dual to
// σ.span_basis(): h(v) = h · span_coordinates(v). A support function on a
// subfan is stored by its components on the maximal cones, concatenated in
// the order of Subfan::maximal_ids().

#include "toric/fan.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace toric {

enum class Sheaf { SF, U, W };

std::string_view to_string(Sheaf s);
/// "sf", "u", "w" (case-insensitive).
std::optional<Sheaf> parse_sheaf(std::string_view name);

class SupportFunction {
 public:
  /// components[i] lives in Hom(N_{σ_i}, Z) for the i-th maximal cone of
  /// `subfan`. The agreement conditions are not checked here.
  SupportFunction(Subfan subfan, std::vector<IntVector> components);

  [[nodiscard]] const Subfan& subfan() const { return subfan_; }
  [[nodiscard]] const IdList& max_ids() const { return max_ids_; }
  [[nodiscard]] const std::vector<IntVector>& components() const { return components_; }
  /// All components concatenated.
  [[nodiscard]] IntVector coordinates() const;
  /// Whether the components agree on every pairwise intersection.
  [[nodiscard]] bool is_consistent() const;

  friend bool operator==(const SupportFunction& a, const SupportFunction& b);

 private:
  Subfan subfan_;
  IdList max_ids_;
  std::vector<IntVector> components_;
};

/// SF(Δ'): a free group, stored as a saturated sublattice of the
/// concatenated component coordinates.
class SupportFunctionModule {
 public:
  [[nodiscard]] const Subfan& subfan() const { return subfan_; }
  [[nodiscard]] const IdList& max_ids() const { return max_ids_; }
  /// Rows: basis of N_{σ_i} for each maximal cone.
  [[nodiscard]] const std::vector<IntMatrix>& component_lattices() const { return lattices_; }
  /// Columns: the basis of SF(Δ') in concatenated coordinates.
  [[nodiscard]] const IntMatrix& basis() const { return basis_; }
  [[nodiscard]] Index rank() const { return basis_.cols(); }
  /// Total number of concatenated coordinates.
  [[nodiscard]] Index component_rank() const { return basis_.rows(); }

  [[nodiscard]] SupportFunction element(Index i) const;
  [[nodiscard]] SupportFunction combination(const IntVector& coefficients) const;
  /// Coordinates of h in basis(); InvalidClass if h is not a section.
  [[nodiscard]] IntVector coordinates(const SupportFunction& h) const;
  /// Concatenated coordinates -> basis coordinates (valid on sections).
  [[nodiscard]] const IntMatrix& to_basis() const { return to_basis_; }

  friend SupportFunctionModule sf_group(const Subfan& s);

 private:
  SupportFunctionModule(Subfan s) : subfan_(std::move(s)) {}
  Subfan subfan_;
  IdList max_ids_;
  std::vector<IntMatrix> lattices_;
  std::vector<Index> offsets_;
  IntMatrix basis_;
  IntMatrix to_basis_;
};

struct UGroup {
  IntMatrix basis;  // rows, Hermite form
  [[nodiscard]] Index rank() const { return basis.rows(); }
};

struct WeilDivisor {
  std::vector<std::size_t> rays;  // indices into the fan's rays, ascending
  IntVector coefficients;

  friend bool operator==(const WeilDivisor& a, const WeilDivisor& b);
};

SupportFunctionModule sf_group(const Subfan& s);

/// Throws NotASubfan unless t is contained in h's subfan.
SupportFunction sf_restrict(const SupportFunction& h, const Subfan& t);

/// Throws NotInSupport if v is not in the support of h's subfan.
Integer sf_evaluate(const SupportFunction& h, const IntVector& v);

/// The restriction of m ∈ M to the subfan.
SupportFunction sf_from_linear(const Subfan& s, const IntVector& m);

UGroup u_group(const Subfan& s);

WeilDivisor sf_to_w(const SupportFunction& h);

/// m ∈ M with h = m on the support, reduced against the Hermite form of
/// U(Δ'); nullopt if h is not linear.
std::optional<IntVector> is_linear(const SupportFunction& h);

/// Matrix of M -> SF(Δ') in basis coordinates (rank x ambient rank).
IntMatrix linear_restriction_matrix(const SupportFunctionModule& sf);

/// Matrix of SF(Δ') -> W(Δ') (#rays of the subfan x rank).
IntMatrix sf_to_w_matrix(const SupportFunctionModule& sf);

// Sections and restrictions in a fixed basis, for any of the three sheaves.

/// Rank of the free group F(Δ').
Index section_rank(Sheaf sheaf, const Subfan& s);

/// Matrix of F(from) -> F(to) for to ⊆ from; throws NotASubfan otherwise.
IntMatrix restriction_matrix(Sheaf sheaf, const Subfan& from, const Subfan& to);

/// Rank of F(Δ(σ)): dim σ, rank σ^⊥, or #rays of σ.
Index cone_section_rank(Sheaf sheaf, const Fan& f, ConeId sigma);

/// F(Δ(σ)) -> F(Δ(τ)) for a face τ of σ. Agrees with restriction_matrix on
/// the minimal open sets.
IntMatrix cone_restriction(Sheaf sheaf, const Fan& f, ConeId sigma, ConeId tau);

}  // namespace toric
