#pragma once

#include "toric/cech.hpp"
#include "toric/fan.hpp"
#include "toric/resolution.hpp"

#include <map>
#include <string>
#include <vector>

namespace toric {

/// The symbol (m_i, m_j) of order ν_i; order 0 stands for Q/Z. Indices are
/// 1-based and refer to a basis of M adapted to the Smith form of the
/// support lattice.
struct CyclicSymbol {
  Integer order;
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const CyclicSymbol&, const CyclicSymbol&) = default;
};

/// split ⊕ (⊕ symbols), kept formal since Q/Z is not finitely generated.
struct BrauerTotal {
  FinAbGroup finite_part;  // split part plus the finite symbols
  std::size_t divisible = 0;  // copies of Q/Z

  [[nodiscard]] bool is_trivial() const { return finite_part.is_trivial() && divisible == 0; }
  /// "0", "Z/2", "(Q/Z)^3", "Z/2 + Q/Z".
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const BrauerTotal&, const BrauerTotal&) = default;
};

struct BrauerReport {
  FinAbGroup split_part;
  std::vector<Integer> nu;
  std::vector<CyclicSymbol> smooth_part;
  BrauerTotal total;
  ResolutionCertificate certificate;
};

/// Exponents of the monomial 2-cocycle attached to an SF 1-cocycle.
struct MonomialCocycle {
  /// m(i, j) for i < j: the canonical lift of the cocycle component.
  std::map<std::pair<std::size_t, std::size_t>, IntVector> lifts;
  /// φ(i, j, k) = m(j, k) + m(i, j) - m(i, k).
  std::map<std::vector<std::size_t>, IntVector> exponents;

  [[nodiscard]] bool is_zero() const;
  /// φ(j,k,l) - φ(i,k,l) + φ(i,j,l) - φ(i,j,k) = 0 for all i < j < k < l.
  [[nodiscard]] bool satisfies_cocycle_identity() const;
};

/// H^1(Δ, SF).
FinAbGroup h2_split(const Fan& f);
/// Same group, under its Zariski name.
FinAbGroup zariski_h2(const Fan& f);

std::vector<CyclicSymbol> smooth_part(const Fan& f);

/// Group described by a list of symbols.
BrauerTotal symbols_group(const std::vector<CyclicSymbol>& symbols);

/// Runs the resolution for the certificate and cross-checks the smooth part
/// against the resolved fan; throws std::logic_error on disagreement.
BrauerReport brauer_group(const Fan& f);

/// Monomials of the class with the given coordinates in h2_split(f).
/// Throws InvalidClass on a wrong coordinate count.
MonomialCocycle cocycle_monomials(const Fan& f, const IntVector& class_coordinates);

/// The same, starting from any SF 1-cocycle of the finest cover.
MonomialCocycle cocycle_monomials_of(const CechComplex& sf_complex, const IntVector& cocycle);

}  // namespace toric
