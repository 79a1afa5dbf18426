#pragma once

#include "toric/fan.hpp"
#include "toric/linalg/fin_ab_group.hpp"

#include <vector>

namespace toric {

struct InvariantReport {
  FinAbGroup pic;
  FinAbGroup cl;
  Index sf_rank = 0;
  Index u_rank = 0;
  IdList singular_cone_ids;
  std::vector<Integer> nu;
};

/// coker(M -> SF(Δ)).
FinAbGroup picard(const Fan& f);

/// coker(M -> ⊕_ρ Z), m ↦ (<m, n(ρ)>).
FinAbGroup class_group(const Fan& f);

/// Class group of Δ(σ) taken as a fan in the same lattice.
FinAbGroup local_class_group(const Fan& f, ConeId sigma);

/// Ids of the cones that are not smooth, ascending.
IdList singular_cones(const Fan& f);

/// Invariant factors of N / L for L the sublattice generated by the support:
/// length rank(N), units first, zeros (free factors) last.
std::vector<Integer> nu_invariants(const Fan& f);

InvariantReport invariants(const Fan& f);

}  // namespace toric
