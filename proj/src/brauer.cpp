#include "toric/brauer.hpp"

#include "toric/invariants.hpp"
#include "toric/linalg/lattice.hpp"

#include <stdexcept>

namespace toric {

std::string BrauerTotal::to_string() const {
  std::string out = finite_part.is_trivial() ? "" : finite_part.to_string();
  if (divisible > 0) {
    if (!out.empty()) out += " + ";
    out += divisible == 1 ? "Q/Z" : "(Q/Z)^" + std::to_string(divisible);
  }
  return out.empty() ? "0" : out;
}

bool MonomialCocycle::is_zero() const {
  for (const auto& [key, m] : exponents) {
    if (!all_zero(m)) return false;
  }
  return true;
}

bool MonomialCocycle::satisfies_cocycle_identity() const {
  std::size_t n = 0;
  for (const auto& [key, m] : exponents) n = std::max(n, key.back() + 1);
  auto phi = [&](std::size_t a, std::size_t b, std::size_t c) -> const IntVector& {
    return exponents.at({a, b, c});
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          IntVector s = phi(j, k, l) - phi(i, k, l) + phi(i, j, l) - phi(i, j, k);
          if (!all_zero(s)) return false;
        }
      }
    }
  }
  return true;
}

FinAbGroup h2_split(const Fan& f) { return cohomology(f, Sheaf::SF, 1).group(); }

FinAbGroup zariski_h2(const Fan& f) { return h2_split(f); }

std::vector<CyclicSymbol> smooth_part(const Fan& f) {
  std::vector<Integer> nu = nu_invariants(f);
  std::vector<CyclicSymbol> out;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    for (std::size_t j = i + 1; j < nu.size(); ++j) {
      if (nu[i] == 1) continue;
      out.push_back({nu[i], i + 1, j + 1});
    }
  }
  return out;
}

BrauerTotal symbols_group(const std::vector<CyclicSymbol>& symbols) {
  BrauerTotal t;
  for (const auto& s : symbols) {
    if (s.order.is_zero()) {
      ++t.divisible;
    } else {
      t.finite_part = t.finite_part.direct_sum(FinAbGroup::cyclic(s.order));
    }
  }
  return t;
}

BrauerReport brauer_group(const Fan& f) {
  BrauerReport r;
  r.split_part = h2_split(f);
  r.nu = nu_invariants(f);
  r.smooth_part = smooth_part(f);
  Resolution res = resolve(f);
  if (!(smooth_part(res.fan) == r.smooth_part)) {
    throw std::logic_error("brauer_group: smooth part changed under resolution");
  }
  r.certificate = std::move(res.certificate);
  r.total = symbols_group(r.smooth_part);
  r.total.finite_part = r.total.finite_part.direct_sum(r.split_part);
  return r;
}

MonomialCocycle cocycle_monomials_of(const CechComplex& c, const IntVector& cocycle) {
  if (c.sheaf() != Sheaf::SF) throw std::invalid_argument("cocycle_monomials: not an SF complex");
  if (cocycle.size() != c.term_rank(1)) throw InvalidClass("cocycle has the wrong length");
  const Fan& f = c.fan();
  MonomialCocycle out;
  for (std::size_t k = 0; k < c.tuple_count(1); ++k) {
    auto t = c.tuple(1, k);
    const Cone& tau = f.cone(c.tuple_cone(1, k));
    const Index at = c.block_offset(1, k);
    IntVector comp = cocycle.segment(at, tau.dim());
    // A preimage under M -> Hom(N_τ, Z), reduced modulo τ^⊥ ∩ M.
    IntVector m = multiply(tau.to_span(), comp);
    if (tau.orthogonal_basis().rows() > 0) m = hnf_reduce(m, hnf(tau.orthogonal_basis()));
    out.lifts.emplace(std::make_pair(t[0], t[1]), std::move(m));
  }
  const std::size_t n = c.cover_size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        out.exponents.emplace(std::vector<std::size_t>{i, j, k},
                              out.lifts.at({j, k}) + out.lifts.at({i, j}) - out.lifts.at({i, k}));
      }
    }
  }
  if (!out.satisfies_cocycle_identity()) throw std::logic_error("cocycle_monomials: identity failed");
  return out;
}

MonomialCocycle cocycle_monomials(const Fan& f, const IntVector& class_coordinates) {
  CechComplex c(f, Sheaf::SF);
  CohomologyResult h = cohomology(c, 1);
  if (class_coordinates.size() != static_cast<Index>(h.group().generator_count())) {
    throw InvalidClass("expected " + std::to_string(h.group().generator_count()) + " class coordinates");
  }
  return cocycle_monomials_of(c, h.lift(class_coordinates));
}

}  // namespace toric
