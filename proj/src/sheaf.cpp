#include "toric/sheaf.hpp"

#include "toric/linalg/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace toric {

namespace {

IntMatrix left_inverse_or_empty(const IntMatrix& a) {
  if (a.cols() == 0) return IntMatrix(0, a.rows());
  return left_inverse(a);
}

void require_same_fan(const Subfan& big, const Subfan& small) {
  if (!(big.fan() == small.fan())) throw NotASubfan("subfans belong to different fans");
  if (!std::includes(big.ids().begin(), big.ids().end(), small.ids().begin(), small.ids().end())) {
    throw NotASubfan("target is not contained in the source subfan");
  }
}

// Hom(N_σ, Z) -> Hom(N_τ, Z) for a face τ of σ.
IntMatrix dual_restriction(const Cone& sigma, const Cone& tau) {
  return multiply(tau.span_basis(), sigma.to_span());
}

// Position of a maximal cone of `from` having tau as a face.
std::size_t carrier(const Fan& f, const IdList& from_max, ConeId tau) {
  for (std::size_t i = 0; i < from_max.size(); ++i) {
    const IdList& faces = f.face_ids(from_max[i]);
    if (std::binary_search(faces.begin(), faces.end(), tau)) return i;
  }
  throw NotASubfan("cone " + std::to_string(tau) + " is not in the source subfan");
}

std::vector<Index> offsets_of(const Fan& f, const IdList& max_ids) {
  std::vector<Index> off{0};
  for (ConeId id : max_ids) off.push_back(off.back() + f.cone(id).dim());
  return off;
}

// Concatenated component map F(from) -> F(to) for SF, before changing to
// module bases.
IntMatrix sf_component_map(const Fan& f, const IdList& from_max, const IdList& to_max) {
  auto from_off = offsets_of(f, from_max);
  auto to_off = offsets_of(f, to_max);
  IntMatrix q = IntMatrix::Zero(to_off.back(), from_off.back());
  for (std::size_t k = 0; k < to_max.size(); ++k) {
    std::size_t i = carrier(f, from_max, to_max[k]);
    const Cone& tau = f.cone(to_max[k]);
    const Cone& sigma = f.cone(from_max[i]);
    q.block(to_off[k], from_off[i], tau.dim(), sigma.dim()) = dual_restriction(sigma, tau);
  }
  return q;
}

IntMatrix projection(const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
  IntMatrix p = IntMatrix::Zero(static_cast<Index>(to.size()), static_cast<Index>(from.size()));
  for (std::size_t k = 0; k < to.size(); ++k) {
    auto it = std::lower_bound(from.begin(), from.end(), to[k]);
    if (it == from.end() || *it != to[k]) throw NotASubfan("ray missing from the source subfan");
    p(static_cast<Index>(k), static_cast<Index>(it - from.begin())) = 1;
  }
  return p;
}

}  // namespace

std::string_view to_string(Sheaf s) {
  switch (s) {
    case Sheaf::SF:
      return "sf";
    case Sheaf::U:
      return "u";
    case Sheaf::W:
      return "w";
  }
  return "?";
}

std::optional<Sheaf> parse_sheaf(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "sf") return Sheaf::SF;
  if (lower == "u") return Sheaf::U;
  if (lower == "w") return Sheaf::W;
  return std::nullopt;
}

SupportFunction::SupportFunction(Subfan subfan, std::vector<IntVector> components)
    : subfan_(std::move(subfan)), max_ids_(subfan_.maximal_ids()), components_(std::move(components)) {
  if (components_.size() != max_ids_.size()) {
    throw std::invalid_argument("SupportFunction: one component per maximal cone required");
  }
  for (std::size_t i = 0; i < max_ids_.size(); ++i) {
    if (components_[i].size() != subfan_.fan().cone(max_ids_[i]).dim()) {
      throw std::invalid_argument("SupportFunction: component " + std::to_string(i) + " has the wrong length");
    }
  }
}

IntVector SupportFunction::coordinates() const {
  Index n = 0;
  for (const auto& c : components_) n += c.size();
  IntVector out(n);
  Index at = 0;
  for (const auto& c : components_) {
    out.segment(at, c.size()) = c;
    at += c.size();
  }
  return out;
}

bool SupportFunction::is_consistent() const {
  const Fan& f = subfan_.fan();
  for (std::size_t i = 0; i < max_ids_.size(); ++i) {
    for (std::size_t j = i + 1; j < max_ids_.size(); ++j) {
      const Cone& tau = f.cone(f.meet(max_ids_[i], max_ids_[j]));
      IntVector a = multiply(dual_restriction(f.cone(max_ids_[i]), tau), components_[i]);
      IntVector b = multiply(dual_restriction(f.cone(max_ids_[j]), tau), components_[j]);
      if (!equal(a, b)) return false;
    }
  }
  return true;
}

bool operator==(const SupportFunction& a, const SupportFunction& b) {
  if (!(a.subfan_ == b.subfan_)) return false;
  for (std::size_t i = 0; i < a.components_.size(); ++i) {
    if (!equal(a.components_[i], b.components_[i])) return false;
  }
  return true;
}

bool operator==(const WeilDivisor& a, const WeilDivisor& b) {
  return a.rays == b.rays && equal(a.coefficients, b.coefficients);
}

SupportFunctionModule sf_group(const Subfan& s) {
  SupportFunctionModule out(s);
  const Fan& f = s.fan();
  out.max_ids_ = s.maximal_ids();
  out.offsets_ = offsets_of(f, out.max_ids_);
  for (ConeId id : out.max_ids_) out.lattices_.push_back(f.cone(id).span_basis());
  const Index n = out.offsets_.back();

  // One block row per pair: h_i|τ - h_j|τ = 0.
  std::vector<IntMatrix> rows;
  Index total = 0;
  for (std::size_t i = 0; i < out.max_ids_.size(); ++i) {
    for (std::size_t j = i + 1; j < out.max_ids_.size(); ++j) {
      const Cone& si = f.cone(out.max_ids_[i]);
      const Cone& sj = f.cone(out.max_ids_[j]);
      const Cone& tau = f.cone(f.meet(out.max_ids_[i], out.max_ids_[j]));
      if (tau.dim() == 0) continue;
      IntMatrix block = IntMatrix::Zero(tau.dim(), n);
      block.block(0, out.offsets_[i], tau.dim(), si.dim()) = dual_restriction(si, tau);
      block.block(0, out.offsets_[j], tau.dim(), sj.dim()) = -dual_restriction(sj, tau);
      total += tau.dim();
      rows.push_back(std::move(block));
    }
  }
  IntMatrix constraints = vstack(rows, n);
  if (n == 0) {
    out.basis_ = IntMatrix(0, 0);
  } else if (total == 0) {
    out.basis_ = IntMatrix::Identity(n, n);
  } else {
    out.basis_ = IntMatrix(kernel_basis(IntMatrix(constraints.transpose())).transpose());
  }
  out.to_basis_ = left_inverse_or_empty(out.basis_);
  return out;
}

SupportFunction SupportFunctionModule::element(Index i) const {
  IntVector e = IntVector::Zero(rank());
  e(i) = 1;
  return combination(e);
}

SupportFunction SupportFunctionModule::combination(const IntVector& coefficients) const {
  if (coefficients.size() != rank()) throw std::invalid_argument("combination: wrong coefficient count");
  IntVector x = rank() == 0 ? IntVector(IntVector::Zero(component_rank())) : IntVector(multiply(basis_, coefficients));
  std::vector<IntVector> comps;
  for (std::size_t i = 0; i < max_ids_.size(); ++i) {
    comps.push_back(x.segment(offsets_[i], offsets_[i + 1] - offsets_[i]));
  }
  return SupportFunction(subfan_, std::move(comps));
}

IntVector SupportFunctionModule::coordinates(const SupportFunction& h) const {
  if (!(h.subfan() == subfan_)) throw InvalidClass("support function lives on a different subfan");
  IntVector x = h.coordinates();
  IntVector c = multiply(to_basis_, x);
  IntVector back = rank() == 0 ? IntVector(IntVector::Zero(x.size())) : IntVector(multiply(basis_, c));
  if (!equal(back, x)) throw InvalidClass("components do not agree on overlaps");
  return c;
}

SupportFunction sf_restrict(const SupportFunction& h, const Subfan& t) {
  require_same_fan(h.subfan(), t);
  const Fan& f = t.fan();
  IdList to_max = t.maximal_ids();
  std::vector<IntVector> comps;
  for (ConeId tau : to_max) {
    std::size_t i = carrier(f, h.max_ids(), tau);
    comps.push_back(multiply(dual_restriction(f.cone(h.max_ids()[i]), f.cone(tau)), h.components()[i]));
  }
  return SupportFunction(t, std::move(comps));
}

Integer sf_evaluate(const SupportFunction& h, const IntVector& v) {
  const Fan& f = h.subfan().fan();
  if (v.size() != f.ambient_rank()) throw NotInSupport();
  for (std::size_t i = 0; i < h.max_ids().size(); ++i) {
    const Cone& c = f.cone(h.max_ids()[i]);
    if (c.contains(v)) return dot(h.components()[i], c.span_coordinates(v));
  }
  throw NotInSupport();
}

SupportFunction sf_from_linear(const Subfan& s, const IntVector& m) {
  const Fan& f = s.fan();
  if (m.size() != f.ambient_rank()) throw std::invalid_argument("sf_from_linear: wrong rank");
  std::vector<IntVector> comps;
  for (ConeId id : s.maximal_ids()) comps.push_back(multiply(f.cone(id).span_basis(), m));
  return SupportFunction(s, std::move(comps));
}

UGroup u_group(const Subfan& s) {
  const Fan& f = s.fan();
  auto idx = s.ray_indices();
  IntMatrix cols(f.ambient_rank(), static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) cols.col(static_cast<Index>(k)) = f.rays()[idx[k]];
  return {kernel_basis(cols)};
}

WeilDivisor sf_to_w(const SupportFunction& h) {
  WeilDivisor d;
  d.rays = h.subfan().ray_indices();
  d.coefficients.resize(static_cast<Index>(d.rays.size()));
  for (std::size_t k = 0; k < d.rays.size(); ++k) {
    d.coefficients(static_cast<Index>(k)) = sf_evaluate(h, h.subfan().fan().rays()[d.rays[k]]);
  }
  return d;
}

std::optional<IntVector> is_linear(const SupportFunction& h) {
  const Fan& f = h.subfan().fan();
  const Index r = f.ambient_rank();
  std::vector<IntMatrix> blocks;
  for (ConeId id : h.max_ids()) blocks.push_back(f.cone(id).span_basis());
  IntMatrix a = vstack(blocks, r);
  IntVector m = IntVector::Zero(r);
  if (a.rows() > 0) {
    auto sol = IntegerSolver(a).solve(h.coordinates());
    if (!sol) return std::nullopt;
    m = *sol;
  }
  UGroup u = u_group(h.subfan());
  if (u.rank() > 0) m = hnf_reduce(m, hnf(u.basis));
  return m;
}

IntMatrix linear_restriction_matrix(const SupportFunctionModule& sf) {
  const Fan& f = sf.subfan().fan();
  std::vector<IntMatrix> blocks;
  for (ConeId id : sf.max_ids()) blocks.push_back(f.cone(id).span_basis());
  IntMatrix a = vstack(blocks, f.ambient_rank());
  if (sf.rank() == 0) return IntMatrix(0, f.ambient_rank());
  return multiply(sf.to_basis(), a);
}

IntMatrix sf_to_w_matrix(const SupportFunctionModule& sf) {
  const Fan& f = sf.subfan().fan();
  auto idx = sf.subfan().ray_indices();
  auto off = offsets_of(f, sf.max_ids());
  IntMatrix eval = IntMatrix::Zero(static_cast<Index>(idx.size()), off.back());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    std::size_t i = carrier(f, sf.max_ids(), f.ray_cone(idx[k]));
    const Cone& c = f.cone(sf.max_ids()[i]);
    eval.block(static_cast<Index>(k), off[i], 1, c.dim()) = c.span_coordinates(f.rays()[idx[k]]).transpose();
  }
  if (sf.rank() == 0) return IntMatrix(static_cast<Index>(idx.size()), 0);
  return multiply(eval, sf.basis());
}

Index section_rank(Sheaf sheaf, const Subfan& s) {
  switch (sheaf) {
    case Sheaf::SF:
      return sf_group(s).rank();
    case Sheaf::U:
      return u_group(s).rank();
    case Sheaf::W:
      return static_cast<Index>(s.ray_indices().size());
  }
  return 0;
}

IntMatrix restriction_matrix(Sheaf sheaf, const Subfan& from, const Subfan& to) {
  require_same_fan(from, to);
  switch (sheaf) {
    case Sheaf::SF: {
      SupportFunctionModule a = sf_group(from), b = sf_group(to);
      if (a.rank() == 0 || b.rank() == 0) return IntMatrix::Zero(b.rank(), a.rank());
      IntMatrix q = sf_component_map(from.fan(), a.max_ids(), b.max_ids());
      return multiply(b.to_basis(), multiply(q, a.basis()));
    }
    case Sheaf::U: {
      UGroup a = u_group(from), b = u_group(to);
      if (a.rank() == 0 || b.rank() == 0) return IntMatrix::Zero(b.rank(), a.rank());
      return multiply(left_inverse(IntMatrix(b.basis.transpose())), IntMatrix(a.basis.transpose()));
    }
    case Sheaf::W:
      return projection(from.ray_indices(), to.ray_indices());
  }
  return {};
}

Index cone_section_rank(Sheaf sheaf, const Fan& f, ConeId sigma) {
  const Cone& c = f.cone(sigma);
  switch (sheaf) {
    case Sheaf::SF:
      return c.dim();
    case Sheaf::U:
      return c.orthogonal_basis().rows();
    case Sheaf::W:
      return static_cast<Index>(f.ray_indices(sigma).size());
  }
  return 0;
}

IntMatrix cone_restriction(Sheaf sheaf, const Fan& f, ConeId sigma, ConeId tau) {
  const IdList& faces = f.face_ids(sigma);
  if (!std::binary_search(faces.begin(), faces.end(), tau)) throw NotASubfan("not a face");
  const Cone& s = f.cone(sigma);
  const Cone& t = f.cone(tau);
  switch (sheaf) {
    case Sheaf::SF:
      return dual_restriction(s, t);
    case Sheaf::U: {
      const IntMatrix& os = s.orthogonal_basis();
      const IntMatrix& ot = t.orthogonal_basis();
      if (os.rows() == 0 || ot.rows() == 0) return IntMatrix::Zero(ot.rows(), os.rows());
      return multiply(left_inverse(IntMatrix(ot.transpose())), IntMatrix(os.transpose()));
    }
    case Sheaf::W:
      return projection(f.ray_indices(sigma), f.ray_indices(tau));
  }
  return {};
}

}  // namespace toric
