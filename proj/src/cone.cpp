#include "toric/cone.hpp"

#include "double_description.hpp"
#include "toric/linalg/lattice.hpp"
#include "toric/linalg/normal_form.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

bool vec_less(const IntVector& a, const IntVector& b) { return lex_less(a, b); }

bool same_vectors(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal(a[i], b[i])) return false;
  }
  return true;
}

IntMatrix rows_of(const std::vector<IntVector>& vs, Index cols) {
  IntMatrix m(static_cast<Index>(vs.size()), cols);
  for (std::size_t i = 0; i < vs.size(); ++i) m.row(static_cast<Index>(i)) = vs[i].transpose();
  return m;
}

}  // namespace

Cone::Cone() {
  auto d = std::make_shared<Data>();
  d->span = IntMatrix(0, 0);
  d->orth = IntMatrix(0, 0);
  d->to_span = IntMatrix(0, 0);
  d->ray_matrix = IntMatrix(0, 0);
  data_ = std::move(d);
}

Cone make_cone(Index ambient_rank, const std::vector<IntVector>& generators) {
  if (ambient_rank < 0) throw std::invalid_argument("make_cone: negative rank");
  auto d = std::make_shared<Cone::Data>();
  d->rank = ambient_rank;
  d->generators = generators;

  std::vector<IntVector> gens;
  for (const auto& g : generators) {
    if (g.size() != ambient_rank) throw std::invalid_argument("make_cone: generator has the wrong length");
    if (all_zero(g)) continue;
    gens.push_back(primitive(g));
  }
  std::sort(gens.begin(), gens.end(), vec_less);
  gens.erase(std::unique(gens.begin(), gens.end(), [](const IntVector& a, const IntVector& b) { return equal(a, b); }),
             gens.end());

  if (gens.empty()) {
    d->span = IntMatrix(0, ambient_rank);
    d->orth = IntMatrix::Identity(ambient_rank, ambient_rank);
    d->to_span = IntMatrix(ambient_rank, 0);
    d->ray_matrix = IntMatrix(0, ambient_rank);
    return Cone(std::move(d));
  }

  IntMatrix g = rows_of(gens, ambient_rank);
  d->span = saturate(g);
  d->to_span = left_inverse(IntMatrix(d->span.transpose())).transpose();
  d->orth = kernel_basis(IntMatrix(d->span.transpose()));
  const Index dim = d->span.rows();

  // Dual cone in span coordinates, then back again for the extreme rays.
  IntMatrix coords = multiply(g, d->to_span);
  auto dual = detail::double_description(coords);
  if (!dual.lineality.empty()) throw std::logic_error("make_cone: dual cone is not pointed");
  IntMatrix facet_coords = rows_of(dual.rays, dim);
  auto primal = detail::double_description(facet_coords);
  if (!primal.lineality.empty()) throw NotStronglyConvex();

  for (const auto& c : primal.rays) {
    d->rays.push_back(primitive(IntVector(multiply(d->span.transpose(), c))));
  }
  std::sort(d->rays.begin(), d->rays.end(), vec_less);
  d->ray_matrix = rows_of(d->rays, ambient_rank);

  auto orth_hnf = hnf(d->orth);
  for (const auto& mu : dual.rays) {
    d->facets.push_back(hnf_reduce(IntVector(multiply(d->to_span, mu)), orth_hnf));
  }
  std::sort(d->facets.begin(), d->facets.end(), vec_less);
  return Cone(std::move(d));
}

bool Cone::spans(const IntVector& v) const {
  if (v.size() != ambient_rank()) return false;
  return all_zero(multiply(data_->orth, v));
}

bool Cone::contains(const IntVector& v) const {
  if (!spans(v)) return false;
  return std::all_of(data_->facets.begin(), data_->facets.end(),
                     [&](const IntVector& m) { return dot(m, v).sign() >= 0; });
}

bool Cone::relative_interior_contains(const IntVector& v) const {
  if (!spans(v)) return false;
  return std::all_of(data_->facets.begin(), data_->facets.end(),
                     [&](const IntVector& m) { return dot(m, v).sign() > 0; });
}

bool Cone::contains(const Cone& other) const {
  if (other.ambient_rank() != ambient_rank()) return false;
  return std::all_of(other.rays().begin(), other.rays().end(), [&](const IntVector& v) { return contains(v); });
}

IntVector Cone::span_coordinates(const IntVector& v) const {
  if (!spans(v)) throw std::invalid_argument("Cone::span_coordinates: vector outside the span");
  return multiply(data_->to_span.transpose(), v);
}

bool operator==(const Cone& a, const Cone& b) {
  return a.ambient_rank() == b.ambient_rank() && same_vectors(a.rays(), b.rays());
}

std::strong_ordering operator<=>(const Cone& a, const Cone& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  const auto& ra = a.rays();
  const auto& rb = b.rays();
  for (std::size_t i = 0; i < std::min(ra.size(), rb.size()); ++i) {
    if (lex_less(ra[i], rb[i])) return std::strong_ordering::less;
    if (lex_less(rb[i], ra[i])) return std::strong_ordering::greater;
  }
  if (auto c = ra.size() <=> rb.size(); c != 0) return c;
  return a.ambient_rank() <=> b.ambient_rank();
}

namespace {

std::vector<bool> tight_rays(const Cone& c, const IntVector& m) {
  std::vector<bool> t;
  for (const auto& r : c.rays()) t.push_back(dot(m, r).is_zero());
  return t;
}

std::vector<IntVector> select(const std::vector<IntVector>& vs, const std::vector<bool>& mask) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (mask[i]) out.push_back(vs[i]);
  }
  return out;
}

}  // namespace

std::vector<Cone> faces(const Cone& c) {
  std::vector<std::vector<bool>> tight;
  for (const auto& m : c.facet_normals()) tight.push_back(tight_rays(c, m));

  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue{std::vector<bool>(c.rays().size(), true)};
  seen.insert(queue.front());
  for (std::size_t at = 0; at < queue.size(); ++at) {
    for (const auto& t : tight) {
      std::vector<bool> next(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) next[i] = queue[at][i] && t[i];
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Cone> out;
  for (const auto& mask : queue) out.push_back(make_cone(c.ambient_rank(), select(c.rays(), mask)));
  std::sort(out.begin(), out.end());
  return out;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("intersect: rank mismatch");
  if (a == b) return a;
  const Index r = a.ambient_rank();
  std::vector<IntVector> ineq;
  for (const Cone* c : {&a, &b}) {
    for (const auto& m : c->facet_normals()) ineq.push_back(m);
    for (Index i = 0; i < c->orthogonal_basis().rows(); ++i) {
      IntVector e = c->orthogonal_basis().row(i).transpose();
      ineq.push_back(e);
      ineq.push_back(-e);
    }
  }
  auto gens = detail::double_description(rows_of(ineq, r));
  if (!gens.lineality.empty()) throw std::logic_error("intersect: intersection contains a line");
  return make_cone(r, gens.rays);
}

bool is_face(const Cone& t, const Cone& s) {
  if (t.ambient_rank() != s.ambient_rank() || !s.contains(t)) return false;
  std::vector<bool> mask(s.rays().size(), true);
  for (const auto& m : s.facet_normals()) {
    bool tight_on_t =
        std::all_of(t.rays().begin(), t.rays().end(), [&](const IntVector& v) { return dot(m, v).is_zero(); });
    if (!tight_on_t) continue;
    auto tm = tight_rays(s, m);
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = mask[i] && tm[i];
  }
  return same_vectors(select(s.rays(), mask), t.rays());
}

IntMatrix span_lattice(const Cone& c) { return c.span_basis(); }

bool is_simplicial(const Cone& c) { return static_cast<Index>(c.rays().size()) == c.dim(); }

Integer multiplicity(const Cone& c) {
  if (!is_simplicial(c)) throw NotSimplicial();
  if (c.is_zero()) return 1;
  return abs_determinant(multiply(c.ray_matrix(), c.to_span()));
}

bool is_smooth(const Cone& c) { return is_simplicial(c) && multiplicity(c) == 1; }

}  // namespace toric
