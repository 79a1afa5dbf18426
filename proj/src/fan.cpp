#include "toric/fan.hpp"

#include "toric/linalg/lattice.hpp"
#include "toric/linalg/normal_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

bool vec_less(const IntVector& a, const IntVector& b) { return lex_less(a, b); }

bool is_subset(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

Fan::Fan() : Fan(assemble_fan(0, {})) {}

const Cone& Fan::cone(ConeId id) const {
  if (id >= size()) throw UnknownCone(static_cast<std::ptrdiff_t>(id));
  return data_->cones[id];
}

const std::vector<std::size_t>& Fan::ray_indices(ConeId id) const {
  if (id >= size()) throw UnknownCone(static_cast<std::ptrdiff_t>(id));
  return data_->cone_rays[id];
}

const IdList& Fan::face_ids(ConeId id) const {
  if (id >= size()) throw UnknownCone(static_cast<std::ptrdiff_t>(id));
  return data_->face_ids[id];
}

std::optional<ConeId> Fan::find(const Cone& c) const {
  auto it = std::lower_bound(data_->cones.begin(), data_->cones.end(), c);
  if (it != data_->cones.end() && *it == c) return static_cast<ConeId>(it - data_->cones.begin());
  return std::nullopt;
}

std::optional<ConeId> Fan::find_by_rays(const std::vector<std::size_t>& ray_indices) const {
  auto it = data_->by_rays.find(ray_indices);
  if (it == data_->by_rays.end()) return std::nullopt;
  return it->second;
}

ConeId Fan::meet(ConeId a, ConeId b) const {
  const IdList& fa = face_ids(a);
  const IdList& fb = face_ids(b);
  IdList common;
  std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(common));
  // {0} is always common; ids grow with dimension so the top is the last.
  return common.back();
}

bool Fan::is_smooth() const {
  return std::all_of(data_->cones.begin(), data_->cones.end(), [](const Cone& c) { return toric::is_smooth(c); });
}

bool Fan::descends_from(const Fan& ancestor) const {
  for (const Data* d = data_.get(); d != nullptr; d = d->parent.get()) {
    if (d == ancestor.data_.get()) return true;
  }
  return *this == ancestor;
}

std::vector<std::vector<std::size_t>> Fan::max_cone_rays() const {
  std::vector<std::vector<std::size_t>> out;
  for (ConeId id : data_->maximal) out.push_back(data_->cone_rays[id]);
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const Fan& a, const Fan& b) {
  if (a.data_ == b.data_) return true;
  return a.ambient_rank() == b.ambient_rank() && a.cones() == b.cones();
}

Fan assemble_fan(Index ambient_rank, const std::vector<Cone>& generators, const Fan* parent, IdList parent_ids) {
  auto d = std::make_shared<Fan::Data>();
  d->rank = ambient_rank;
  d->cones.push_back(make_cone(ambient_rank, {}));
  for (const auto& g : generators) {
    if (g.ambient_rank() != ambient_rank) throw std::invalid_argument("assemble_fan: rank mismatch");
    for (auto& f : faces(g)) d->cones.push_back(std::move(f));
  }
  std::sort(d->cones.begin(), d->cones.end());
  d->cones.erase(std::unique(d->cones.begin(), d->cones.end()), d->cones.end());

  for (const auto& c : d->cones) {
    if (c.dim() == 1) d->rays.push_back(c.rays().front());
  }
  const std::size_t n = d->cones.size();
  d->cone_rays.resize(n);
  for (std::size_t id = 0; id < n; ++id) {
    for (const auto& r : d->cones[id].rays()) {
      auto it = std::lower_bound(d->rays.begin(), d->rays.end(), r, vec_less);
      d->cone_rays[id].push_back(static_cast<std::size_t>(it - d->rays.begin()));
    }
    std::sort(d->cone_rays[id].begin(), d->cone_rays[id].end());
    d->by_rays.emplace(d->cone_rays[id], id);
  }
  d->face_ids.resize(n);
  std::vector<bool> proper_face(n, false);
  for (std::size_t id = 0; id < n; ++id) {
    for (std::size_t g = 0; g <= id; ++g) {
      if (d->cones[g].dim() <= d->cones[id].dim() && is_subset(d->cone_rays[g], d->cone_rays[id])) {
        d->face_ids[id].push_back(g);
        if (g != id) proper_face[g] = true;
      }
    }
  }
  for (std::size_t id = 0; id < n; ++id) {
    if (!proper_face[id]) d->maximal.push_back(id);
  }

  if (parent != nullptr) {
    d->parent = parent->data_;
    if (parent_ids.size() != generators.size()) throw std::invalid_argument("assemble_fan: parent ids misaligned");
    for (ConeId id : d->maximal) {
      for (std::size_t g = 0; g < generators.size(); ++g) {
        if (generators[g] == d->cones[id]) {
          d->parent_ids.push_back(parent_ids[g]);
          break;
        }
      }
    }
  }
  return Fan(std::move(d));
}

FanValidation validate_fan(Index ambient_rank, const std::vector<IntVector>& rays,
                           const std::vector<std::vector<std::size_t>>& max_cones) {
  if (ambient_rank < 0) throw InvalidFanInput("rank must be nonnegative");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != ambient_rank) {
      throw InvalidFanInput("rays[" + std::to_string(i) + "]: expected " + std::to_string(ambient_rank) + " entries");
    }
    if (all_zero(rays[i])) throw InvalidFanInput("rays[" + std::to_string(i) + "]: zero vector");
  }
  for (std::size_t i = 0; i < max_cones.size(); ++i) {
    for (std::size_t k = 0; k < max_cones[i].size(); ++k) {
      if (max_cones[i][k] >= rays.size()) {
        throw InvalidFanInput("max_cones[" + std::to_string(i) + "][" + std::to_string(k) + "]: ray index " +
                              std::to_string(max_cones[i][k]) + " out of range");
      }
    }
  }

  FanValidation out;
  AxiomCheck intersection{"intersection", true, "pairwise intersections are faces of both", {}, {}};
  AxiomCheck closure{"face_closure", true, "closed under taking faces (by construction)", {}, {}};
  AxiomCheck convex{"strong_convexity", true, "every cone is strongly convex", {}, {}};
  AxiomCheck lattice{"lattice_generated", true, "every cone is generated by lattice vectors", {}, {}};
  AxiomCheck distinct{"distinct_max_cones", true, "no maximal cone is listed twice", {}, {}};

  std::vector<std::optional<Cone>> cones;
  for (std::size_t i = 0; i < max_cones.size(); ++i) {
    std::vector<IntVector> gens;
    for (std::size_t k : max_cones[i]) gens.push_back(rays[k]);
    try {
      cones.emplace_back(make_cone(ambient_rank, gens));
    } catch (const NotStronglyConvex&) {
      cones.emplace_back(std::nullopt);
      convex.ok = false;
      convex.cones.push_back(i);
    }
  }
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (!cones[i]) continue;
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (!cones[j]) continue;
      if (*cones[i] == *cones[j]) {
        distinct.ok = false;
        distinct.pairs.emplace_back(i, j);
        continue;
      }
      Cone c = intersect(*cones[i], *cones[j]);
      if (!is_face(c, *cones[i]) || !is_face(c, *cones[j])) {
        intersection.ok = false;
        intersection.pairs.emplace_back(i, j);
      }
    }
  }
  if (!convex.ok) convex.detail = "cones contain a line";
  if (!distinct.ok) distinct.detail = "maximal cones listed more than once";
  if (!intersection.ok) intersection.detail = "intersection is not a face of both cones";
  out.checks = {intersection, closure, convex, lattice, distinct};

  if (intersection.ok && convex.ok && distinct.ok) {
    std::vector<Cone> gens;
    for (const auto& c : cones) gens.push_back(*c);
    out.fan = assemble_fan(ambient_rank, gens);
  }
  return out;
}

Fan build_fan(Index ambient_rank, const std::vector<IntVector>& rays,
              const std::vector<std::vector<std::size_t>>& max_cones) {
  FanValidation v = validate_fan(ambient_rank, rays, max_cones);
  if (v.ok()) return *v.fan;
  for (const auto& c : v.checks) {
    if (c.ok) continue;
    if (c.name == "strong_convexity") throw NotStronglyConvex();
    if (c.name == "distinct_max_cones") throw DuplicateCone(c.pairs.front().first, c.pairs.front().second);
    if (c.name == "intersection") throw IntersectionNotFace(c.pairs.front().first, c.pairs.front().second);
  }
  throw std::logic_error("build_fan: validation failed without a reason");
}

Subfan::Subfan(Fan fan, IdList ids) : fan_(std::move(fan)), ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  for (ConeId id : ids_) {
    if (id >= fan_.size()) throw NotASubfan("cone id " + std::to_string(id) + " out of range");
    if (!is_subset(fan_.face_ids(id), ids_)) {
      throw NotASubfan("cone " + std::to_string(id) + " is present but not all of its faces are");
    }
  }
}

bool Subfan::contains(ConeId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

IdList Subfan::maximal_ids() const {
  std::vector<bool> proper(fan_.size(), false);
  for (ConeId id : ids_) {
    for (ConeId f : fan_.face_ids(id)) {
      if (f != id) proper[f] = true;
    }
  }
  IdList out;
  for (ConeId id : ids_) {
    if (!proper[id]) out.push_back(id);
  }
  return out;
}

std::vector<std::size_t> Subfan::ray_indices() const {
  std::vector<std::size_t> out;
  for (ConeId id : ids_) {
    if (fan_.cone(id).dim() == 1) out.push_back(fan_.ray_indices(id).front());
  }
  return out;
}

Fan Subfan::as_fan() const {
  std::vector<Cone> gens;
  for (ConeId id : maximal_ids()) gens.push_back(fan_.cone(id));
  return assemble_fan(fan_.ambient_rank(), gens);
}

Subfan operator&(const Subfan& a, const Subfan& b) {
  if (!(a.fan_ == b.fan_)) throw NotASubfan("subfans of different fans");
  IdList ids;
  std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(), std::back_inserter(ids));
  return Subfan(a.fan_, std::move(ids));
}

Subfan operator|(const Subfan& a, const Subfan& b) {
  if (!(a.fan_ == b.fan_)) throw NotASubfan("subfans of different fans");
  IdList ids;
  std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(), std::back_inserter(ids));
  return Subfan(a.fan_, std::move(ids));
}

bool operator==(const Subfan& a, const Subfan& b) { return a.fan_ == b.fan_ && a.ids_ == b.ids_; }

Subfan whole(const Fan& f) {
  IdList ids(f.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return Subfan(f, std::move(ids));
}

Subfan minimal_open(const Fan& f, ConeId sigma) { return Subfan(f, f.face_ids(sigma)); }

const std::vector<Nerve::Entry>& Nerve::level(std::size_t size) const {
  static const std::vector<Entry> empty;
  if (size == 0 || size > levels_.size()) return empty;
  return levels_[size - 1];
}

std::optional<ConeId> Nerve::cone(const std::vector<std::size_t>& indices) const {
  auto it = lookup_.find(indices);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Nerve nerve(const Fan& f, std::size_t max_depth) {
  Nerve out;
  const IdList& maxes = f.maximal_ids();
  const std::size_t top = std::min(max_depth + 1, maxes.size());
  if (top == 0) return out;
  out.levels_.resize(top);
  for (std::size_t i = 0; i < maxes.size(); ++i) out.levels_[0].push_back({{i}, maxes[i]});
  for (std::size_t k = 1; k < top; ++k) {
    for (const auto& e : out.levels_[k - 1]) {
      for (std::size_t j = e.indices.back() + 1; j < maxes.size(); ++j) {
        const IdList& fa = f.face_ids(e.cone);
        const IdList& fb = f.face_ids(maxes[j]);
        IdList common;
        std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(common));
        ConeId c = common.back();
        if (f.face_ids(c) != common) throw std::logic_error("nerve: common faces do not form the faces of one cone");
        auto idx = e.indices;
        idx.push_back(j);
        out.levels_[k].push_back({std::move(idx), c});
      }
    }
  }
  for (const auto& lvl : out.levels_) {
    for (const auto& e : lvl) out.lookup_.emplace(e.indices, e.cone);
  }
  return out;
}

std::optional<ConeId> containing_cone(const Fan& f, const IntVector& v) {
  for (ConeId id : f.maximal_ids()) {
    if (f.cone(id).contains(v)) return id;
  }
  return std::nullopt;
}

Fan stellar_subdivide(const Fan& f, const IntVector& v) {
  if (v.size() != f.ambient_rank()) throw std::invalid_argument("stellar_subdivide: wrong vector length");
  if (!(content(v) == 1)) throw NotPrimitive();
  if (!containing_cone(f, v)) throw NotInSupport();

  std::vector<Cone> gens;
  IdList parents;
  bool changed = false;
  for (ConeId id : f.maximal_ids()) {
    const Cone& sigma = f.cone(id);
    if (!sigma.contains(v)) {
      gens.push_back(sigma);
      parents.push_back(id);
      continue;
    }
    for (ConeId t : f.face_ids(id)) {
      const Cone& tau = f.cone(t);
      if (tau.dim() + 1 != sigma.dim() || tau.contains(v)) continue;
      std::vector<IntVector> rays = tau.rays();
      rays.push_back(v);
      Cone piece = make_cone(f.ambient_rank(), rays);
      if (!(piece == sigma)) changed = true;
      gens.push_back(std::move(piece));
      parents.push_back(id);
    }
  }
  if (!changed) return f;
  return assemble_fan(f.ambient_rank(), gens, &f, std::move(parents));
}

bool cones_contained(const Fan& fine, const Fan& coarse) {
  if (fine.ambient_rank() != coarse.ambient_rank()) return false;
  for (ConeId id : fine.maximal_ids()) {
    const Cone& tau = fine.cone(id);
    bool inside = std::any_of(coarse.maximal_ids().begin(), coarse.maximal_ids().end(),
                              [&](ConeId s) { return coarse.cone(s).contains(tau); });
    if (!inside) return false;
  }
  return true;
}

namespace {

// Simplicial cones (as ray lists) triangulating c, by pulling its first ray.
std::vector<std::vector<IntVector>> triangulate(const Cone& c) {
  if (is_simplicial(c)) return {c.rays()};
  const IntVector& apex = c.rays().front();
  std::vector<std::vector<IntVector>> out;
  for (const auto& facet : faces(c)) {
    if (facet.dim() + 1 != c.dim() || facet.contains(apex)) continue;
    for (auto simplex : triangulate(facet)) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

// Volume (times dim!) of {x in c : <ell, x> <= 1}, in coordinates of the
// span lattice of `frame`.
Rational truncated_volume(const Cone& frame, const Cone& c, const IntVector& ell) {
  Rational total(Integer(0));
  for (const auto& simplex : triangulate(c)) {
    IntMatrix coords(frame.dim(), frame.dim());
    Integer heights = 1;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      coords.row(static_cast<Index>(i)) = frame.span_coordinates(simplex[i]).transpose();
      heights *= dot(ell, simplex[i]);
    }
    total += Rational(abs_determinant(coords), heights);
  }
  return total;
}

}  // namespace

bool covers_support(const Fan& fine, const Fan& coarse) {
  if (fine.ambient_rank() != coarse.ambient_rank()) return false;
  for (ConeId id : coarse.maximal_ids()) {
    const Cone& sigma = coarse.cone(id);
    if (sigma.is_zero()) continue;
    IntVector ell = IntVector::Zero(sigma.ambient_rank());
    for (const auto& m : sigma.facet_normals()) ell += m;
    Rational pieces(Integer(0));
    for (const auto& tau : fine.cones()) {
      if (tau.dim() == sigma.dim() && sigma.contains(tau)) pieces += truncated_volume(sigma, tau, ell);
    }
    if (!(pieces == truncated_volume(sigma, sigma, ell))) return false;
  }
  return true;
}

bool is_refinement_geometric(const Fan& fine, const Fan& coarse) {
  return cones_contained(fine, coarse) && covers_support(fine, coarse);
}

bool is_refinement(const Fan& fine, const Fan& coarse) {
  if (fine.ambient_rank() != coarse.ambient_rank()) return false;
  if (fine.descends_from(coarse)) return true;
  return is_refinement_geometric(fine, coarse);
}

IntMatrix support_lattice(const Fan& f) {
  std::vector<IntMatrix> blocks;
  for (ConeId id : f.maximal_ids()) blocks.push_back(f.cone(id).span_basis());
  IntMatrix stacked = vstack(blocks, f.ambient_rank());
  if (stacked.rows() == 0) return IntMatrix(0, f.ambient_rank());
  return row_lattice_basis(stacked);
}

}  // namespace toric
