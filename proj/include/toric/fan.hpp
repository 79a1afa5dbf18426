#pragma once

#include "toric/cone.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace toric {

using ConeId = std::size_t;
using IdList = std::vector<ConeId>;

/// A finite fan in N = Z^r. Cones are indexed in (dim, rays) order, so id 0
/// is always {0} and ids 1..#rays are the rays in lexicographic order.
/// Immutable; copies share data.
class Fan {
 public:
  /// The fan {0} in Z^0.
  Fan();

  [[nodiscard]] Index ambient_rank() const { return data_->rank; }
  /// Δ(1): primitive ray generators, sorted lexicographically.
  [[nodiscard]] const std::vector<IntVector>& rays() const { return data_->rays; }
  [[nodiscard]] const std::vector<Cone>& cones() const { return data_->cones; }
  [[nodiscard]] std::size_t size() const { return data_->cones.size(); }
  [[nodiscard]] const Cone& cone(ConeId id) const;
  /// Ids of the inclusion-maximal cones, ascending.
  [[nodiscard]] const IdList& maximal_ids() const { return data_->maximal; }
  /// Indices into rays() of the rays of a cone, ascending.
  [[nodiscard]] const std::vector<std::size_t>& ray_indices(ConeId id) const;
  /// Ids of all faces of a cone (including itself), ascending.
  [[nodiscard]] const IdList& face_ids(ConeId id) const;
  /// Cone id of ray index j.
  [[nodiscard]] ConeId ray_cone(std::size_t j) const { return j + 1; }
  [[nodiscard]] std::optional<ConeId> find(const Cone& c) const;
  /// Id of the cone with exactly these ray indices, if present.
  [[nodiscard]] std::optional<ConeId> find_by_rays(const std::vector<std::size_t>& ray_indices) const;
  /// The intersection of two cones of the fan (a face of both).
  [[nodiscard]] ConeId meet(ConeId a, ConeId b) const;
  /// Whether every cone is smooth.
  [[nodiscard]] bool is_smooth() const;
  /// Whether `ancestor` is this fan or one it was obtained from by stellar
  /// subdivisions.
  [[nodiscard]] bool descends_from(const Fan& ancestor) const;
  /// For a fan produced by stellar_subdivide: per maximal cone (in the order
  /// of maximal_ids()), the id of the parent's maximal cone containing it.
  [[nodiscard]] const IdList& parent_ids() const { return data_->parent_ids; }

  /// Maximal cones as ray-index lists, sorted; the on-disk representation.
  [[nodiscard]] std::vector<std::vector<std::size_t>> max_cone_rays() const;

  friend bool operator==(const Fan& a, const Fan& b);

 private:
  struct Data {
    Index rank = 0;
    std::vector<IntVector> rays;
    std::vector<Cone> cones;
    std::vector<std::vector<std::size_t>> cone_rays;
    std::vector<IdList> face_ids;
    IdList maximal;
    std::map<std::vector<std::size_t>, ConeId> by_rays;
    std::shared_ptr<const Data> parent;
    IdList parent_ids;
  };
  explicit Fan(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;

  friend Fan assemble_fan(Index, const std::vector<Cone>&, const Fan*, IdList);
};

/// Outcome of checking one fan axiom.
struct AxiomCheck {
  std::string name;
  bool ok = true;
  std::string detail;
  /// Offending pairs of max-cone input positions (intersection axiom, duplicates).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  /// Offending max-cone input positions (convexity axiom).
  std::vector<std::size_t> cones;
};

struct FanValidation {
  std::vector<AxiomCheck> checks;
  std::optional<Fan> fan;  // set iff every check passes
  [[nodiscard]] bool ok() const { return fan.has_value(); }
};

/// Checks every axiom and reports all failures instead of stopping at the first.
FanValidation validate_fan(Index ambient_rank, const std::vector<IntVector>& rays,
                           const std::vector<std::vector<std::size_t>>& max_cones);

/// Builds and validates a fan; throws InvalidFanInput, NotStronglyConvex,
/// DuplicateCone or IntersectionNotFace.
Fan build_fan(Index ambient_rank, const std::vector<IntVector>& rays,
              const std::vector<std::vector<std::size_t>>& max_cones);

/// Fan generated by the given cones (closed under faces, no axiom checks).
/// The caller guarantees the fan axioms.
Fan assemble_fan(Index ambient_rank, const std::vector<Cone>& generators, const Fan* parent = nullptr,
                 IdList parent_ids = {});

/// An open subset of a fan: a down-closed set of cone ids.
class Subfan {
 public:
  Subfan(Fan fan, IdList ids);  // throws NotASubfan

  [[nodiscard]] const Fan& fan() const { return fan_; }
  [[nodiscard]] const IdList& ids() const { return ids_; }
  [[nodiscard]] bool contains(ConeId id) const;
  [[nodiscard]] bool empty() const { return ids_.empty(); }
  /// Cones of the subfan that are not proper faces of another of its cones.
  [[nodiscard]] IdList maximal_ids() const;
  /// Indices (into fan().rays()) of the rays in the subfan.
  [[nodiscard]] std::vector<std::size_t> ray_indices() const;
  /// The subfan re-rooted as a standalone fan.
  [[nodiscard]] Fan as_fan() const;

  friend Subfan operator&(const Subfan& a, const Subfan& b);
  friend Subfan operator|(const Subfan& a, const Subfan& b);
  friend bool operator==(const Subfan& a, const Subfan& b);

 private:
  Fan fan_;
  IdList ids_;
};

Subfan whole(const Fan& f);
/// Δ(σ): all faces of σ. Throws UnknownCone.
Subfan minimal_open(const Fan& f, ConeId sigma);

/// σ_I for subsets I of the maximal cones (positions into maximal_ids()).
class Nerve {
 public:
  struct Entry {
    std::vector<std::size_t> indices;  // strictly increasing positions
    ConeId cone;
  };
  /// Entries with |I| = size, in lexicographic order of I.
  [[nodiscard]] const std::vector<Entry>& level(std::size_t size) const;
  [[nodiscard]] std::size_t max_size() const { return levels_.size(); }
  [[nodiscard]] std::optional<ConeId> cone(const std::vector<std::size_t>& indices) const;

 private:
  std::vector<std::vector<Entry>> levels_;
  std::map<std::vector<std::size_t>, ConeId> lookup_;
  friend Nerve nerve(const Fan& f, std::size_t max_depth);
};

/// All I with |I| <= max_depth + 1. Asserts Δ(σ_i) ∩ Δ(σ_j) = Δ(σ_i ∩ σ_j).
Nerve nerve(const Fan& f, std::size_t max_depth);

/// Stellar subdivision at a primitive v in the support. Throws NotPrimitive
/// or NotInSupport. Returns f itself when nothing changes.
Fan stellar_subdivide(const Fan& f, const IntVector& v);

/// Whether every cone of fine lies in a cone of coarse and the supports agree.
bool is_refinement(const Fan& fine, const Fan& coarse);

/// Same check, never using subdivision provenance.
bool is_refinement_geometric(const Fan& fine, const Fan& coarse);

/// Every cone of fine lies in some cone of coarse.
bool cones_contained(const Fan& fine, const Fan& coarse);

/// Every maximal cone of coarse is the union of the cones of fine it
/// contains, certified by comparing exact truncated volumes.
bool covers_support(const Fan& fine, const Fan& coarse);

/// Hermite basis (rows) of the sum of the span lattices of the maximal cones.
IntMatrix support_lattice(const Fan& f);

/// Whether v lies in the support; the first containing maximal cone if so.
std::optional<ConeId> containing_cone(const Fan& f, const IntVector& v);

}  // namespace toric
