#pragma once

#include "toric/fan.hpp"

#include <string>
#include <vector>

namespace toric {

struct ResolutionCertificate {
  Fan input;
  Fan output;
  /// Points added by stellar subdivision, in order (existing rays used to
  /// triangulate are not listed).
  std::vector<IntVector> subdivision_points;
  bool refines = false;
  bool support_equal = false;
  bool all_smooth = false;
  bool lattice_preserved = false;

  [[nodiscard]] bool ok() const { return refines && support_equal && all_smooth && lattice_preserved; }
  /// Rays of the output that are not rays of the input.
  [[nodiscard]] std::vector<IntVector> added_rays() const;
};

struct Resolution {
  Fan fan;
  ResolutionCertificate certificate;
};

/// Pulling triangulation at existing rays until every cone is simplicial.
Fan make_simplicial(const Fan& f);

/// A smooth subdivision by stellar subdivisions. Each step subdivides the
/// first cone of maximal multiplicity at its parallelepiped point with least
/// coordinate sum (ties: lexicographically least point).
Resolution resolve(const Fan& f);

/// The point resolve() would add to a singular simplicial cone.
IntVector subdivision_point(const Cone& c);

/// Recomputes the four certificate checks from input and output alone.
ResolutionCertificate certify(const Fan& input, const Fan& output, std::vector<IntVector> points = {});

}  // namespace toric
