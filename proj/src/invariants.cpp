#include "toric/invariants.hpp"

#include "toric/linalg/lattice.hpp"
#include "toric/sheaf.hpp"

namespace toric {

FinAbGroup picard(const Fan& f) {
  SupportFunctionModule sf = sf_group(whole(f));
  if (sf.rank() == 0) return {};
  return cokernel(linear_restriction_matrix(sf));
}

FinAbGroup class_group(const Fan& f) {
  if (f.rays().empty()) return {};
  IntMatrix rays(static_cast<Index>(f.rays().size()), f.ambient_rank());
  for (std::size_t i = 0; i < f.rays().size(); ++i) rays.row(static_cast<Index>(i)) = f.rays()[i].transpose();
  return cokernel(rays);
}

FinAbGroup local_class_group(const Fan& f, ConeId sigma) { return class_group(minimal_open(f, sigma).as_fan()); }

IdList singular_cones(const Fan& f) {
  IdList out;
  for (ConeId id = 0; id < f.size(); ++id) {
    if (!is_smooth(f.cone(id))) out.push_back(id);
  }
  return out;
}

std::vector<Integer> nu_invariants(const Fan& f) {
  const Index r = f.ambient_rank();
  std::vector<Integer> nu(static_cast<std::size_t>(r), Integer(0));
  IntMatrix lattice = support_lattice(f);
  if (lattice.rows() == 0) return nu;
  auto smith = snf(lattice);
  for (Index i = 0; i < smith.rank; ++i) nu[static_cast<std::size_t>(i)] = smith.s(i, i);
  return nu;
}

InvariantReport invariants(const Fan& f) {
  InvariantReport out;
  out.pic = picard(f);
  out.cl = class_group(f);
  out.sf_rank = sf_group(whole(f)).rank();
  out.u_rank = u_group(whole(f)).rank();
  out.singular_cone_ids = singular_cones(f);
  out.nu = nu_invariants(f);
  return out;
}

}  // namespace toric
