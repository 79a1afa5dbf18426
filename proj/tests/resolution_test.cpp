#include "support/corpus.hpp"
#include "toric/cech.hpp"
#include "toric/linalg.hpp"
#include "toric/resolution.hpp"

#include <doctest.h>

#include <random>

using namespace toric;
using corpus::vec;

TEST_CASE("make_simplicial") {
  Fan sq = corpus::square_cone();
  Fan s = make_simplicial(sq);
  CHECK(s.maximal_ids().size() == 2);
  for (ConeId id : s.maximal_ids()) CHECK(is_simplicial(s.cone(id)));
  CHECK(s.rays().size() == sq.rays().size());
  CHECK(is_refinement_geometric(s, sq));
  CHECK(make_simplicial(corpus::p2()) == corpus::p2());
  CHECK(make_simplicial(corpus::torus(2)) == corpus::torus(2));
  Fan cube = make_simplicial(corpus::cube());
  for (const Cone& c : cube.cones()) CHECK(is_simplicial(c));
  CHECK(cube.rays().size() == 8);
}

TEST_CASE("subdivision points") {
  CHECK(equal(subdivision_point(make_cone(2, {vec({0, 1}), vec({2, 1})})), vec({1, 1})));
  // cone{(0,1),(3,2)}: points (1,1) and (2,2)/... ; least coordinate sum wins.
  IntVector v = subdivision_point(make_cone(2, {vec({0, 1}), vec({3, 2})}));
  CHECK(equal(v, vec({1, 1})));
  CHECK_THROWS(subdivision_point(make_cone(2, {vec({1, 0}), vec({0, 1})})));
}

TEST_CASE("resolve: examples") {
  Resolution q = resolve(corpus::quadric());
  CHECK(q.certificate.ok());
  REQUIRE(q.certificate.added_rays().size() == 1);
  CHECK(equal(q.certificate.added_rays().front(), vec({1, 1})));
  CHECK(q.fan.maximal_ids().size() == 2);

  Resolution e = resolve(corpus::three_cone());
  CHECK(e.fan == corpus::three_cone());
  CHECK(e.certificate.ok());
  CHECK(e.certificate.subdivision_points.empty());
}

TEST_CASE("resolve: certificates, idempotence and vanishing on the corpus") {
  for (const auto& [name, f] : corpus::named()) {
    CAPTURE(name);
    Resolution r = resolve(f);
    CHECK(r.certificate.ok());
    CHECK(r.certificate.refines);
    CHECK(r.certificate.support_equal);
    CHECK(r.certificate.all_smooth);
    CHECK(r.certificate.lattice_preserved);
    CHECK(is_refinement(r.fan, f));
    CHECK(resolve(r.fan).fan == r.fan);
    CechComplex sf(r.fan, Sheaf::SF);
    CHECK(cohomology(sf, 1).group().is_trivial());
    CHECK(cohomology(sf, 2).group().is_trivial());
  }
}

TEST_CASE("resolve random fans") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    Fan f = corpus::random_fan(rng, trial % 2 == 0 ? 2 : 3, trial % 3, 4);
    Resolution r = resolve(f);
    CHECK(r.certificate.ok());
    CHECK(certify(f, r.fan).ok());
  }
}
