#include "support/oracles.hpp"
#include "toric/cone.hpp"
#include "toric/linalg.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace toric;

namespace {

IntVector v(std::initializer_list<long long> xs) {
  IntVector out(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long long x : xs) out(i++) = x;
  return out;
}

Cone cone(Index rank, std::initializer_list<IntVector> gens) { return make_cone(rank, std::vector<IntVector>(gens)); }

std::vector<long long> small(const IntVector& x) {
  std::vector<long long> out;
  for (Index i = 0; i < x.size(); ++i) out.push_back(*x(i).to_int64());
  return out;
}

bool has_vector(const std::vector<IntVector>& vs, const IntVector& x) {
  return std::any_of(vs.begin(), vs.end(), [&](const IntVector& y) { return equal(x, y); });
}

struct RandomCone {
  Index rank;
  std::vector<IntVector> gens;
};

RandomCone random_gens(std::mt19937& rng) {
  std::uniform_int_distribution<int> rank_d(1, 4), count_d(1, 6), entry(-3, 3);
  RandomCone rc;
  rc.rank = rank_d(rng);
  int n = count_d(rng);
  for (int i = 0; i < n; ++i) {
    IntVector g(rc.rank);
    for (Index j = 0; j < rc.rank; ++j) g(j) = entry(rng);
    rc.gens.push_back(g);
  }
  return rc;
}

std::vector<std::vector<long long>> small_all(const std::vector<IntVector>& vs) {
  std::vector<std::vector<long long>> out;
  for (const auto& x : vs) out.push_back(small(x));
  return out;
}

}  // namespace

TEST_CASE("make_cone examples") {
  Cone zero = make_cone(2, {});
  CHECK(zero.dim() == 0);
  CHECK(zero.is_zero());
  CHECK(zero.facet_normals().empty());

  Cone quad = cone(2, {v({1, 0}), v({0, 1})});
  CHECK(quad.dim() == 2);
  REQUIRE(quad.facet_normals().size() == 2);
  CHECK(has_vector(quad.facet_normals(), v({1, 0})));
  CHECK(has_vector(quad.facet_normals(), v({0, 1})));

  CHECK_THROWS_AS(cone(2, {v({1, 0}), v({-1, 0})}), NotStronglyConvex);
  CHECK_THROWS_AS(cone(2, {v({1, 0}), v({0, 1}), v({-1, -1})}), NotStronglyConvex);
  CHECK_THROWS_AS(cone(3, {v({1, 0, 0}), v({-1, 0, 0}), v({0, 0, 1})}), NotStronglyConvex);
}

TEST_CASE("rays are primitive, deduplicated, sorted, and redundant generators dropped") {
  Cone c = cone(2, {v({2, 4}), v({1, 2}), v({3, 0}), v({1, 1}), v({0, 0})});
  REQUIRE(c.rays().size() == 2);
  CHECK(equal(c.rays()[0], v({1, 0})));
  CHECK(equal(c.rays()[1], v({1, 2})));
  CHECK(c.generators().size() == 5);
}

TEST_CASE("faces") {
  CHECK(faces(cone(2, {v({1, 0}), v({0, 1})})).size() == 4);
  auto zf = faces(make_cone(3, {}));
  REQUIRE(zf.size() == 1);
  CHECK(zf[0].is_zero());

  Cone sigma = cone(3, {v({1, 1, 1}), v({1, 0, 0}), v({0, 1, 0})});
  auto fs = faces(sigma);
  REQUIRE(fs.size() == 8);
  std::vector<int> by_dim(4, 0);
  for (const auto& f : fs) ++by_dim[static_cast<std::size_t>(f.dim())];
  CHECK(by_dim == std::vector<int>{1, 3, 3, 1});
  CHECK(fs.front().is_zero());
  CHECK(fs.back() == sigma);
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) CHECK(fs[i] < fs[i + 1]);

  // Square pyramid: 1 + 4 + 4 + 1.
  CHECK(faces(cone(3, {v({1, 0, 1}), v({0, 1, 1}), v({-1, 0, 1}), v({0, -1, 1})})).size() == 10);
}

TEST_CASE("intersect") {
  Cone a = cone(3, {v({1, 1, 1}), v({1, 0, 0}), v({0, 1, 0})});
  Cone b = cone(3, {v({1, 1, 1}), v({0, 1, 0}), v({0, 0, 1})});
  CHECK(intersect(a, a) == a);
  CHECK(intersect(a, b) == cone(3, {v({1, 1, 1}), v({0, 1, 0})}));
  CHECK(intersect(cone(2, {v({1, 0}), v({0, 1})}), cone(2, {v({-1, 0}), v({0, -1})})).is_zero());
  // Partial overlap that is not a face of either.
  Cone c = cone(2, {v({1, 0}), v({1, 2})});
  Cone d = cone(2, {v({0, 1}), v({2, 1})});
  CHECK(intersect(c, d) == cone(2, {v({2, 1}), v({1, 2})}));
}

TEST_CASE("is_face") {
  Cone quad = cone(2, {v({1, 0}), v({0, 1})});
  CHECK(is_face(make_cone(2, {}), quad));
  CHECK(is_face(cone(2, {v({1, 0})}), quad));
  CHECK_FALSE(is_face(cone(2, {v({1, 1})}), quad));
  CHECK(is_face(quad, quad));
  CHECK_FALSE(is_face(quad, cone(2, {v({1, 0})})));
  CHECK_FALSE(is_face(cone(2, {v({-1, 0})}), quad));
}

TEST_CASE("span_lattice") {
  IntMatrix b = span_lattice(cone(2, {v({2, 4})}));
  REQUIRE(b.rows() == 1);
  CHECK(equal(IntVector(b.row(0).transpose()), v({1, 2})));
  IntMatrix full = span_lattice(cone(3, {v({1, 1, 1}), v({1, 0, 0}), v({0, 1, 0})}));
  CHECK(abs_determinant(full) == 1);
  IntMatrix two = span_lattice(cone(2, {v({1, 1}), v({1, -1})}));
  CHECK(two.rows() == 2);
  CHECK(abs_determinant(two) == 1);
  CHECK(span_lattice(make_cone(3, {})).rows() == 0);
}

TEST_CASE("multiplicity, simplicial, smooth") {
  CHECK(multiplicity(cone(2, {v({1, 0}), v({0, 1})})) == 1);
  CHECK(multiplicity(cone(2, {v({0, 1}), v({2, 1})})) == 2);
  CHECK(multiplicity(cone(3, {v({1, 1, 1}), v({1, 0, 0}), v({0, 1, 0})})) == 1);
  CHECK(multiplicity(cone(3, {v({1, 1, 0}), v({1, -1, 0})})) == 2);
  CHECK(is_smooth(make_cone(2, {})));
  Cone q = cone(2, {v({0, 1}), v({2, 1})});
  CHECK(is_simplicial(q));
  CHECK_FALSE(is_smooth(q));
  Cone square = cone(3, {v({1, 0, 1}), v({0, 1, 1}), v({-1, 0, 1}), v({0, -1, 1})});
  CHECK_FALSE(is_simplicial(square));
  CHECK_THROWS_AS(multiplicity(square), NotSimplicial);
}

TEST_CASE("random cones: membership, double description round trip, faces") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> entry(-4, 4);
  int built = 0, rejected = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto rc = random_gens(rng);
    auto gens_small = small_all(rc.gens);
    bool has_line = false;
    for (const auto& g : gens_small) {
      if (std::all_of(g.begin(), g.end(), [](long long x) { return x == 0; })) continue;
      std::vector<long long> neg = g;
      for (auto& x : neg) x = -x;
      if (oracle::in_cone(gens_small, neg)) has_line = true;
    }
    Cone c;
    try {
      c = make_cone(rc.rank, rc.gens);
    } catch (const NotStronglyConvex&) {
      CHECK(has_line);
      ++rejected;
      continue;
    }
    CHECK_FALSE(has_line);
    ++built;

    for (const auto& g : rc.gens) CHECK(c.contains(g));
    for (const auto& r : c.rays()) {
      CHECK(content(r) == 1);
      // Extreme: not in the cone of the other rays.
      std::vector<std::vector<long long>> others;
      for (const auto& s : c.rays()) {
        if (!equal(s, r)) others.push_back(small(s));
      }
      CHECK_FALSE(oracle::in_cone(others, small(r)));
    }
    for (int k = 0; k < 20; ++k) {
      IntVector x(rc.rank);
      for (Index j = 0; j < rc.rank; ++j) x(j) = entry(rng);
      CHECK(c.contains(x) == oracle::in_cone(gens_small, small(x)));
    }

    // Round trip through the rays and, for full cones, through the dual.
    Cone again = make_cone(rc.rank, c.rays());
    CHECK(again == c);
    CHECK(again.facet_normals().size() == c.facet_normals().size());
    if (c.dim() == rc.rank) {
      Cone dual = make_cone(rc.rank, c.facet_normals());
      CHECK(dual.rays().size() == c.facet_normals().size());
      CHECK(make_cone(rc.rank, dual.facet_normals()) == c);
    }

    auto fs = faces(c);
    if (c.facet_normals().size() <= 6) {
      std::set<std::vector<bool>> masks;
      const std::size_t nf = c.facet_normals().size();
      for (std::size_t bits = 0; bits < (std::size_t{1} << nf); ++bits) {
        std::vector<bool> mask;
        for (const auto& r : c.rays()) {
          bool tight = true;
          for (std::size_t f = 0; f < nf; ++f) {
            if ((bits >> f) & 1U) tight = tight && dot(c.facet_normals()[f], r).is_zero();
          }
          mask.push_back(tight);
        }
        masks.insert(mask);
      }
      CHECK(fs.size() == masks.size());
    }
    for (const auto& f : fs) {
      CHECK(is_face(f, c));
      for (const auto& g : fs) {
        Cone fg = intersect(f, g);
        CHECK(std::find(fs.begin(), fs.end(), fg) != fs.end());
        CHECK(is_face(fg, f));
      }
      for (const auto& ff : faces(f)) CHECK(std::find(fs.begin(), fs.end(), ff) != fs.end());
    }
    CHECK(same_row_lattice(saturate(span_lattice(c)), span_lattice(c)));
  }
  CHECK(built > 100);
  CHECK(rejected > 10);
}
