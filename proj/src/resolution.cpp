#include "toric/resolution.hpp"

#include "toric/integer.hpp"
#include "toric/linalg/lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace toric {

namespace {

std::optional<ConeId> first_non_simplicial(const Fan& f) {
  for (ConeId id = 0; id < f.size(); ++id) {
    if (!is_simplicial(f.cone(id))) return id;
  }
  return std::nullopt;
}

// Multiplicities of all cones, largest first.
std::vector<Integer> multiplicity_profile(const Fan& f) {
  std::vector<Integer> out;
  for (const Cone& c : f.cones()) out.push_back(multiplicity(c));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

std::vector<IntVector> ResolutionCertificate::added_rays() const {
  std::vector<IntVector> out;
  for (const auto& r : output.rays()) {
    bool old = std::any_of(input.rays().begin(), input.rays().end(), [&](const IntVector& s) { return equal(r, s); });
    if (!old) out.push_back(r);
  }
  return out;
}

Fan make_simplicial(const Fan& f) {
  Fan g = f;
  while (auto id = first_non_simplicial(g)) {
    Fan next = stellar_subdivide(g, g.cone(*id).rays().front());
    if (next.size() == g.size() && next == g) throw std::logic_error("make_simplicial: no progress");
    g = next;
  }
  return g;
}

namespace {

// Inverse of a nonsingular integer matrix over Q, by Gauss-Jordan.
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& b) {
  const std::size_t d = static_cast<std::size_t>(b.rows());
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = Rational(b(static_cast<Index>(i), static_cast<Index>(j)));
    m[i][d + i] = Rational(Integer(1));
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (m[piv][col].num().is_zero()) ++piv;
    std::swap(m[piv], m[col]);
    const Rational p = m[col][col];
    for (auto& x : m[col]) x = x / p;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || m[r][col].num().is_zero()) continue;
      const Rational k = m[r][col];
      for (std::size_t j = 0; j < 2 * d; ++j) m[r][j] = m[r][j] - k * m[col][j];
    }
  }
  for (auto& row : m) row.erase(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(d));
  return m;
}

}  // namespace

IntVector subdivision_point(const Cone& c) {
  // Rays in span coordinates as columns: x = B q.
  const Index d = c.dim();
  if (!is_simplicial(c)) throw NotSimplicial();
  IntMatrix b(d, d);
  for (Index i = 0; i < d; ++i) b.col(i) = c.span_coordinates(c.rays()[static_cast<std::size_t>(i)]);
  auto inv = rational_inverse(b);
  // Z^d / B Z^d has representatives u^{-1} a, 0 <= a_i < s_i.
  auto smith = snf(b);

  std::optional<std::pair<Rational, IntVector>> best;
  std::vector<Integer> a(static_cast<std::size_t>(d), Integer(0));
  for (;;) {
    IntVector x = multiply(smith.u_inverse, vector_from(a));
    std::vector<Rational> q(static_cast<std::size_t>(d));
    Rational sum;
    for (Index i = 0; i < d; ++i) {
      Rational qi;
      for (Index j = 0; j < d; ++j) qi += inv[i][j] * Rational(x(j));
      q[i] = qi.frac();
      sum += q[i];
    }
    if (!sum.num().is_zero()) {
      IntVector span_point(d);
      for (Index i = 0; i < d; ++i) {
        Rational v;
        for (Index j = 0; j < d; ++j) v += q[j] * Rational(b(i, j));
        span_point(i) = v.num();  // integral: x' = x - B floor(q)
      }
      IntVector point = multiply(IntMatrix(c.span_basis().transpose()), span_point);
      if (!best || sum < best->first || (sum == best->first && lex_less(point, best->second))) {
        best = std::make_pair(sum, point);
      }
    }
    Index i = 0;
    for (; i < d; ++i) {
      auto& ai = a[static_cast<std::size_t>(i)];
      ai += 1;
      if (ai < smith.s(i, i)) break;
      ai = 0;
    }
    if (i == d) break;
  }
  if (!best) throw std::invalid_argument("subdivision_point: cone is smooth");
  return primitive(best->second);
}

ResolutionCertificate certify(const Fan& input, const Fan& output, std::vector<IntVector> points) {
  ResolutionCertificate cert{input, output, std::move(points)};
  cert.refines = cones_contained(output, input);
  cert.support_equal = covers_support(output, input);
  cert.all_smooth = output.is_smooth();
  cert.lattice_preserved = same_row_lattice(support_lattice(output), support_lattice(input));
  return cert;
}

Resolution resolve(const Fan& f) {
  Fan g = make_simplicial(f);
  std::vector<IntVector> points;
  std::vector<Integer> profile = multiplicity_profile(g);
  for (;;) {
    std::optional<ConeId> target;
    Integer worst = 1;
    for (ConeId id = 0; id < g.size(); ++id) {
      Integer m = multiplicity(g.cone(id));
      if (worst < m) {
        worst = m;
        target = id;
      }
    }
    if (!target) break;
    IntVector v = subdivision_point(g.cone(*target));
    g = stellar_subdivide(g, v);
    points.push_back(v);
    std::vector<Integer> next = multiplicity_profile(g);
    if (!std::lexicographical_compare(next.begin(), next.end(), profile.begin(), profile.end())) {
      throw std::logic_error("resolve: multiplicities did not decrease");
    }
    profile = std::move(next);
  }
  ResolutionCertificate cert = certify(f, g, std::move(points));
  return {g, std::move(cert)};
}

}  // namespace toric
