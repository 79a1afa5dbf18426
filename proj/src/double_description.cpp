#include "double_description.hpp"

#include <vector>

namespace toric::detail {

namespace {

struct Ray {
  IntVector v;
  std::vector<bool> tight;  // over the inequalities processed so far
};

Integer eval(const IntMatrix& a, Index row, const IntVector& x) {
  Integer s = 0;
  for (Index j = 0; j < x.size(); ++j) {
    if (!is_zero(a(row, j)) && !is_zero(x(j))) s += a(row, j) * x(j);
  }
  return s;
}

// c1 * x + c2 * y, made primitive.
IntVector combine(const Integer& c1, const IntVector& x, const Integer& c2, const IntVector& y) {
  IntVector out(x.size());
  for (Index i = 0; i < x.size(); ++i) out(i) = c1 * x(i) + c2 * y(i);
  return primitive(std::move(out));
}

bool contains_all(const std::vector<bool>& big, const std::vector<bool>& small) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] && !big[i]) return false;
  }
  return true;
}

}  // namespace

ConeGenerators double_description(const IntMatrix& a) {
  const Index d = a.cols();
  std::vector<IntVector> lineality;
  for (Index i = 0; i < d; ++i) {
    IntVector e = IntVector::Zero(d);
    e(i) = 1;
    lineality.push_back(e);
  }
  std::vector<Ray> rays;

  for (Index k = 0; k < a.rows(); ++k) {
    for (auto& r : rays) r.tight.push_back(false);

    std::size_t pick = lineality.size();
    Integer pick_value;
    for (std::size_t i = 0; i < lineality.size(); ++i) {
      Integer val = eval(a, k, lineality[i]);
      if (!val.is_zero()) {
        pick = i;
        pick_value = val;
        break;
      }
    }

    if (pick < lineality.size()) {
      // The new inequality cuts the lineality space: one direction becomes a
      // ray, everything else is projected onto the hyperplane.
      IntVector l0 = lineality[pick];
      if (pick_value.sign() < 0) {
        l0 = -l0;
        pick_value = -pick_value;
      }
      std::vector<IntVector> next;
      for (std::size_t i = 0; i < lineality.size(); ++i) {
        if (i == pick) continue;
        Integer val = eval(a, k, lineality[i]);
        next.push_back(val.is_zero() ? lineality[i] : combine(pick_value, lineality[i], -val, l0));
      }
      lineality = std::move(next);
      for (auto& r : rays) {
        Integer val = eval(a, k, r.v);
        if (!val.is_zero()) r.v = combine(pick_value, r.v, -val, l0);
        r.tight.back() = true;
      }
      Ray fresh{l0, std::vector<bool>(static_cast<std::size_t>(k + 1), true)};
      fresh.tight.back() = false;
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Integer> values;
    values.reserve(rays.size());
    for (const auto& r : rays) values.push_back(eval(a, k, r.v));

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (values[i].sign() >= 0) {
        Ray r = rays[i];
        if (values[i].is_zero()) r.tight.back() = true;
        next.push_back(std::move(r));
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (values[p].sign() <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (values[n].sign() >= 0) continue;
        std::vector<bool> common(rays[p].tight.size());
        for (std::size_t t = 0; t < common.size(); ++t) common[t] = rays[p].tight[t] && rays[n].tight[t];
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == n) continue;
          if (contains_all(rays[o].tight, common)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r{combine(values[p], rays[n].v, -values[n], rays[p].v), common};
        r.tight.back() = true;
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = std::move(lineality);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace toric::detail
