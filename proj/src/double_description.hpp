#pragma once

#include "toric/linalg/matrix.hpp"

#include <vector>

namespace toric::detail {

/// Generators of the cone {x : a x >= 0} (one inequality per row of a):
/// a basis of its lineality space plus its extreme rays modulo that space.
struct ConeGenerators {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;  // primitive
};

/// Incremental double description over the integers (fraction free).
ConeGenerators double_description(const IntMatrix& inequalities);

}  // namespace toric::detail
