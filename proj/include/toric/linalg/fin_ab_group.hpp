#pragma once

#include "toric/integer.hpp"

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace toric {

/// A finitely generated abelian group Z^free_rank + Z/t_1 + ... + Z/t_k with
/// t_1 | t_2 | ... | t_k and every t_i >= 2.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  /// Throws std::invalid_argument if torsion violates the invariants above.
  FinAbGroup(std::size_t free_rank, std::vector<Integer> torsion);

  /// The group Z^ambient / (diagonal lattice), for a diagonal with entries
  /// in Smith order; entries equal to 1 vanish and missing/zero ones are free.
  static FinAbGroup from_smith_diagonal(const std::vector<Integer>& diagonal, std::size_t ambient);
  static FinAbGroup free(std::size_t rank) { return {rank, {}}; }
  static FinAbGroup cyclic(const Integer& order);

  /// Normalized direct sum (invariant factors recomputed).
  [[nodiscard]] FinAbGroup direct_sum(const FinAbGroup& other) const;

  [[nodiscard]] std::size_t free_rank() const { return free_rank_; }
  [[nodiscard]] const std::vector<Integer>& torsion() const { return torsion_; }
  [[nodiscard]] bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  [[nodiscard]] bool is_finite() const { return free_rank_ == 0; }
  /// Order of the torsion subgroup.
  [[nodiscard]] Integer torsion_order() const;
  /// Order of the group; nullopt when infinite.
  [[nodiscard]] std::optional<Integer> order() const;
  /// Number of cyclic coordinates (torsion first, then free).
  [[nodiscard]] std::size_t generator_count() const { return torsion_.size() + free_rank_; }
  /// Order of the i-th cyclic coordinate, 0 for a free one.
  [[nodiscard]] Integer coordinate_order(std::size_t i) const;

  /// "0", "Z", "Z^2 + Z/2 + Z/6": free part first, torsion ascending.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FinAbGroup& g);

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

}  // namespace toric
