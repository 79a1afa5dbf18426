#include "toric/linalg/fin_ab_group.hpp"

#include "toric/linalg/lattice.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace toric {

FinAbGroup::FinAbGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < Integer(2)) {
      throw std::invalid_argument("FinAbGroup: torsion entry " + torsion_[i].to_string() + " < 2");
    }
    if (i > 0 && !mod_floor(torsion_[i], torsion_[i - 1]).is_zero()) {
      throw std::invalid_argument("FinAbGroup: torsion entries must divide each other in order");
    }
  }
}

FinAbGroup FinAbGroup::from_smith_diagonal(const std::vector<Integer>& diagonal, std::size_t ambient) {
  std::size_t free = ambient;
  std::vector<Integer> torsion;
  for (const Integer& d : diagonal) {
    if (d.is_zero()) continue;
    --free;
    Integer a = abs(d);
    if (a == 1) continue;
    torsion.push_back(a);
  }
  return {free, std::move(torsion)};
}

FinAbGroup FinAbGroup::cyclic(const Integer& order) {
  if (order.is_zero()) return free(1);
  if (abs(order) == 1) return {};
  return {0, {abs(order)}};
}

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& other) const {
  std::vector<Integer> orders = torsion_;
  orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
  IntMatrix d = IntMatrix::Zero(static_cast<Index>(orders.size()), static_cast<Index>(orders.size()));
  for (std::size_t i = 0; i < orders.size(); ++i) d(static_cast<Index>(i), static_cast<Index>(i)) = orders[i];
  FinAbGroup t = cokernel(d);
  return {free_rank_ + other.free_rank_, t.torsion_};
}

Integer FinAbGroup::torsion_order() const {
  Integer p = 1;
  for (const Integer& t : torsion_) p *= t;
  return p;
}

std::optional<Integer> FinAbGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  return torsion_order();
}

Integer FinAbGroup::coordinate_order(std::size_t i) const {
  if (i < torsion_.size()) return torsion_[i];
  if (i < generator_count()) return 0;
  throw std::out_of_range("FinAbGroup: coordinate index out of range");
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) os << '^' << free_rank_;
    first = false;
  }
  for (const Integer& t : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FinAbGroup& g) { return os << g.to_string(); }

}  // namespace toric
