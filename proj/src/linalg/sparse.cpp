#include "toric/linalg/sparse.hpp"

#include "toric/linalg/complex.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace toric {

SparseMatrix::SparseMatrix(Index rows, Index cols) : rows_(rows), cols_(static_cast<std::size_t>(cols)) {}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

void SparseMatrix::add(Index r, Index c, const Integer& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols()) throw std::out_of_range("SparseMatrix::add: index out of range");
  if (v.is_zero()) return;
  auto& col = cols_[static_cast<std::size_t>(c)];
  if (!col.empty() && col.back().first == r) {
    col.back().second += v;
    if (col.back().second.is_zero()) col.pop_back();
    return;
  }
  if (!col.empty() && col.back().first > r) throw std::invalid_argument("SparseMatrix::add: rows out of order");
  col.emplace_back(r, v);
}

IntVector SparseMatrix::apply(const IntVector& x) const {
  if (x.size() != cols()) throw std::invalid_argument("SparseMatrix::apply: size mismatch");
  IntVector y = IntVector::Zero(rows_);
  for (Index c = 0; c < cols(); ++c) {
    if (x(c).is_zero()) continue;
    for (const auto& [r, v] : col(c)) y(r) += v * x(c);
  }
  return y;
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix m = IntMatrix::Zero(rows_, cols());
  for (Index c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : col(c)) m(r, c) = v;
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index r = 0; r < m.rows(); ++r) {
      if (!m(r, c).is_zero()) s.cols_[static_cast<std::size_t>(c)].emplace_back(r, m(r, c));
    }
  }
  return s;
}

bool SparseMatrix::composes_to_zero(const SparseMatrix& other) const {
  if (cols() != other.rows()) throw std::invalid_argument("SparseMatrix::composes_to_zero: shape mismatch");
  for (Index c = 0; c < other.cols(); ++c) {
    std::map<Index, Integer> acc;
    for (const auto& [k, w] : other.col(c)) {
      for (const auto& [r, v] : col(k)) acc[r] += v * w;
    }
    for (const auto& [r, v] : acc) {
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

namespace {

using SparseVec = std::map<Index, Integer>;

void axpy(SparseVec& target, const Integer& s, const SparseVec& source) {
  for (const auto& [i, v] : source) {
    Integer& t = target[i];
    t += s * v;
    if (t.is_zero()) target.erase(i);
  }
}

// A matrix under elimination: columns plus a row index.
struct Work {
  std::vector<SparseVec> cols;
  std::vector<std::set<Index>> rows;

  explicit Work(const SparseMatrix& m) : cols(static_cast<std::size_t>(m.cols())), rows(static_cast<std::size_t>(m.rows())) {
    for (Index c = 0; c < m.cols(); ++c) {
      for (const auto& [r, v] : m.col(c)) {
        cols[static_cast<std::size_t>(c)].emplace(r, v);
        rows[static_cast<std::size_t>(r)].insert(c);
      }
    }
  }

  // col[target] += s * col[source], keeping the row index current.
  void add_col(Index target, const Integer& s, Index source) {
    auto& t = cols[static_cast<std::size_t>(target)];
    for (const auto& [r, v] : cols[static_cast<std::size_t>(source)]) {
      auto [it, fresh] = t.emplace(r, Integer(0));
      it->second += s * v;
      if (it->second.is_zero()) {
        t.erase(it);
        rows[static_cast<std::size_t>(r)].erase(target);
      } else if (fresh) {
        rows[static_cast<std::size_t>(r)].insert(target);
      }
    }
  }

  void drop_col(Index c) {
    for (const auto& [r, v] : cols[static_cast<std::size_t>(c)]) rows[static_cast<std::size_t>(r)].erase(c);
    cols[static_cast<std::size_t>(c)].clear();
  }

  void drop_row(Index r) {
    for (Index c : rows[static_cast<std::size_t>(r)]) cols[static_cast<std::size_t>(c)].erase(r);
    rows[static_cast<std::size_t>(r)].clear();
  }

  // A unit entry in column c, preferring the sparsest row.
  std::optional<std::pair<Index, Integer>> unit_in(Index c) const {
    std::optional<std::pair<Index, Integer>> best;
    std::size_t best_len = 0;
    for (const auto& [r, v] : cols[static_cast<std::size_t>(c)]) {
      if (!(v == 1) && !(v == -1)) continue;
      std::size_t len = rows[static_cast<std::size_t>(r)].size();
      if (!best || len < best_len) {
        best = std::make_pair(r, v);
        best_len = len;
      }
    }
    return best;
  }
};

}  // namespace

Homology sparse_homology(const SparseMatrix& prev, const SparseMatrix& next, Index degree) {
  const Index n = next.cols();
  if (prev.rows() != n) throw std::invalid_argument("sparse_homology: shapes do not chain");
  if (!next.composes_to_zero(prev)) throw std::invalid_argument("sparse_homology: d d != 0");

  Work a(prev);  // C^{p-1} -> C^p
  Work b(next);  // C^p -> C^{p+1}
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::vector<bool> prev_alive(static_cast<std::size_t>(prev.cols()), true);
  std::vector<bool> next_alive(static_cast<std::size_t>(next.rows()), true);
  // lift[x]: original cochain of the current basis element x.
  // proj[x]: row of the map from original cocycles to current coordinates.
  std::vector<SparseVec> lift(static_cast<std::size_t>(n)), proj(static_cast<std::size_t>(n));
  for (Index x = 0; x < n; ++x) {
    lift[static_cast<std::size_t>(x)][x] = 1;
    proj[static_cast<std::size_t>(x)][x] = 1;
  }

  // Pivots of d^p: x in C^p against y in C^{p+1}.
  for (bool progress = true; progress;) {
    progress = false;
    for (Index x = 0; x < n; ++x) {
      if (!alive[static_cast<std::size_t>(x)]) continue;
      auto pivot = b.unit_in(x);
      if (!pivot) continue;
      const auto [y, u] = *pivot;
      std::vector<Index> others(b.rows[static_cast<std::size_t>(y)].begin(), b.rows[static_cast<std::size_t>(y)].end());
      for (Index other : others) {
        if (other == x) continue;
        Integer s = -(b.cols[static_cast<std::size_t>(other)].at(y) * u);
        b.add_col(other, s, x);
        axpy(lift[static_cast<std::size_t>(other)], s, lift[static_cast<std::size_t>(x)]);
      }
      b.drop_col(x);
      b.drop_row(y);
      a.drop_row(x);
      alive[static_cast<std::size_t>(x)] = false;
      next_alive[static_cast<std::size_t>(y)] = false;
      lift[static_cast<std::size_t>(x)].clear();
      proj[static_cast<std::size_t>(x)].clear();
      progress = true;
    }
  }

  // Pivots of d^{p-1}: w in C^{p-1} against y in C^p.
  for (bool progress = true; progress;) {
    progress = false;
    for (Index w = 0; w < prev.cols(); ++w) {
      if (!prev_alive[static_cast<std::size_t>(w)]) continue;
      auto pivot = a.unit_in(w);
      if (!pivot) continue;
      const auto [y, u] = *pivot;
      std::vector<Index> others(a.rows[static_cast<std::size_t>(y)].begin(), a.rows[static_cast<std::size_t>(y)].end());
      for (Index other : others) {
        if (other == w) continue;
        Integer s = -(a.cols[static_cast<std::size_t>(other)].at(y) * u);
        a.add_col(other, s, w);
      }
      for (const auto& [z, v] : a.cols[static_cast<std::size_t>(w)]) {
        if (z == y) continue;
        axpy(proj[static_cast<std::size_t>(z)], -(u * v), proj[static_cast<std::size_t>(y)]);
      }
      a.drop_col(w);
      a.drop_row(y);
      b.drop_col(y);
      prev_alive[static_cast<std::size_t>(w)] = false;
      alive[static_cast<std::size_t>(y)] = false;
      lift[static_cast<std::size_t>(y)].clear();
      proj[static_cast<std::size_t>(y)].clear();
      progress = true;
    }
  }

  auto positions = [](const std::vector<bool>& mask) {
    std::vector<Index> pos(mask.size(), -1);
    Index k = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i]) pos[i] = k++;
    }
    return std::make_pair(pos, k);
  };
  auto [prev_pos, np] = positions(prev_alive);
  auto [mid_pos, nm] = positions(alive);
  auto [next_pos, nn] = positions(next_alive);

  IntMatrix a_red = IntMatrix::Zero(nm, np);
  for (std::size_t w = 0; w < prev_pos.size(); ++w) {
    if (prev_pos[w] < 0) continue;
    for (const auto& [y, v] : a.cols[w]) a_red(mid_pos[static_cast<std::size_t>(y)], prev_pos[w]) = v;
  }
  IntMatrix b_red = IntMatrix::Zero(nn, nm);
  for (std::size_t x = 0; x < mid_pos.size(); ++x) {
    if (mid_pos[x] < 0) continue;
    for (const auto& [y, v] : b.cols[x]) b_red(next_pos[static_cast<std::size_t>(y)], mid_pos[x]) = v;
  }

  Homology reduced = homology(IntComplex({np, nm, nn}, {a_red, b_red}), 1);

  const Index k = reduced.reps_.cols();
  IntMatrix lift_dense = IntMatrix::Zero(n, nm);
  IntMatrix proj_dense = IntMatrix::Zero(nm, n);
  for (std::size_t x = 0; x < mid_pos.size(); ++x) {
    if (mid_pos[x] < 0) continue;
    for (const auto& [i, v] : lift[x]) lift_dense(i, mid_pos[x]) = v;
    for (const auto& [i, v] : proj[x]) proj_dense(mid_pos[x], i) = v;
  }

  Homology h;
  h.degree_ = degree;
  h.group_ = reduced.group_;
  h.orders_ = reduced.orders_;
  h.next_ = next;
  h.reps_ = k == 0 ? IntMatrix(n, 0) : multiply(lift_dense, reduced.reps_);
  h.to_coords_ = k == 0 ? IntMatrix(0, n) : multiply(reduced.to_coords_, proj_dense);
  return h;
}

}  // namespace toric
