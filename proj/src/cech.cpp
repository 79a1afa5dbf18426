#include "toric/cech.hpp"

#include "toric/linalg/lattice.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace toric {

namespace {

// Next increasing k-subset of {0..n-1} in lexicographic order.
bool next_tuple(std::vector<std::size_t>& t, std::size_t n) {
  const std::size_t k = t.size();
  for (std::size_t i = k; i-- > 0;) {
    if (t[i] < n - k + i) {
      ++t[i];
      for (std::size_t j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_tuple(std::size_t k) {
  std::vector<std::size_t> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  return t;
}

void check_degree(Index p) {
  if (p < 0) throw std::out_of_range("cohomology: negative degree " + std::to_string(p));
}

}  // namespace

CechComplex::CechComplex(Fan f, Sheaf sheaf) : fan_(std::move(f)), sheaf_(sheaf) {
  const std::size_t n = cover_size();
  constexpr std::size_t cap = std::numeric_limits<std::size_t>::max() / 2;
  binom_.assign(n + 1, std::vector<std::size_t>(n + 2, 0));
  for (std::size_t a = 0; a <= n; ++a) {
    binom_[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b) binom_[a][b] = std::min(cap, binom_[a - 1][b - 1] + binom_[a - 1][b]);
  }
}

std::size_t CechComplex::tuple_count(Index p) const {
  if (p < 0 || static_cast<std::size_t>(p) + 1 > cover_size()) return 0;
  return binom_[cover_size()][static_cast<std::size_t>(p) + 1];
}

std::size_t CechComplex::lex_rank(const std::vector<std::size_t>& t) const {
  const std::size_t n = cover_size();
  const std::size_t k = t.size();
  std::size_t rank = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = start; j < t[i]; ++j) rank += binom_[n - 1 - j][k - 1 - i];
    start = t[i] + 1;
  }
  return rank;
}

std::vector<std::size_t> CechComplex::tuple(Index p, std::size_t k) const {
  if (k >= tuple_count(p)) throw std::out_of_range("CechComplex::tuple: index out of range");
  // Unrank greedily.
  const std::size_t n = cover_size();
  const std::size_t size = static_cast<std::size_t>(p) + 1;
  std::vector<std::size_t> t;
  std::size_t j = 0;
  for (std::size_t i = 0; i < size; ++i) {
    for (;; ++j) {
      std::size_t block = binom_[n - 1 - j][size - 1 - i];
      if (k < block) break;
      k -= block;
    }
    t.push_back(j++);
  }
  return t;
}

const CechComplex::Level& CechComplex::level(Index p) const {
  std::lock_guard lock(mutex_);
  auto it = levels_.find(p);
  if (it != levels_.end()) return *it->second;

  auto lv = std::make_unique<Level>();
  lv->offsets.push_back(0);
  const std::size_t count = tuple_count(p);
  if (count > 0) {
    const IdList& mx = fan_.maximal_ids();
    const Level* parent = p > 0 ? &level(p - 1) : nullptr;
    lv->cones.reserve(count);
    auto t = first_tuple(static_cast<std::size_t>(p) + 1);
    do {
      ConeId c = mx[t.back()];
      if (parent) {
        std::vector<std::size_t> prefix(t.begin(), t.end() - 1);
        c = fan_.meet(parent->cones[lex_rank(prefix)], c);
      }
      lv->cones.push_back(c);
      lv->offsets.push_back(lv->offsets.back() + cone_section_rank(sheaf_, fan_, c));
    } while (next_tuple(t, cover_size()));
  }
  return *levels_.emplace(p, std::move(lv)).first->second;
}

ConeId CechComplex::tuple_cone(Index p, std::size_t k) const {
  if (k >= tuple_count(p)) throw std::out_of_range("CechComplex::tuple_cone: index out of range");
  return level(p).cones[k];
}

Index CechComplex::block_offset(Index p, std::size_t k) const {
  if (k > tuple_count(p)) throw std::out_of_range("CechComplex::block_offset: index out of range");
  if (tuple_count(p) == 0) return 0;
  return level(p).offsets[k];
}

Index CechComplex::term_rank(Index p) const {
  if (tuple_count(p) == 0) return 0;
  return level(p).offsets.back();
}

const IntMatrix& CechComplex::restriction(ConeId sigma, ConeId tau) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(sigma, tau);
  auto it = restrictions_.find(key);
  if (it == restrictions_.end()) it = restrictions_.emplace(key, cone_restriction(sheaf_, fan_, sigma, tau)).first;
  return it->second;
}

SparseMatrix CechComplex::differential(Index p) const {
  SparseMatrix d(term_rank(p + 1), term_rank(p));
  if (tuple_count(p) == 0 || tuple_count(p + 1) == 0) return d;
  const Level& src = level(p);
  const Level& dst = level(p + 1);
  const std::size_t n = cover_size();

  struct Coface {
    std::size_t rank;
    bool negative;
  };
  std::vector<Coface> cofaces;
  auto t = first_tuple(static_cast<std::size_t>(p) + 1);
  std::size_t k = 0;
  do {
    cofaces.clear();
    std::vector<std::size_t> bigger(t.size() + 1);
    for (std::size_t j = 0, pos = 0; j < n; ++j) {
      if (pos < t.size() && t[pos] == j) {
        ++pos;
        continue;
      }
      // j sits at position pos in the enlarged tuple.
      std::copy(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(pos), bigger.begin());
      bigger[pos] = j;
      std::copy(t.begin() + static_cast<std::ptrdiff_t>(pos), t.end(), bigger.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
      cofaces.push_back({lex_rank(bigger), pos % 2 == 1});
    }
    std::sort(cofaces.begin(), cofaces.end(), [](const Coface& a, const Coface& b) { return a.rank < b.rank; });

    const ConeId sigma = src.cones[k];
    const Index col0 = src.offsets[k];
    const Index width = src.offsets[k + 1] - col0;
    for (Index c = 0; c < width; ++c) {
      for (const Coface& cf : cofaces) {
        const IntMatrix& r = restriction(sigma, dst.cones[cf.rank]);
        const Index row0 = dst.offsets[cf.rank];
        for (Index i = 0; i < r.rows(); ++i) {
          if (r(i, c).is_zero()) continue;
          d.add(row0 + i, col0 + c, cf.negative ? Integer(-r(i, c)) : r(i, c));
        }
      }
    }
    ++k;
  } while (next_tuple(t, n));
  return d;
}

CohomologyResult cohomology(const CechComplex& complex, Index p) {
  check_degree(p);
  return CohomologyResult(complex.sheaf(),
                          sparse_homology(complex.differential(p - 1), complex.differential(p), p));
}

CohomologyResult cohomology(const Fan& f, Sheaf sheaf, Index p) { return cohomology(CechComplex(f, sheaf), p); }

namespace {

// Strict chains σ_0 > σ_1 > ... > σ_p, sorted; block rank F(Δ(σ_p)).
struct ChainLevel {
  std::vector<std::vector<ConeId>> chains;
  std::map<std::vector<ConeId>, std::size_t> index;
  std::vector<Index> offsets{0};
};

void extend_chains(const Fan& f, std::vector<ConeId>& cur, std::size_t len, std::vector<std::vector<ConeId>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  const ConeId last = cur.back();
  for (ConeId tau : f.face_ids(last)) {
    if (tau == last) continue;
    cur.push_back(tau);
    extend_chains(f, cur, len, out);
    cur.pop_back();
  }
}

ChainLevel chain_level(const Fan& f, Sheaf sheaf, Index p) {
  ChainLevel lv;
  if (p < 0) return lv;
  for (ConeId sigma = 0; sigma < f.size(); ++sigma) {
    std::vector<ConeId> cur{sigma};
    extend_chains(f, cur, static_cast<std::size_t>(p) + 1, lv.chains);
  }
  std::sort(lv.chains.begin(), lv.chains.end());
  for (std::size_t k = 0; k < lv.chains.size(); ++k) {
    lv.index.emplace(lv.chains[k], k);
    lv.offsets.push_back(lv.offsets.back() + cone_section_rank(sheaf, f, lv.chains[k].back()));
  }
  return lv;
}

// (δs)(c_0..c_{p+1}) = Σ_{i<=p} (-1)^i s(.. ĉ_i ..) + (-1)^{p+1} s(c_0..c_p)|c_{p+1}.
SparseMatrix chain_differential(const Fan& f, Sheaf sheaf, const ChainLevel& src, const ChainLevel& dst) {
  if (src.chains.empty()) return SparseMatrix(dst.offsets.back(), 0);
  std::vector<std::vector<std::pair<Index, Integer>>> cols(static_cast<std::size_t>(src.offsets.back()));
  for (std::size_t k = 0; k < dst.chains.size(); ++k) {
    const auto& c = dst.chains[k];
    const Index row = dst.offsets[k];
    const std::size_t last = c.size() - 1;
    for (std::size_t i = 0; i <= last; ++i) {
      std::vector<ConeId> face = c;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      const std::size_t j = src.index.at(face);
      const Index col = src.offsets[j];
      const Integer sign = i % 2 == 0 ? 1 : -1;
      if (i < last) {
        for (Index t = 0; t < dst.offsets[k + 1] - row; ++t) {
          cols[static_cast<std::size_t>(col + t)].emplace_back(row + t, sign);
        }
      } else {
        IntMatrix r = cone_restriction(sheaf, f, c[last - 1], c[last]);
        for (Index b = 0; b < r.cols(); ++b) {
          for (Index a = 0; a < r.rows(); ++a) {
            if (!r(a, b).is_zero()) cols[static_cast<std::size_t>(col + b)].emplace_back(row + a, sign * r(a, b));
          }
        }
      }
    }
  }
  SparseMatrix d(dst.offsets.back(), src.offsets.back());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::sort(cols[c].begin(), cols[c].end());
    for (const auto& [r, v] : cols[c]) d.add(r, static_cast<Index>(c), v);
  }
  return d;
}

}  // namespace

CohomologyResult derived_cohomology(const Fan& f, Sheaf sheaf, Index p) {
  check_degree(p);
  ChainLevel prev = chain_level(f, sheaf, p - 1);
  ChainLevel cur = chain_level(f, sheaf, p);
  ChainLevel next = chain_level(f, sheaf, p + 1);
  return CohomologyResult(sheaf, sparse_homology(chain_differential(f, sheaf, prev, cur),
                                                 chain_differential(f, sheaf, cur, next), p));
}

namespace {

// Dense Čech data on a cover, levels p-1, p, p+1.
struct CoverLevel {
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<Subfan> sets;
  std::vector<Index> offsets{0};
};

CoverLevel cover_level(const std::vector<Subfan>& cover, Sheaf sheaf, Index p) {
  CoverLevel lv;
  if (p < 0 || static_cast<std::size_t>(p) + 1 > cover.size()) return lv;
  auto t = first_tuple(static_cast<std::size_t>(p) + 1);
  do {
    Subfan v = cover[t[0]];
    for (std::size_t i = 1; i < t.size(); ++i) v = v & cover[t[i]];
    lv.offsets.push_back(lv.offsets.back() + section_rank(sheaf, v));
    lv.tuples.push_back(t);
    lv.sets.push_back(std::move(v));
  } while (next_tuple(t, cover.size()));
  return lv;
}

IntMatrix cover_differential(const CoverLevel& src, const CoverLevel& dst, Sheaf sheaf) {
  IntMatrix d = IntMatrix::Zero(dst.offsets.back(), src.offsets.back());
  if (src.tuples.empty()) return d;
  for (std::size_t b = 0; b < dst.tuples.size(); ++b) {
    const auto& big = dst.tuples[b];
    for (std::size_t pos = 0; pos < big.size(); ++pos) {
      std::vector<std::size_t> small = big;
      small.erase(small.begin() + static_cast<std::ptrdiff_t>(pos));
      auto it = std::find(src.tuples.begin(), src.tuples.end(), small);
      const std::size_t a = static_cast<std::size_t>(it - src.tuples.begin());
      IntMatrix r = restriction_matrix(sheaf, src.sets[a], dst.sets[b]);
      if (pos % 2 == 1) r = -r;
      d.block(dst.offsets[b], src.offsets[a], r.rows(), r.cols()) = r;
    }
  }
  return d;
}

void check_cover(const Fan& f, const std::vector<Subfan>& cover) {
  std::vector<bool> seen(f.size(), false);
  for (const Subfan& s : cover) {
    if (!(s.fan() == f)) throw NotACover();
    for (ConeId id : s.ids()) seen[id] = true;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) throw NotACover();
}

}  // namespace

CohomologyResult cover_cohomology(const Fan& f, const std::vector<Subfan>& cover, Sheaf sheaf, Index p) {
  check_degree(p);
  check_cover(f, cover);
  CoverLevel prev = cover_level(cover, sheaf, p - 1);
  CoverLevel mid = cover_level(cover, sheaf, p);
  CoverLevel next = cover_level(cover, sheaf, p + 1);
  return CohomologyResult(sheaf, sparse_homology(SparseMatrix::from_dense(cover_differential(prev, mid, sheaf)),
                                                 SparseMatrix::from_dense(cover_differential(mid, next, sheaf)), p));
}

FinAbGroup cohomology_on_cover(const Fan& f, const std::vector<Subfan>& cover, Sheaf sheaf, Index p) {
  return cover_cohomology(f, cover, sheaf, p).group();
}

bool RefinementMap::is_isomorphism() const { return toric::is_isomorphism(source, target, matrix); }

RefinementMap refinement_map(const Fan& f, const std::vector<Subfan>& cover, Sheaf sheaf, Index p) {
  CohomologyResult coarse = cover_cohomology(f, cover, sheaf, p);
  CechComplex finest(f, sheaf);
  CohomologyResult fine = cohomology(finest, p);

  const IdList& mx = f.maximal_ids();
  std::vector<std::size_t> lambda;
  for (ConeId id : mx) {
    std::size_t c = 0;
    while (!cover[c].contains(id)) ++c;
    lambda.push_back(c);
  }

  // Pull back along λ: C^p(cover) -> C^p(finest).
  CoverLevel coarse_level = cover_level(cover, sheaf, p);
  IntMatrix pull = IntMatrix::Zero(finest.term_rank(p), coarse_level.offsets.back());
  for (std::size_t k = 0; k < finest.tuple_count(p); ++k) {
    auto t = finest.tuple(p, k);
    std::vector<std::size_t> image;
    for (std::size_t i : t) image.push_back(lambda[i]);
    // Sign of the sorting permutation; zero on repeats.
    int sign = 1;
    for (std::size_t i = 0; i < image.size(); ++i) {
      for (std::size_t j = i + 1; j < image.size(); ++j) {
        if (image[i] == image[j]) sign = 0;
        if (image[i] > image[j]) sign = -sign;
      }
    }
    if (sign == 0) continue;
    std::sort(image.begin(), image.end());
    auto it = std::find(coarse_level.tuples.begin(), coarse_level.tuples.end(), image);
    const std::size_t a = static_cast<std::size_t>(it - coarse_level.tuples.begin());
    IntMatrix r = restriction_matrix(sheaf, coarse_level.sets[a], minimal_open(f, finest.tuple_cone(p, k)));
    if (sign < 0) r = -r;
    pull.block(finest.block_offset(p, k), coarse_level.offsets[a], r.rows(), r.cols()) = r;
  }

  RefinementMap out{coarse.group(), fine.group(), IntMatrix(fine.group().generator_count(), coarse.group().generator_count())};
  for (Index j = 0; j < out.matrix.cols(); ++j) {
    out.matrix.col(j) = fine.reduce(multiply(pull, IntVector(coarse.representatives().col(j))));
  }
  return out;
}

}  // namespace toric
