#include <algorithm>

#include "jnt/errors.hpp"
#include "jnt/johnson.hpp"

namespace jnt {

SubsetRanker::SubsetRanker(std::size_t v, std::size_t k) : v_(v), k_(k), table_((v + 1) * (k + 1), 0) {
  for (std::size_t n = 0; n <= v; ++n) {
    for (std::size_t r = 0; r <= k; ++r) table_[n * (k + 1) + r] = binomial(n, r);
  }
}

std::uint64_t SubsetRanker::rank_sorted(const std::vector<Point>& idx) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) r += c(idx[i], i + 1);
  return r;
}

std::uint64_t SubsetRanker::rank(const KSubset& s) const {
  if (s.v() != v_ || s.size() != k_) throw DomainError("subset does not belong to this Johnson graph");
  return rank_sorted(s.indices());
}

void SubsetRanker::unrank(std::uint64_t r, std::vector<Point>& idx) const {
  idx.resize(k_);
  std::size_t n = v_;
  for (std::size_t i = k_; i-- > 0;) {
    // Largest n with C(n, i+1) <= r.
    while (c(n, i + 1) > r) --n;
    idx[i] = static_cast<Point>(n);
    r -= c(n, i + 1);
  }
}

KSubset SubsetRanker::unrank(std::uint64_t r) const {
  std::vector<Point> idx;
  unrank(r, idx);
  return KSubset::from_indices(v_, idx);
}

void neighbour_ranks(const SubsetRanker& ranker, std::uint64_t r, std::vector<std::uint64_t>& out) {
  out.clear();
  std::vector<Point> idx;
  ranker.unrank(r, idx);
  std::vector<bool> in(ranker.v(), false);
  for (Point x : idx) in[x] = true;
  std::vector<Point> tmp(idx.size());
  for (std::size_t pos = 0; pos < idx.size(); ++pos) {
    for (Point w = 0; w < ranker.v(); ++w) {
      if (in[w]) continue;
      // Replace idx[pos] by w and restore ascending order.
      std::size_t t = 0;
      bool placed = false;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i == pos) continue;
        if (!placed && w < idx[i]) {
          tmp[t++] = w;
          placed = true;
        }
        tmp[t++] = idx[i];
      }
      if (!placed) tmp[t++] = w;
      out.push_back(ranker.rank_sorted(tmp));
    }
  }
}

DistancePartition::DistancePartition(const Code& code, std::size_t cap) : ranker_(code.v(), code.k()) {
  const std::uint64_t total = ranker_.count();
  if (total > cap) {
    throw ResourceError("distance partition of J(" + std::to_string(code.v()) + "," + std::to_string(code.k()) +
                        ") needs " + std::to_string(total) + " vertices, cap is " + std::to_string(cap));
  }
  constexpr std::uint8_t kUnset = 0xff;
  layer_.assign(total, kUnset);
  std::vector<std::uint64_t> frontier;
  for (const auto& c : code.codewords()) {
    const auto r = ranker_.rank(c);
    layer_[r] = 0;
    frontier.push_back(r);
  }
  std::vector<std::uint64_t> nb;
  std::uint8_t depth = 0;
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    cells_.push_back(frontier);
    std::vector<std::uint64_t> next;
    for (auto r : frontier) {
      neighbour_ranks(ranker_, r, nb);
      for (auto s : nb) {
        if (layer_[s] == kUnset) {
          layer_[s] = static_cast<std::uint8_t>(depth + 1);
          next.push_back(s);
        }
      }
    }
    ++depth;
    frontier = std::move(next);
  }
}

std::vector<KSubset> DistancePartition::cell(std::size_t i) const {
  std::vector<KSubset> out;
  for (auto r : cells_.at(i)) out.push_back(ranker_.unrank(r));
  return out;
}

std::vector<std::size_t> DistancePartition::cell_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& c : cells_) out.push_back(c.size());
  return out;
}

CompleteRegularity is_completely_regular(const DistancePartition& p) {
  CompleteRegularity res;
  const std::size_t r = p.covering_index();
  res.intersection_numbers.assign(r, std::vector<std::size_t>(r, 0));
  std::vector<std::uint64_t> nb;
  std::vector<std::size_t> counts(r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& cell = p.cell_ranks(i);
    for (std::size_t idx = 0; idx < cell.size(); ++idx) {
      std::fill(counts.begin(), counts.end(), 0);
      neighbour_ranks(p.ranker(), cell[idx], nb);
      for (auto s : nb) ++counts[p.layer_of_rank(s)];
      if (idx == 0) {
        res.intersection_numbers[i] = counts;
        continue;
      }
      for (std::size_t j = 0; j < r; ++j) {
        if (counts[j] != res.intersection_numbers[i][j]) {
          res.regular = false;
          res.cell_i = i;
          res.cell_j = j;
          res.witness = std::make_pair(p.ranker().unrank(cell[0]), p.ranker().unrank(cell[idx]));
          res.counts = {res.intersection_numbers[i][j], counts[j]};
          res.intersection_numbers.clear();
          return res;
        }
      }
    }
  }
  res.regular = true;
  return res;
}

CompleteRegularity is_completely_regular(const Code& code, std::size_t cap) {
  return is_completely_regular(DistancePartition(code, cap));
}

}  // namespace jnt
