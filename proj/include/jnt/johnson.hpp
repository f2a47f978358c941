#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jnt/kset.hpp"

namespace jnt {

inline constexpr std::size_t kDefaultPartitionCap = 1'000'000;

// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

using Params = std::vector<std::pair<std::string, std::string>>;

// A non-empty set of k-subsets of {0, ..., v-1}, sorted by mask value.
class Code {
 public:
  Code(std::size_t v, std::size_t k, std::vector<KSubset> codewords, std::string name = {}, Params params = {});

  std::size_t v() const { return v_; }
  std::size_t k() const { return k_; }
  std::size_t size() const { return codewords_.size(); }
  const std::vector<KSubset>& codewords() const { return codewords_; }
  const KSubset& operator[](std::size_t i) const { return codewords_[i]; }
  const std::string& name() const { return name_; }
  const Params& params() const { return params_; }
  std::optional<std::string> param(const std::string& key) const;

  bool contains(const KSubset& s) const;
  // k outside [2, v-2], or every k-subset is a codeword.
  bool degenerate() const;
  bool is_full() const { return binomial(v_, k_) == codewords_.size(); }

  void set_name(std::string name) { name_ = std::move(name); }
  void set_param(const std::string& key, std::string value);

  bool operator==(const Code& o) const { return v_ == o.v_ && k_ == o.k_ && codewords_ == o.codewords_; }

 private:
  std::size_t v_;
  std::size_t k_;
  std::vector<KSubset> codewords_;
  std::string name_;
  Params params_;
};

// k - |a n b|. Throws DomainError when (v, k) differ.
std::size_t jdistance(const KSubset& a, const KSubset& b);

// All (g \ {u}) u {w}, sorted.
std::vector<KSubset> neighbours_of_vertex(const KSubset& g);

// Non-codewords adjacent to some codeword, sorted.
std::vector<KSubset> neighbour_set(const Code& code);

// Least distance between distinct codewords; nullopt for a single codeword.
std::optional<std::size_t> min_distance(const Code& code);

// Colex ranking of k-subsets of a v-set; rank order equals mask order.
class SubsetRanker {
 public:
  SubsetRanker(std::size_t v, std::size_t k);
  std::size_t v() const { return v_; }
  std::size_t k() const { return k_; }
  std::uint64_t count() const { return binomial(v_, k_); }
  std::uint64_t rank(const KSubset& s) const;
  // Indices must be ascending.
  std::uint64_t rank_sorted(const std::vector<Point>& idx) const;
  void unrank(std::uint64_t r, std::vector<Point>& idx) const;
  KSubset unrank(std::uint64_t r) const;

 private:
  std::uint64_t c(std::size_t n, std::size_t r) const { return r > n ? 0 : table_[n * (k_ + 1) + r]; }

  std::size_t v_;
  std::size_t k_;
  std::vector<std::uint64_t> table_;
};

// Layering of every k-subset by distance to the code.
class DistancePartition {
 public:
  // Throws ResourceError when C(v, k) exceeds cap.
  DistancePartition(const Code& code, std::size_t cap = kDefaultPartitionCap);

  std::size_t covering_index() const { return cells_.size(); }
  const SubsetRanker& ranker() const { return ranker_; }
  // Ranks of the vertices at distance i, ascending.
  const std::vector<std::uint64_t>& cell_ranks(std::size_t i) const { return cells_.at(i); }
  std::vector<KSubset> cell(std::size_t i) const;
  std::vector<std::size_t> cell_sizes() const;
  std::size_t layer_of_rank(std::uint64_t r) const { return layer_[r]; }
  std::size_t layer_of(const KSubset& s) const { return layer_[ranker_.rank(s)]; }

 private:
  SubsetRanker ranker_;
  std::vector<std::uint8_t> layer_;
  std::vector<std::vector<std::uint64_t>> cells_;
};

// Ranks of the Johnson neighbours of the vertex with rank r.
void neighbour_ranks(const SubsetRanker& ranker, std::uint64_t r, std::vector<std::uint64_t>& out);

struct CompleteRegularity {
  bool regular = false;
  // numbers[i][j]: neighbours in cell j of any vertex in cell i (when regular).
  std::vector<std::vector<std::size_t>> intersection_numbers;
  // When not regular: cells i, j and two vertices of cell i with different counts into cell j.
  std::size_t cell_i = 0;
  std::size_t cell_j = 0;
  std::optional<std::pair<KSubset, KSubset>> witness;
  std::pair<std::size_t, std::size_t> counts{0, 0};
};

CompleteRegularity is_completely_regular(const DistancePartition& partition);
CompleteRegularity is_completely_regular(const Code& code, std::size_t cap = kDefaultPartitionCap);

// Partition of {0, ..., v-1} into b parts of common size a.
class UniformPartition {
 public:
  // Throws DomainError unless the parts are disjoint, cover, and share one size > 0.
  UniformPartition(std::size_t v, std::vector<std::vector<Point>> parts);
  // Parts {0..a-1}, {a..2a-1}, ...
  static UniformPartition contiguous(std::size_t a, std::size_t b);

  std::size_t v() const { return v_; }
  std::size_t a() const { return a_; }
  std::size_t b() const { return parts_.size(); }
  const std::vector<KSubset>& parts() const { return parts_; }
  std::size_t part_of(Point x) const { return part_of_.at(x); }

 private:
  std::size_t v_;
  std::size_t a_;
  std::vector<KSubset> parts_;
  std::vector<std::size_t> part_of_;
};

// Multiset of non-zero intersection sizes of a subset with the parts of a partition.
struct UType {
  // m[i-1] = number of parts met in exactly i points, i = 1..a.
  std::vector<std::size_t> m;

  // Builds a type from a list of intersection sizes; zero entries are ignored.
  static UType from_sizes(std::size_t a, const std::vector<long long>& sizes);
  std::size_t parts_met() const;
  std::size_t weight() const;
  // Exponent notation, e.g. "{1^2,3}".
  std::string to_string() const;
  bool operator==(const UType&) const = default;
};

UType u_type(const KSubset& g, const UniformPartition& partition);

Code complement_code(const Code& code);

}  // namespace jnt
