#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace jnt {

using Point = std::uint32_t;

class Permutation;

// Largest supported ground set.
inline constexpr std::size_t kMaxDegree = 4096;

// A subset of {0, ..., v-1} stored as a bitmask. Two inline words cover
// v <= 128 without heap allocation.
class KSubset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  KSubset() = default;

  // Empty subset of a v-point set.
  explicit KSubset(std::size_t v);

  // Throws DomainError on indices >= v, repeated indices or v > kMaxDegree.
  static KSubset from_indices(std::size_t v, std::span<const Point> indices);
  static KSubset from_indices(std::size_t v, std::initializer_list<Point> indices);
  // Every point of {0, ..., v-1}.
  static KSubset full(std::size_t v);
  // The contiguous range [first, last).
  static KSubset range(std::size_t v, Point first, Point last);

  std::size_t v() const { return v_; }
  std::size_t size() const { return k_; }
  bool empty() const { return k_ == 0; }

  bool contains(Point x) const;
  std::vector<Point> indices() const;
  // Smallest member; the subset must be non-empty.
  Point first() const;

  std::size_t intersection_size(const KSubset& other) const;
  bool is_subset_of(const KSubset& other) const;

  KSubset complement() const;
  KSubset intersect(const KSubset& other) const;
  KSubset unite(const KSubset& other) const;
  KSubset with(Point x) const;
  KSubset without(Point x) const;
  // (this \ {out}) u {in}; requires out in this and in not in this.
  KSubset exchange(Point out, Point in) const;

  std::span<const Word> words() const { return {words_.data(), words_.size()}; }

  std::string to_string() const;

  friend bool operator==(const KSubset& a, const KSubset& b) {
    return a.v_ == b.v_ && a.words_ == b.words_;
  }
  // Ascending integer value of the mask (ground set size compared first).
  friend bool operator<(const KSubset& a, const KSubset& b);

  std::size_t hash() const;

 private:
  void set(Point x);
  void reset(Point x);
  void recount();

  std::size_t v_ = 0;
  std::size_t k_ = 0;
  boost::container::small_vector<Word, 2> words_;

  friend KSubset act(const Permutation& p, const KSubset& s);
};

void check_same_ground(const KSubset& a, const KSubset& b);

struct KSubsetHash {
  std::size_t operator()(const KSubset& s) const { return s.hash(); }
};

}  // namespace jnt

template <>
struct std::hash<jnt::KSubset> {
  std::size_t operator()(const jnt::KSubset& s) const { return s.hash(); }
};
