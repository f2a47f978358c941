#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "jnt/kset.hpp"

namespace jnt {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

class Permutation {
 public:
  Permutation() = default;
  // Validates that images is a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  // Cycles are lists of distinct points; unlisted points are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);
  // Parses "(0 1 2)(3 4)" or "()" for the identity.
  static Permutation parse_cycles(std::size_t degree, const std::string& text);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // Smallest moved point, or degree() for the identity.
  Point first_moved() const;
  std::size_t order() const;

  // Apply this, then rhs.
  Permutation operator*(const Permutation& rhs) const;
  bool operator==(const Permutation& other) const = default;

  std::string to_cycle_string() const;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;

  friend Permutation compose(const Permutation& first, const Permutation& second);
  friend KSubset act(const Permutation& p, const KSubset& s);
};

// compose(h, g) applies h first, so act(g, act(h, x)) == act(compose(h, g), x).
Permutation compose(const Permutation& first, const Permutation& second);

Point act(const Permutation& p, Point x);
KSubset act(const Permutation& p, const KSubset& s);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// Base and strong generating set with explicit transversals.
struct StabilizerChain {
  std::size_t degree = 0;
  std::vector<Point> base;
  // strong[i] generates the stabiliser of base[0..i-1].
  std::vector<std::vector<Permutation>> strong;
  // orbit[i] is the strong[i]-orbit of base[i] in discovery order.
  std::vector<std::vector<Point>> orbit;
  // slot[i][x] indexes orbit[i] / rep[i], or -1 when x is outside the orbit.
  std::vector<std::vector<std::int32_t>> slot;
  // rep[i][j] maps base[i] to orbit[i][j]; rep_inv holds the inverses.
  std::vector<std::vector<Permutation>> rep;
  std::vector<std::vector<Permutation>> rep_inv;

  std::size_t levels() const { return base.size(); }
  BigInt order() const;
  // Returns the residue and the level at which sifting stopped (levels() when complete).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start = 0) const;
  bool contains(const Permutation& g) const;
  // The chain of the stabiliser of base[0..from-1].
  StabilizerChain tail(std::size_t from) const;
};

// Deterministic Schreier-Sims. The base starts with base_prefix and is extended
// greedily by the smallest point moved by an unsifted element.
StabilizerChain schreier_sims(std::size_t degree, const std::vector<Permutation>& generators,
                              std::span<const Point> base_prefix = {});

class PermGroup {
 public:
  // An empty generator list denotes the trivial group.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  // Built on first use; safe to call concurrently.
  const StabilizerChain& chain() const;
  BigInt order() const;
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return generators_.empty(); }

  // All elements in BSGS traversal order; throws ResourceError above cap.
  std::vector<Permutation> elements(std::size_t cap = kDefaultOrbitCap) const;

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> generators, StabilizerChain chain);

  struct Lazy {
    std::once_flag once;
    std::optional<StabilizerChain> chain;
  };

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::shared_ptr<Lazy> lazy_;

  friend PermGroup subgroup_with_chain(std::size_t degree, std::vector<Permutation> gens,
                                       StabilizerChain chain);
};

// Wraps a chain already computed for the given generators.
PermGroup subgroup_with_chain(std::size_t degree, std::vector<Permutation> gens, StabilizerChain chain);

class SubsetOrbit {
 public:
  struct Edge {
    std::int64_t parent;  // -1 for the representative
    std::int32_t generator;
  };

  const KSubset& representative() const { return members_.front(); }
  const std::vector<KSubset>& members() const { return members_; }
  const std::vector<Edge>& schreier() const { return edges_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const KSubset& s) const { return index_.contains(s); }
  // Position of s in members(), or -1.
  std::int64_t index_of(const KSubset& s) const;
  // Group element (a word in the generators) taking the representative to members()[i].
  Permutation transversal(std::size_t i, const std::vector<Permutation>& generators) const;
  // Members in ascending mask order.
  std::vector<KSubset> sorted_members() const;

 private:
  std::vector<KSubset> members_;
  std::vector<Edge> edges_;
  std::unordered_map<KSubset, std::size_t, KSubsetHash> index_;

  friend SubsetOrbit orbit_of_subset(const class PermGroup& g, const KSubset& s, std::size_t cap);
};

// Sorted orbit of a point.
std::vector<Point> orbit(const PermGroup& g, Point x);
// All orbits on points, each sorted, ordered by smallest member.
std::vector<std::vector<Point>> orbits(const PermGroup& g);
SubsetOrbit orbit_of_subset(const PermGroup& g, const KSubset& s, std::size_t cap = kDefaultOrbitCap);
BigInt group_order(const PermGroup& g);
PermGroup point_stabilizer(const PermGroup& g, Point x);
PermGroup setwise_stabilizer(const PermGroup& g, const KSubset& s, std::size_t cap = kDefaultOrbitCap);

// Single orbit on A x B. When A == B the action is on ordered pairs of distinct points.
bool is_transitive_on_product(const PermGroup& g, const KSubset& a, const KSubset& b);

bool is_transitive(const PermGroup& g);

struct PrimitivityResult {
  bool transitive = false;
  bool primitive = false;
  // For a transitive imprimitive group: a non-trivial block system.
  std::vector<std::vector<Point>> blocks;
};
PrimitivityResult primitivity(const PermGroup& g);
bool is_primitive(const PermGroup& g);
bool is_2transitive(const PermGroup& g);

// True when every generator maps every block onto a block.
bool is_block_system(const PermGroup& g, const std::vector<std::vector<Point>>& blocks);

}  // namespace jnt
