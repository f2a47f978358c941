#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jnt/geometry.hpp"
#include "jnt/johnson.hpp"
#include "jnt/perm.hpp"

namespace jnt {

enum class Family {
  intransitive,
  utype,
  blowup,
  affine_subspace,
  subfield_line,
  hyperoval_ag24,
  projective_subspace,
  baer_subline,
  unital,
  ovoid_circles,
  psl2_orbit,
  j93,
  unitary_bases,
};

std::string family_name(Family f);
Family parse_family(const std::string& name);

struct ConstructionSpec {
  Family family = Family::unital;
  // intransitive: v points, U = {0..u-1}, codeword size k, optional variant 'a'|'b'|'c'.
  std::size_t v = 0, u = 0, k = 0;
  char variant = 0;
  // utype: a, b, table line 1..7, and k or c as the line requires. blowup: a.
  std::size_t a = 0, b = 0, line = 0, c = 0;
  // affine/projective subspaces: vector dimension n, field order q, subspace dimension s.
  std::size_t n = 0, s = 0;
  std::uint32_t q = 0, q0 = 0;
  // blowup: the inner code on b points and an optional group acting on it.
  std::optional<Code> inner;
  std::optional<PermGroup> inner_group;
};

struct Construction {
  Code code;
  PermGroup group;
  // Group spec string for the CLI when one exists (empty otherwise).
  std::string group_spec;
  std::vector<std::string> notes;
};

Construction build(const ConstructionSpec& spec);

// The U-type of codewords for a table line, validated against the line's conditions.
UType utype_line_type(std::size_t a, std::size_t b, std::size_t line, std::size_t k, std::size_t c);
// The U-type the table lists for the neighbour set.
UType utype_line_neighbour_type(std::size_t a, std::size_t b, std::size_t line, std::size_t k, std::size_t c);

// Automorphisms of a code on at most 8 points, by enumeration of Sym(v).
PermGroup small_automorphism_group(const Code& code);

struct CatalogEntry {
  std::string family;
  std::string parameters;
  std::string description;
  std::string reference;
};
std::vector<CatalogEntry> catalog();

// Specs used for the consistency run over the catalog (desk-scale instances).
std::vector<ConstructionSpec> catalog_instances();

// ---- properties ---------------------------------------------------------

struct Witness {
  std::string flag;
  std::string reason;
  std::vector<KSubset> subsets;
  std::vector<Point> points;
};

struct PropertyReport {
  std::string name;
  std::size_t v = 0, k = 0;
  std::size_t code_size = 0;
  std::size_t neighbour_count = 0;
  std::optional<std::size_t> min_distance;
  bool degenerate = false;
  // No codeword is adjacent to another, so the neighbour set is the union of the J(g).
  bool neighbourhoods_cover_neighbour_set = false;

  // A flag left empty was not computed because a resource cap was hit.
  std::optional<bool> code_transitive;
  std::optional<bool> neighbour_set_transitive;
  std::optional<bool> neighbour_transitive;
  std::optional<bool> incidence_transitive;
  std::optional<bool> strongly_incidence_transitive;
  std::optional<bool> completely_transitive;
  std::optional<bool> completely_regular;
  std::string incidence_method;

  std::optional<std::size_t> covering_index;
  std::vector<std::size_t> cell_sizes;
  std::vector<std::vector<std::size_t>> intersection_numbers;

  BigInt group_order = 1;
  BigInt stabiliser_order = 1;
  bool transitive_on_points = false;
  bool primitive_on_points = false;
  bool two_transitive_on_points = false;

  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
};

struct CheckOptions {
  std::size_t orbit_cap = kDefaultOrbitCap;
  std::size_t partition_cap = kDefaultPartitionCap;
  // Explicit incidence orbit when |code| * k(v-k) is at most this.
  std::size_t explicit_incidence_limit = 1'000'000;
  bool distance_partition = true;
};

// Throws NotAutomorphismError if some generator does not preserve the code.
void require_automorphisms(const Code& code, const PermGroup& g);

PropertyReport check_properties(const Code& code, const PermGroup& g, const CheckOptions& options = {});

// The two incidence-transitivity routes, exposed for cross-checking.
bool incidence_transitive_explicit(const Code& code, const PermGroup& g, std::size_t cap = kDefaultOrbitCap);
bool incidence_transitive_via_stabiliser(const Code& code, const PermGroup& g, std::size_t cap = kDefaultOrbitCap);

// Intersection of the codewords through u. Throws DomainError if u lies in none.
KSubset delta_block(Point u, const Code& code);

struct ConsistencyResult {
  bool skipped = false;  // degenerate code
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

// Checks the implication laws relating the flags, distance and the action on points.
ConsistencyResult check_theorem_consistency(const Code& code, const PermGroup& g, const PropertyReport& report);
ConsistencyResult check_theorem_consistency(const Code& code, const PermGroup& g);

// ---- search -------------------------------------------------------------

enum class Predicate {
  code_transitive,
  neighbour_set_transitive,
  neighbour_transitive,
  incidence_transitive,
  strongly_incidence_transitive,
  completely_transitive,
  completely_regular,
};

std::string predicate_name(Predicate p);
Predicate parse_predicate(const std::string& name);

bool evaluate_predicate(const Code& code, const PermGroup& g, Predicate p, const CheckOptions& options = {});

struct SearchOptions {
  std::size_t max_union = 1;  // 1..3
  std::size_t cap = kDefaultPartitionCap;
  CheckOptions check;
};

// Orbits of g on k-subsets as rank lists, ordered by least rank.
std::vector<std::vector<std::uint64_t>> subset_orbits(const PermGroup& g, std::size_t k, std::size_t cap);

// Proper unions of at most max_union orbits satisfying the predicate, in
// lexicographic order of their orbit-index tuples.
std::vector<Code> classify_search(const PermGroup& g, std::size_t k, Predicate p, const SearchOptions& options = {});

}  // namespace jnt
