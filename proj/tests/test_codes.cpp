#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "jnt/codes.hpp"
#include "jnt/errors.hpp"

using namespace jnt;

namespace {

ConstructionSpec intransitive(std::size_t v, std::size_t u, std::size_t k) {
  ConstructionSpec s;
  s.family = Family::intransitive;
  s.v = v;
  s.u = u;
  s.k = k;
  return s;
}

ConstructionSpec utype(std::size_t a, std::size_t b, std::size_t line, std::size_t k, std::size_t c = 0) {
  ConstructionSpec s;
  s.family = Family::utype;
  s.a = a;
  s.b = b;
  s.line = line;
  s.k = k;
  s.c = c;
  return s;
}

ConstructionSpec simple(Family f, std::uint32_t q = 0) {
  ConstructionSpec s;
  s.family = f;
  s.q = q;
  s.q0 = q;
  return s;
}

ConstructionSpec subspace(Family f, std::size_t n, std::uint32_t q, std::size_t sdim) {
  ConstructionSpec s;
  s.family = f;
  s.n = n;
  s.q = q;
  s.s = sdim;
  return s;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("intransitive constructions") {
  const auto a = build(intransitive(8, 5, 3));
  CHECK(a.code.size() == 10);
  CHECK(a.group.order() == 720);
  const auto b = build(intransitive(8, 3, 3));
  CHECK(b.code.size() == 1);
  const auto c = build(intransitive(9, 2, 4));
  CHECK(c.code.size() == 21);
  auto bad = intransitive(8, 5, 3);
  bad.variant = 'c';
  CHECK_THROWS_AS(build(bad), DomainError);
  CHECK_THROWS_AS(build(intransitive(8, 5, 7)), DomainError);

  for (const auto& x : {a, b, c}) {
    const auto r = check_properties(x.code, x.group);
    CHECK(r.neighbour_transitive == true);
    CHECK(r.incidence_transitive == true);
    CHECK(r.completely_regular == true);
    CHECK_FALSE(r.transitive_on_points);
    // Strongly incidence-transitive exactly when |U| = k.
    CHECK(*r.strongly_incidence_transitive == (x.code.size() == 1));
  }
}

TEST_CASE("intransitive neighbour-transitivity criteria for subgroups") {
  // |U| = 5 > k = 3 on 8 points: neighbour-transitive iff incidence-transitive iff
  // G is transitive on 3-subsets of U and on (2-subset of U) x (point outside U).
  const auto built = build(intransitive(8, 5, 3));
  const Permutation c5 = Permutation::parse_cycles(8, "(0 1 2 3 4)");
  const Permutation m2 = Permutation::parse_cycles(8, "(1 2 4 3)");  // x -> 2x mod 5
  const Permutation t5 = Permutation::parse_cycles(8, "(0 1)");
  const Permutation c3 = Permutation::parse_cycles(8, "(5 6 7)");
  const Permutation t3 = Permutation::parse_cycles(8, "(5 6)");
  const Permutation a5 = Permutation::parse_cycles(8, "(0 1 2)");
  const std::vector<std::pair<const char*, PermGroup>> groups{
      {"Stab(U)", built.group},
      {"Sym(U) x 1", PermGroup(8, {c5, t5})},
      {"AGL(1,5) x Sym(3)", PermGroup(8, {c5, m2, c3, t3})},
      {"C5 x Sym(3)", PermGroup(8, {c5, c3, t3})},
      {"Alt(U) x C3", PermGroup(8, {c5, a5, c3})},
      {"Sym(U) x C3 diagonal", PermGroup(8, {c5 * c3, t5})},
  };
  for (const auto& [label, g] : groups) {
    const std::string name = label;
    CAPTURE(name);
    const bool homogeneous = orbit_of_subset(g, KSubset::from_indices(8, {0, 1, 2})).size() == 10;
    const bool mixed = orbit_of_subset(g, KSubset::from_indices(8, {0, 1, 5})).size() == 30;
    const auto r = check_properties(built.code, g);
    CHECK(*r.neighbour_transitive == (homogeneous && mixed));
    // Incidence-transitivity also needs the codeword stabiliser to be transitive on the
    // codeword itself; AGL(1,5) x Sym(3) is neighbour-transitive without it.
    const auto gamma = KSubset::from_indices(8, {0, 1, 2});
    const bool flags = orbit(setwise_stabilizer(g, gamma), 0).size() == 3;
    CHECK(*r.incidence_transitive == (homogeneous && mixed && flags));
    CHECK_FALSE(*r.strongly_incidence_transitive);
  }
  CHECK_FALSE(*check_properties(built.code, groups[2].second).incidence_transitive);
  CHECK_FALSE(*check_properties(built.code, groups[1].second).neighbour_transitive);
  CHECK(*check_properties(built.code, groups[2].second).neighbour_transitive);
}

TEST_CASE("u-type table at minimal parameters") {
  // Code size, neighbour-set type and minimum distance frozen from
  // tests/oracles/utype_oracle.py.
  struct Row {
    std::size_t a, b, line, k, c, size;
    const char* neighbour_type;
    std::size_t delta;
  };
  const std::vector<Row> rows{
      {2, 2, 1, 2, 0, 2, "{1^2}", 2},  {3, 2, 1, 2, 0, 6, "{1^2}", 1},  {3, 2, 2, 4, 0, 6, "{2^2}", 1},
      {2, 2, 3, 2, 0, 4, "{2}", 1},    {2, 3, 4, 4, 0, 12, "{2^2}", 1}, {3, 2, 5, 4, 2, 9, "{1,3}", 1},
      {3, 3, 5, 6, 2, 27, "{1,2,3}", 1}, {3, 2, 6, 3, 0, 18, "{3}", 1}, {2, 3, 7, 3, 0, 12, "{1^3}", 1},
  };
  for (const auto& row : rows) {
    CAPTURE(row.a);
    CAPTURE(row.b);
    CAPTURE(row.line);
    const auto built = build(utype(row.a, row.b, row.line, row.k, row.c));
    const Code& code = built.code;
    CHECK(code.size() == row.size);
    const auto part = UniformPartition::contiguous(row.a, row.b);
    const auto expected = utype_line_neighbour_type(row.a, row.b, row.line, code.k(), row.c);
    CHECK(expected.to_string() == row.neighbour_type);
    for (const auto& n : neighbour_set(code)) CHECK(u_type(n, part) == expected);
    const auto own = utype_line_type(row.a, row.b, row.line, code.k(), row.c);
    for (const auto& g : code.codewords()) CHECK(u_type(g, part) == own);
    const auto d = min_distance(code);
    REQUIRE(d.has_value());
    CHECK(*d == row.delta);
    CHECK(*d == ((row.line == 1 && code.k() == row.a) ? code.k() : 1u));
    const auto r = check_properties(code, built.group);
    CHECK(r.incidence_transitive == true);
  }
}

TEST_CASE("u-type line conditions") {
  CHECK_THROWS_AS(utype_line_type(3, 2, 1, 4, 0), DomainError);   // k > a
  CHECK_THROWS_AS(utype_line_type(3, 2, 2, 3, 0), DomainError);   // k = v - a
  CHECK_THROWS_AS(utype_line_type(2, 3, 4, 3, 0), DomainError);   // k = v - b
  CHECK_THROWS_AS(utype_line_type(3, 3, 6, 3, 0), DomainError);   // b != 2
  CHECK_THROWS_AS(utype_line_type(2, 3, 7, 4, 0), DomainError);   // k even
  CHECK_THROWS_AS(utype_line_type(2, 3, 5, 6, 2), DomainError);   // c > a - 1
  CHECK_THROWS_AS(utype_line_type(3, 3, 8, 3, 0), DomainError);
}

TEST_CASE("u-type neighbour sets over a wider parameter range") {
  for (std::size_t a = 2; a <= 4; ++a) {
    for (std::size_t b = 2; b <= 4 && a * b <= 12; ++b) {
      for (std::size_t line = 1; line <= 7; ++line) {
        for (std::size_t k = 2; k + 2 <= a * b; ++k) {
          std::size_t c = 0;
          if (line == 5) {
            if (k % b != 0) continue;
            c = k / b;
          }
          try {
            utype_line_type(a, b, line, k, c);
          } catch (const DomainError&) {
            continue;
          }
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(line);
          CAPTURE(k);
          const auto built = build(utype(a, b, line, k, c));
          const auto part = UniformPartition::contiguous(a, b);
          const auto expected = utype_line_neighbour_type(a, b, line, k, c);
          for (const auto& n : neighbour_set(built.code)) CHECK(u_type(n, part) == expected);
          CHECK(*min_distance(built.code) == ((line == 1 && k == a) ? k : 1u));
        }
      }
    }
  }
}

TEST_CASE("blow-up minimum distance scales by a") {
  std::mt19937 rng(4242);
  int instances = 0;
  for (std::size_t a : {2u, 3u}) {
    for (std::size_t b : {4u, 5u, 6u}) {
      for (int rep = 0; rep < 4; ++rep) {
        const std::size_t k0 = 1 + rng() % (b - 1);
        const SubsetRanker ranker(b, k0);
        std::vector<std::uint64_t> ranks(ranker.count());
        for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = i;
        std::shuffle(ranks.begin(), ranks.end(), rng);
        const std::size_t m = 2 + rng() % (ranks.size() - 1);
        std::vector<KSubset> cw;
        for (std::size_t i = 0; i < m && i < ranks.size(); ++i) cw.push_back(ranker.unrank(ranks[i]));
        ConstructionSpec s;
        s.family = Family::blowup;
        s.a = a;
        s.inner = Code(b, k0, cw, "random");
        const auto built = build(s);
        CHECK(built.code.v() == a * b);
        CHECK(built.code.k() == a * k0);
        CHECK(*min_distance(built.code) == a * *min_distance(*s.inner));
        for (const auto& g : built.group.generators()) {
          for (const auto& c : built.code.codewords()) CHECK(built.code.contains(act(g, c)));
        }
        ++instances;
      }
    }
  }
  CHECK(instances >= 20);
  ConstructionSpec small;
  small.family = Family::blowup;
  small.a = 2;
  small.inner = Code(3, 1, {KSubset::from_indices(3, {0})});
  CHECK_THROWS_AS(build(small), DomainError);
}

TEST_CASE("automorphisms of small codes") {
  const Code square(4, 2,
                    {KSubset::from_indices(4, {0, 1}), KSubset::from_indices(4, {1, 2}),
                     KSubset::from_indices(4, {2, 3}), KSubset::from_indices(4, {0, 3})});
  CHECK(small_automorphism_group(square).order() == 8);
  CHECK_THROWS_AS(small_automorphism_group(Code(9, 2, {KSubset::from_indices(9, {0, 1})})), DomainError);
}

TEST_CASE("subspace codes have the tabulated minimum distance") {
  for (auto [n, q, s] : std::vector<std::tuple<std::size_t, std::uint32_t, std::size_t>>{
           {3, 2, 2}, {3, 3, 2}, {2, 4, 1}, {3, 2, 1}}) {
    CAPTURE(n);
    CAPTURE(q);
    CAPTURE(s);
    const auto aff = build(subspace(Family::affine_subspace, n, q, s));
    CHECK(aff.code.k() == ipow(q, s));
    CHECK(*min_distance(aff.code) == ipow(q, s) - ipow(q, s - 1));
  }
  for (auto [n, q, s] : std::vector<std::tuple<std::size_t, std::uint32_t, std::size_t>>{
           {3, 2, 2}, {3, 3, 2}, {3, 4, 2}, {4, 2, 2}, {4, 2, 3}, {4, 3, 2}}) {
    CAPTURE(n);
    CAPTURE(q);
    CAPTURE(s);
    const auto proj = build(subspace(Family::projective_subspace, n, q, s));
    CHECK(*min_distance(proj.code) == ipow(q, s - 1));
    const auto r = check_properties(proj.code, proj.group);
    CHECK(r.strongly_incidence_transitive == true);
    CHECK(r.two_transitive_on_points);
  }
}

TEST_CASE("line class windows") {
  const auto h = build(simple(Family::hyperoval_ag24));
  const std::size_t k = h.code.k();
  CHECK(k == 6);
  // (4^n + 2)/3 <= k <= 2(4^n - 1)/3 with n = 2.
  CHECK(3 * k >= 18);
  CHECK(3 * k <= 30);
  const auto space = GeometrySpace::affine(2, 4);
  for (const auto& g : h.code.codewords()) {
    for (std::size_t m : line_class(space, g)) CHECK((m == 0 || m == 2 || m == 4));
  }
  CHECK(h.code.size() == 48);
  const auto r = check_properties(h.code, h.group);
  CHECK(r.strongly_incidence_transitive == true);
  CHECK(r.min_distance == 3u);

  // Baer sublines of PG(1,9): (v-1)/q0 + 1 <= k <= (v-1)/q0 + (v-1)/q.
  const auto b = build(simple(Family::baer_subline, 3));
  const std::size_t v = b.code.v();
  CHECK(b.code.k() >= (v - 1) / 3 + 1);
  CHECK(b.code.k() <= (v - 1) / 3 + (v - 1) / 9);
}

TEST_CASE("named examples") {
  SUBCASE("unital") {
    const auto u = build(simple(Family::unital, 3));
    const auto r = check_properties(u.code, u.group);
    CHECK(r.code_size == 63);
    CHECK(r.min_distance == 3u);
    CHECK(r.strongly_incidence_transitive == true);
    CHECK(r.primitive_on_points);
    CHECK(r.two_transitive_on_points);
    for (Point x = 0; x < 28; ++x) CHECK(delta_block(x, u.code) == KSubset::from_indices(28, {x}));
  }
  SUBCASE("subfield line") {
    const auto s = build(simple(Family::subfield_line));
    const auto r = check_properties(s.code, s.group);
    CHECK(r.code_size == 20);
    CHECK(r.min_distance == 3u);
    CHECK(r.neighbour_transitive == true);
    CHECK(r.strongly_incidence_transitive == true);
    CHECK(s.group.order() / r.stabiliser_order == 20);
  }
  SUBCASE("j93") {
    const auto j = build(simple(Family::j93));
    const auto r = check_properties(j.code, j.group);
    CHECK(r.code_size == 30);
    CHECK(r.neighbour_set_transitive == true);
    CHECK(r.code_transitive == false);
    CHECK(r.neighbour_transitive == false);
    REQUIRE_FALSE(r.witnesses.empty());
    CHECK(r.witnesses.front().flag == "code_transitive");
    CHECK(r.witnesses.front().subsets.size() == 2);
  }
  SUBCASE("psl2 orbit") {
    const auto p = build(simple(Family::psl2_orbit, 9));
    const auto r = check_properties(p.code, p.group);
    CHECK(r.code_size == 60);
    CHECK(r.neighbour_transitive == true);
    CHECK(r.incidence_transitive == false);
    CHECK(r.min_distance == 1u);
    CHECK_THROWS_AS(build(simple(Family::psl2_orbit, 7)), DomainError);
    CHECK_THROWS_AS(build(simple(Family::psl2_orbit, 5)), DomainError);
  }
  SUBCASE("ovoid circles") {
    const auto o = build(simple(Family::ovoid_circles));
    const auto r = check_properties(o.code, o.group);
    CHECK(o.group.order() == 720);
    CHECK(r.stabiliser_order == 24);
    CHECK(r.code_size == 30);
    CHECK(r.min_distance == 2u);
    CHECK(r.strongly_incidence_transitive == true);
    std::map<std::vector<Point>, int> triples;
    for (const auto& c : o.code.codewords()) {
      const auto x = c.indices();
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          for (int l = j + 1; l < 4; ++l) ++triples[{x[i], x[j], x[l]}];
    }
    CHECK(triples.size() == 120);
    for (const auto& [t, count] : triples) CHECK(count == 1);
  }
  SUBCASE("baer sublines note the distance") {
    const auto b = build(simple(Family::baer_subline, 3));
    const auto r = check_properties(b.code, b.group);
    CHECK(r.min_distance == 2u);
    bool noted = false;
    for (const auto& n : r.notes) noted = noted || n.find("nominal") != std::string::npos;
    CHECK(noted);
    const auto b2 = build(simple(Family::baer_subline, 2));
    CHECK(b2.code.degenerate());
    CHECK(check_theorem_consistency(b2.code, b2.group).skipped);
  }
}

TEST_CASE("unitary bases") {
  const auto u = build(simple(Family::unitary_bases));
  CHECK(u.code.v() == 28);
  CHECK(u.code.k() == 12);
  CHECK(u.code.size() == 63);
  CHECK(min_distance(u.code) == 6u);
  CHECK(setwise_stabilizer(u.group, u.code[0]).order() == 192);
  CheckOptions opt;
  opt.distance_partition = false;
  const auto r = check_properties(u.code, u.group, opt);
  CHECK(r.strongly_incidence_transitive == true);
  const auto psu = unitary_group(3, UnitaryLevel::psu);
  const auto rs = check_properties(u.code, psu, opt);
  CHECK(rs.strongly_incidence_transitive == false);
}

TEST_CASE("delta blocks") {
  const auto parts = build(utype(3, 3, 1, 3));
  CHECK(delta_block(4, parts.code) == KSubset::from_indices(9, {3, 4, 5}));
  const auto c = build(intransitive(9, 2, 4));
  CHECK(delta_block(6, c.code) == KSubset::from_indices(9, {0, 1, 6}));
  const auto a = build(intransitive(8, 5, 3));
  CHECK_THROWS_AS(delta_block(6, a.code), DomainError);
}

TEST_CASE("the two incidence routes agree") {
  std::vector<Construction> cases;
  for (const auto& spec : catalog_instances()) {
    if (spec.family == Family::unitary_bases || spec.family == Family::unital) continue;
    cases.push_back(build(spec));
  }
  cases.push_back(build(simple(Family::unital, 3)));
  // Proper subgroups give mixed outcomes.
  const auto base = build(intransitive(8, 5, 3));
  cases.push_back({base.code, PermGroup(8, {Permutation::parse_cycles(8, "(0 1 2 3 4)"),
                                            Permutation::parse_cycles(8, "(5 6 7)")}), "", {}});
  int positives = 0;
  int negatives = 0;
  for (const auto& c : cases) {
    CAPTURE(c.code.name());
    const bool explicit_route = incidence_transitive_explicit(c.code, c.group);
    const bool stabiliser_route = incidence_transitive_via_stabiliser(c.code, c.group);
    CHECK(explicit_route == stabiliser_route);
    (explicit_route ? positives : negatives)++;
  }
  CHECK(positives > 5);
  CHECK(negatives > 1);
}

TEST_CASE("non-automorphism groups are rejected") {
  const auto u = build(simple(Family::unital, 3));
  CHECK_THROWS_AS(check_properties(u.code, symmetric_group(28)), NotAutomorphismError);
  CHECK_THROWS_AS(check_properties(u.code, symmetric_group(9)), DomainError);
}

TEST_CASE("resource caps leave flags uncomputed") {
  const auto u = build(simple(Family::unital, 3));
  CheckOptions opt;
  opt.orbit_cap = 10;
  opt.partition_cap = 100;
  const auto r = check_properties(u.code, u.group, opt);
  CHECK_FALSE(r.code_transitive.has_value());
  CHECK_FALSE(r.completely_regular.has_value());
  CHECK_FALSE(r.notes.empty());
  CHECK(check_theorem_consistency(u.code, u.group, r).pass());
}

TEST_CASE("implication chain on catalog codes") {
  for (const auto& spec : catalog_instances()) {
    if (spec.family == Family::unitary_bases) continue;
    const auto c = build(spec);
    CAPTURE(c.code.name());
    const auto r = check_properties(c.code, c.group);
    auto le = [](std::optional<bool> a, std::optional<bool> b) { return !(a == true && b == false); };
    CHECK(le(r.strongly_incidence_transitive, r.incidence_transitive));
    CHECK(le(r.incidence_transitive, r.neighbour_transitive));
    CHECK(le(r.neighbour_transitive, r.code_transitive));
    CHECK(le(r.completely_transitive, r.neighbour_transitive));
    const auto res = check_theorem_consistency(c.code, c.group, r);
    for (const auto& v : res.violations) FAIL_CHECK(v);
  }
}

TEST_CASE("orbit search") {
  SUBCASE("subfield line is the only strongly incidence-transitive 4-set orbit") {
    const auto found = classify_search(affine_group(1, 16, true), 4, Predicate::strongly_incidence_transitive);
    REQUIRE(found.size() == 1);
    CHECK(found[0].size() == 20);
    CHECK(found[0] == build(simple(Family::subfield_line)).code);
  }
  SUBCASE("unions of wreath orbits") {
    // Frozen from tests/oracles/search_oracle.py: the parts and the transversals.
    const auto g = wreath_product(3, 3);
    SearchOptions opt;
    opt.max_union = 2;
    const auto found = classify_search(g, 3, Predicate::neighbour_transitive, opt);
    REQUIRE(found.size() == 2);
    std::set<std::size_t> sizes{found[0].size(), found[1].size()};
    CHECK(sizes == std::set<std::size_t>{3, 27});
    const auto nst = classify_search(g, 3, Predicate::neighbour_set_transitive, opt);
    bool has_j93 = false;
    for (const auto& c : nst) has_j93 = has_j93 || c == build(simple(Family::j93)).code;
    CHECK(has_j93);
  }
  SUBCASE("3-homogeneous group has no proper orbit code") {
    CHECK(classify_search(symmetric_group(6), 3, Predicate::code_transitive).empty());
  }
  SUBCASE("orbits partition the k-subsets") {
    const auto orbs = subset_orbits(projective_group(2, 9, true), 4, 1000000);
    std::size_t total = 0;
    for (std::size_t i = 0; i < orbs.size(); ++i) {
      total += orbs[i].size();
      if (i > 0) CHECK(orbs[i - 1].front() < orbs[i].front());
    }
    CHECK(total == 210);
    CHECK_THROWS_AS(subset_orbits(symmetric_group(30), 15, 1000), ResourceError);
  }
  CHECK(parse_predicate("strong") == Predicate::strongly_incidence_transitive);
  CHECK_THROWS_AS(parse_predicate("bogus"), DomainError);
}

TEST_CASE("catalog") {
  CHECK(catalog().size() == 13);
  CHECK(catalog_instances().size() >= 15);
  for (const auto& e : catalog()) CHECK(family_name(parse_family(e.family)) == e.family);
  CHECK_THROWS_AS(parse_family("nope"), DomainError);
}
