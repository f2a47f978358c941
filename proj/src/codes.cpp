#include "jnt/codes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "jnt/errors.hpp"

namespace jnt {

namespace {

std::string str(std::size_t x) { return std::to_string(x); }

// Every k-subset of pts, as index lists in lexicographic order.
void for_each_combination(const std::vector<Point>& pts, std::size_t k,
                          const std::function<void(const std::vector<Point>&)>& fn) {
  if (k > pts.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Point> chosen(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = pts[idx[i]];
    fn(chosen);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pts.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Point> range_points(Point lo, Point hi) {
  std::vector<Point> out;
  for (Point x = lo; x < hi; ++x) out.push_back(x);
  return out;
}

bool preserves(const Code& code, const Permutation& p) {
  for (const auto& c : code.codewords()) {
    if (!code.contains(act(p, c))) return false;
  }
  return true;
}

Construction orbit_construction(const PermGroup& g, const KSubset& seed, std::string name, Params params,
                                std::string group_spec) {
  const auto orb = orbit_of_subset(g, seed);
  params.emplace_back("group", group_spec);
  Code code(g.degree(), seed.size(), orb.sorted_members(), std::move(name), std::move(params));
  return {std::move(code), g, std::move(group_spec), {}};
}

Construction build_intransitive(const ConstructionSpec& s) {
  const std::size_t v = s.v;
  const std::size_t u = s.u;
  const std::size_t k = s.k;
  if (v < 4 || u == 0 || u >= v) throw DomainError("intransitive: need 0 < |U| < v and v >= 4");
  if (k < 2 || k + 2 > v) throw DomainError("intransitive: need 2 <= k <= v-2");
  const char variant = u > k ? 'a' : (u == k ? 'b' : 'c');
  if (s.variant != 0 && s.variant != variant) {
    throw DomainError(std::string("intransitive: variant ") + s.variant + " does not match |U| and k (expected " +
                      variant + ")");
  }
  const auto inside = range_points(0, static_cast<Point>(u));
  const auto outside = range_points(static_cast<Point>(u), static_cast<Point>(v));
  std::vector<KSubset> cw;
  if (variant == 'a') {
    for_each_combination(inside, k, [&](const std::vector<Point>& c) { cw.push_back(KSubset::from_indices(v, c)); });
  } else if (variant == 'b') {
    cw.push_back(KSubset::from_indices(v, inside));
  } else {
    for_each_combination(outside, k - u, [&](const std::vector<Point>& c) {
      auto all = inside;
      all.insert(all.end(), c.begin(), c.end());
      cw.push_back(KSubset::from_indices(v, all));
    });
  }
  const std::string spec = "stab:0-" + str(u - 1) + "," + str(u) + "-" + str(v - 1);
  Params params{{"family", "intransitive"}, {"v", str(v)}, {"u", str(u)}, {"k", str(k)},
                {"variant", std::string(1, variant)}, {"group", spec}};
  Code code(v, k, std::move(cw), "intransitive(v=" + str(v) + ",u=" + str(u) + ",k=" + str(k) + ")", params);
  return {std::move(code), young_subgroup(v, {inside, outside}), spec, {}};
}

Construction build_utype(const ConstructionSpec& s) {
  const std::size_t a = s.a;
  const std::size_t b = s.b;
  const std::size_t v = a * b;
  std::size_t k = s.k;
  if (s.line == 5) {
    if (s.c == 0 && (b == 0 || k % b != 0)) throw DomainError("utype line 5: give c, or k divisible by b");
    if (s.c == 0) k = k / b;
    const std::size_t c = s.c != 0 ? s.c : k;
    if (s.k != 0 && s.k != c * b) throw DomainError("utype line 5: k must equal c*b");
    k = c * b;
  }
  const std::size_t c = s.line == 5 ? k / b : 0;
  const UType t = utype_line_type(a, b, s.line, k, c);
  const auto part = UniformPartition::contiguous(a, b);

  // Distinct assignments of part sizes, then a subset of each part.
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < t.m.size(); ++i) sizes.insert(sizes.end(), t.m[i], i + 1);
  sizes.resize(b, 0);
  std::sort(sizes.begin(), sizes.end());
  std::vector<KSubset> cw;
  do {
    std::function<void(std::size_t, std::vector<Point>&)> rec = [&](std::size_t p, std::vector<Point>& acc) {
      if (p == b) {
        cw.push_back(KSubset::from_indices(v, acc));
        return;
      }
      const auto pts = range_points(static_cast<Point>(p * a), static_cast<Point>((p + 1) * a));
      for_each_combination(pts, sizes[p], [&](const std::vector<Point>& ch) {
        const std::size_t mark = acc.size();
        acc.insert(acc.end(), ch.begin(), ch.end());
        rec(p + 1, acc);
        acc.resize(mark);
      });
    };
    std::vector<Point> acc;
    rec(0, acc);
  } while (std::next_permutation(sizes.begin(), sizes.end()));

  const std::string spec = "wreath:" + str(a) + "," + str(b);
  Params params{{"family", "utype"}, {"a", str(a)}, {"b", str(b)}, {"line", str(s.line)}, {"k", str(k)}};
  if (s.line == 5) params.emplace_back("c", str(c));
  params.emplace_back("type", t.to_string());
  params.emplace_back("group", spec);
  Code code(v, k, std::move(cw),
            "utype(a=" + str(a) + ",b=" + str(b) + ",line=" + str(s.line) + ",k=" + str(k) + ")", params);
  return {std::move(code), wreath_product(a, b), spec, {}};
}

std::string inline_gens_spec(const PermGroup& g) {
  std::string out = "gens:" + str(g.degree()) + ":";
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    if (i > 0) out += ";";
    out += g.generators()[i].to_cycle_string();
  }
  if (g.generators().empty()) out += "()";
  return out;
}

Construction build_blowup(const ConstructionSpec& s) {
  if (!s.inner) throw DomainError("blowup: an inner code is required");
  const Code& inner = *s.inner;
  const std::size_t a = s.a;
  const std::size_t b = inner.v();
  const std::size_t k0 = inner.k();
  if (a < 2) throw DomainError("blowup: need a >= 2");
  if (b < 4) throw DomainError("blowup: the inner code needs b >= 4 points");
  if (k0 < 1 || k0 + 1 > b) throw DomainError("blowup: need 1 <= k0 <= b-1");
  const PermGroup top = s.inner_group ? *s.inner_group : small_automorphism_group(inner);
  if (top.degree() != b) throw DomainError("blowup: inner group degree differs from the inner code");
  for (const auto& g : top.generators()) {
    if (!preserves(inner, g)) throw DomainError("blowup: inner group does not preserve the inner code");
  }
  const std::size_t v = a * b;
  std::vector<KSubset> cw;
  for (const auto& g0 : inner.codewords()) {
    std::vector<Point> pts;
    for (Point p : g0.indices()) {
      for (std::size_t j = 0; j < a; ++j) pts.push_back(static_cast<Point>(p * a + j));
    }
    cw.push_back(KSubset::from_indices(v, pts));
  }
  PermGroup g = wreath_product(a, b, top);
  const std::string spec = inline_gens_spec(g);
  Params params{{"family", "blowup"}, {"a", str(a)}, {"b", str(b)}, {"k0", str(k0)}, {"inner", inner.name()},
                {"group", spec}};
  Code code(v, a * k0, std::move(cw), "blowup(a=" + str(a) + "," + inner.name() + ")", params);
  return {std::move(code), std::move(g), spec, {}};
}

Construction build_affine_subspace(const ConstructionSpec& s) {
  if (s.s < 1 || s.s >= s.n) throw DomainError("affine_subspace: need 1 <= s < n");
  const auto space = GeometrySpace::affine(s.n, s.q);
  std::vector<Point> pts;
  for (Point x = 0; x < space.size(); ++x) {
    const Vec c = space.point(x);
    if (std::all_of(c.begin() + static_cast<std::ptrdiff_t>(s.s), c.end(), [](Value y) { return y == 0; })) {
      pts.push_back(x);
    }
  }
  const std::string spec = "agammal:" + str(s.n) + "," + str(s.q);
  return orbit_construction(affine_group(s.n, s.q, true), KSubset::from_indices(space.size(), pts),
                            "affine_subspace(n=" + str(s.n) + ",q=" + str(s.q) + ",s=" + str(s.s) + ")",
                            {{"family", "affine_subspace"}, {"n", str(s.n)}, {"q", str(s.q)}, {"s", str(s.s)}}, spec);
}

Construction build_projective_subspace(const ConstructionSpec& s) {
  if (s.s < 1 || s.s >= s.n) throw DomainError("projective_subspace: need 1 <= s < n");
  const auto space = GeometrySpace::projective(s.n, s.q);
  std::vector<Point> pts;
  for (Point x = 0; x < space.size(); ++x) {
    const Vec c = space.point(x);
    if (std::all_of(c.begin() + static_cast<std::ptrdiff_t>(s.s), c.end(), [](Value y) { return y == 0; })) {
      pts.push_back(x);
    }
  }
  const std::string spec = "pgammal:" + str(s.n) + "," + str(s.q);
  return orbit_construction(projective_group(s.n, s.q, true), KSubset::from_indices(space.size(), pts),
                            "projective_subspace(n=" + str(s.n) + ",q=" + str(s.q) + ",s=" + str(s.s) + ")",
                            {{"family", "projective_subspace"}, {"n", str(s.n)}, {"q", str(s.q)}, {"s", str(s.s)}},
                            spec);
}

Construction build_subfield_line() {
  const auto f = GaloisField::of_order(16);
  std::vector<Point> pts;
  for (Value x : f->subfield(2)) pts.push_back(x);  // AG(1,16) indexes points by field value
  return orbit_construction(affine_group(1, 16, true), KSubset::from_indices(16, pts), "subfield_line(q=16)",
                            {{"family", "subfield_line"}, {"q", "16"}}, "agammal:1,16");
}

Construction build_hyperoval() {
  const Hyperoval h = hyperoval_pg24();
  auto c = orbit_construction(affine_group(2, 4, true), h.affine_points, "hyperoval_ag24",
                              {{"family", "hyperoval_ag24"}}, "agammal:2,4");
  c.notes.push_back("hyperoval stabiliser: order " + h.projective_stabiliser_order.str() + " in PGL(3,4), order " +
                    h.affine_stabiliser_order.str() + " in AGammaL(2,4)");
  return c;
}

Construction build_baer(const ConstructionSpec& s) {
  Code code = baer_sublines(s.q0);
  const std::string spec = "pgammal:2," + str(s.q0 * s.q0);
  Construction c{code, projective_group(2, s.q0 * s.q0, true), spec, {}};
  const auto d = min_distance(code);
  if (code.is_full()) c.notes.push_back("orbit covers every k-subset: degenerate, not a proper code");
  if (d && *d != s.q0) {
    c.notes.push_back("computed minimum distance " + str(*d) + " differs from the nominal value q0 = " + str(s.q0) +
                      " (sublines can meet in two points)");
  }
  return c;
}

Construction build_unital(const ConstructionSpec& s) {
  Code code = unital_blocks(s.q);
  return {code, unitary_group(s.q, UnitaryLevel::pgammau), "pgammau:" + str(s.q), {}};
}

Construction build_ovoid() {
  Code base = baer_sublines(3);
  Params params{{"family", "ovoid_circles"}, {"group", "pgl:2,9"}};
  Code code(base.v(), base.k(), base.codewords(), "ovoid_circles", params);
  PermGroup g = projective_group(2, 9, false);
  Construction c{std::move(code), g, "pgl:2,9", {}};
  c.notes.push_back("circles realised as the sublines of PG(1,9); group PGL(2,9) with circle stabiliser of order " +
                    setwise_stabilizer(g, c.code[0]).order().str());
  return c;
}

Construction build_psl2(const ConstructionSpec& s) {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  if (!prime_power(s.q, p, e) || s.q % 4 != 1 || s.q <= 5) {
    throw DomainError("psl2_orbit: need a prime power q = 1 mod 4 with q > 5");
  }
  const std::size_t v = s.q + 1;
  return orbit_construction(projective_special_group(2, s.q), KSubset::from_indices(v, {0, 1, 2}),
                            "psl2_orbit(q=" + str(s.q) + ")", {{"family", "psl2_orbit"}, {"q", str(s.q)}},
                            "psl:2," + str(s.q));
}

Construction build_j93() {
  std::vector<KSubset> cw;
  for (Point i = 0; i < 3; ++i) cw.push_back(KSubset::range(9, 3 * i, 3 * i + 3));
  for (Point x = 0; x < 3; ++x) {
    for (Point y = 3; y < 6; ++y) {
      for (Point z = 6; z < 9; ++z) cw.push_back(KSubset::from_indices(9, {x, y, z}));
    }
  }
  Code code(9, 3, std::move(cw), "j93", {{"family", "j93"}, {"group", "wreath:3,3"}});
  return {std::move(code), wreath_product(3, 3), "wreath:3,3", {}};
}

Construction build_unitary_bases() {
  const PermGroup psu = unitary_group(3, UnitaryLevel::psu);
  const auto elements = psu.elements();
  std::vector<std::size_t> order4;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].order() == 4) order4.push_back(i);
  }
  std::set<std::vector<std::vector<Point>>> tried;
  auto less = [](const Permutation& x, const Permutation& y) {
    return std::lexicographical_compare(x.images().begin(), x.images().end(), y.images().begin(), y.images().end());
  };
  for (std::size_t ia : order4) {
    const Permutation& a = elements[ia];
    const Permutation a2 = a * a;
    for (std::size_t ib : order4) {
      const Permutation& b = elements[ib];
      if (a * b != b * a || b * b == a2) continue;
      std::vector<Permutation> e;
      Permutation ai = Permutation::identity(28);
      for (int i = 0; i < 4; ++i, ai = ai * a) {
        Permutation bj = Permutation::identity(28);
        for (int j = 0; j < 4; ++j, bj = bj * b) e.push_back(ai * bj);
      }
      std::sort(e.begin(), e.end(), less);
      std::vector<std::vector<Point>> key;
      for (const auto& x : e) key.emplace_back(x.images().begin(), x.images().end());
      if (!tried.insert(std::move(key)).second) continue;
      auto in_e = [&](const Permutation& x) { return std::binary_search(e.begin(), e.end(), x, less); };
      std::vector<Permutation> normaliser;
      for (const auto& g : elements) {
        const Permutation gi = g.inverse();
        if (in_e(gi * a * g) && in_e(gi * b * g)) normaliser.push_back(g);
      }
      const PermGroup n(28, normaliser);
      auto orbs = orbits(n);
      std::vector<std::size_t> sizes;
      for (const auto& o : orbs) sizes.push_back(o.size());
      std::sort(sizes.begin(), sizes.end());
      if (sizes != std::vector<std::size_t>{12, 16}) continue;
      const auto& twelve = orbs[0].size() == 12 ? orbs[0] : orbs[1];
      auto c = orbit_construction(unitary_group(3, UnitaryLevel::pgammau), KSubset::from_indices(28, twelve),
                                  "unitary_bases(q=3)", {{"family", "unitary_bases"}, {"q", "3"}}, "pgammau:3");
      c.notes.push_back("E = <a,b> of order 16 with normaliser of order " + str(normaliser.size()) +
                        " in PSU(3,3); codeword = its orbit of length 12");
      return c;
    }
  }
  throw ConstructionError("unitary_bases: no Z4 x Z4 subgroup with normaliser orbits {12,16} found");
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::intransitive: return "intransitive";
    case Family::utype: return "utype";
    case Family::blowup: return "blowup";
    case Family::affine_subspace: return "affine_subspace";
    case Family::subfield_line: return "subfield_line";
    case Family::hyperoval_ag24: return "hyperoval_ag24";
    case Family::projective_subspace: return "projective_subspace";
    case Family::baer_subline: return "baer_subline";
    case Family::unital: return "unital";
    case Family::ovoid_circles: return "ovoid_circles";
    case Family::psl2_orbit: return "psl2_orbit";
    case Family::j93: return "j93";
    case Family::unitary_bases: return "unitary_bases";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(Family::unitary_bases); ++i) {
    const auto f = static_cast<Family>(i);
    if (family_name(f) == name) return f;
  }
  throw DomainError("unknown family '" + name + "'");
}

UType utype_line_type(std::size_t a, std::size_t b, std::size_t line, std::size_t k, std::size_t c) {
  if (a < 2 || b < 2) throw DomainError("utype: need a > 1 and b > 1");
  const auto v = static_cast<long long>(a * b);
  const auto A = static_cast<long long>(a);
  const auto B = static_cast<long long>(b);
  const auto K = static_cast<long long>(k);
  if (line != 5 && (K < 2 || K > v - 2)) throw DomainError("utype: need 2 <= k <= v-2");
  std::vector<long long> sizes;
  auto fail = [&](const std::string& why) { throw DomainError("utype line " + str(line) + ": " + why); };
  switch (line) {
    case 1:
      if (K > A) fail("need k <= a");
      sizes = {K};
      break;
    case 2:
      if (K <= v - A) fail("need k > v-a");
      sizes.assign(b - 1, A);
      sizes.push_back(K - v + A);
      break;
    case 3:
      if (K > B) fail("need k <= b");
      sizes.assign(k, 1);
      break;
    case 4:
      if (K <= v - B) fail("need k > v-b");
      sizes.assign(static_cast<std::size_t>(v - K), A - 1);
      sizes.insert(sizes.end(), static_cast<std::size_t>(B - v + K), A);
      break;
    case 5:
      if (c < 2 || c + 1 > a) fail("need 1 < c <= a-1");
      if (k != c * b) fail("need k = c*b");
      sizes.assign(b, static_cast<long long>(c));
      break;
    case 6:
      if (b != 2 || a < 3 || k % 2 == 0) fail("need b = 2, a >= 3 and k odd");
      sizes = {(K - 1) / 2, (K + 1) / 2};
      break;
    case 7:
      if (a != 2 || b < 3 || k % 2 == 0) fail("need a = 2, b >= 3 and k odd");
      sizes.assign(static_cast<std::size_t>((K - 1) / 2), 2);
      sizes.push_back(1);
      if (sizes.size() > b) fail("too many parts");
      break;
    default:
      throw DomainError("utype: line must be 1..7");
  }
  return UType::from_sizes(a, sizes);
}

UType utype_line_neighbour_type(std::size_t a, std::size_t b, std::size_t line, std::size_t k, std::size_t c) {
  utype_line_type(a, b, line, k, c);
  const auto v = static_cast<long long>(a * b);
  const auto A = static_cast<long long>(a);
  const auto B = static_cast<long long>(b);
  const auto K = static_cast<long long>(k);
  std::vector<long long> sizes;
  switch (line) {
    case 1:
      sizes = {1, K - 1};
      break;
    case 2:
      sizes = {K - v + A + 1, A - 1};
      sizes.insert(sizes.end(), b - 2, A);
      break;
    case 3:
      sizes.assign(k - 2, 1);
      sizes.push_back(2);
      break;
    case 4:
      sizes = {A - 2};
      sizes.insert(sizes.end(), static_cast<std::size_t>(v - K - 2), A - 1);
      sizes.insert(sizes.end(), static_cast<std::size_t>(B - v + K + 1), A);
      break;
    case 5:
      sizes = {static_cast<long long>(c) - 1, static_cast<long long>(c) + 1};
      sizes.insert(sizes.end(), b - 2, static_cast<long long>(c));
      break;
    case 6:
      sizes = {(K - 3) / 2, (K + 3) / 2};
      break;
    case 7:
      sizes.assign(3, 1);
      sizes.insert(sizes.end(), static_cast<std::size_t>((K - 3) / 2), 2);
      break;
  }
  return UType::from_sizes(a, sizes);
}

PermGroup small_automorphism_group(const Code& code) {
  if (code.v() > 8) throw DomainError("automorphism enumeration is limited to 8 points");
  const PermGroup sym = symmetric_group(code.v());
  std::vector<Permutation> gens;
  StabilizerChain chain = schreier_sims(code.v(), gens);
  for (const auto& p : sym.elements()) {
    if (p.is_identity() || chain.contains(p) || !preserves(code, p)) continue;
    gens.push_back(p);
    chain = schreier_sims(code.v(), gens);
  }
  return subgroup_with_chain(code.v(), std::move(gens), std::move(chain));
}

Construction build(const ConstructionSpec& s) {
  switch (s.family) {
    case Family::intransitive: return build_intransitive(s);
    case Family::utype: return build_utype(s);
    case Family::blowup: return build_blowup(s);
    case Family::affine_subspace: return build_affine_subspace(s);
    case Family::subfield_line: return build_subfield_line();
    case Family::hyperoval_ag24: return build_hyperoval();
    case Family::projective_subspace: return build_projective_subspace(s);
    case Family::baer_subline: return build_baer(s);
    case Family::unital: return build_unital(s);
    case Family::ovoid_circles: return build_ovoid();
    case Family::psl2_orbit: return build_psl2(s);
    case Family::j93: return build_j93();
    case Family::unitary_bases: return build_unitary_bases();
  }
  throw DomainError("unknown family");
}

std::vector<CatalogEntry> catalog() {
  return {
      {"intransitive", "v>=4, 0<u<v, 2<=k<=v-2", "all k-subsets of U, the set {U}, or all k-sets containing U; group Stab(U)",
       "strength-zero completely regular codes; intransitive classification"},
      {"utype", "a,b>=2, line 1..7, k (or c for line 5)", "all k-subsets of one U-type for a partition into b parts of size a; group S_a wr S_b",
       "imprimitive codes defined by U-types"},
      {"blowup", "a>=2, inner code on b>=4 points", "unions of the parts indexed by an inner code; group S_a wr Aut(inner)",
       "blow-ups of smaller Johnson codes (groupwise complete designs)"},
      {"affine_subspace", "1<=s<n, q^n<=4096", "affine s-subspaces of AG(n,q); group AGammaL(n,q)",
       "affine subspace codes"},
      {"subfield_line", "q=16", "images of the subfield GF(4) in AG(1,16); group AGammaL(1,16)",
       "one-dimensional affine case, subfield codeword"},
      {"hyperoval_ag24", "none", "images of a 2-transitive hyperoval in AG(2,4); group AGammaL(2,4)",
       "hyperoval in PG(2,4) minus an external line"},
      {"projective_subspace", "1<=s<n", "projective (s-1)-subspaces of PG(n-1,q); group PGammaL(n,q)",
       "projective subspace codes"},
      {"baer_subline", "q0 in {2,3}", "Baer sublines of PG(1,q0^2); group PGammaL(2,q0^2)", "Baer sublines"},
      {"unital", "q in {3,4,5}", "blocks of the classical unital; group PGammaU(3,q)", "Hermitian unital"},
      {"ovoid_circles", "none", "the 30 circles of the elliptic quadric ovoid in PG(3,3); group PGL(2,9)",
       "circles on a 10-point ovoid, a 3-(10,4,1) design"},
      {"psl2_orbit", "q=1 mod 4, q>5", "one PSL(2,q)-orbit on 3-subsets of PG(1,q)",
       "neighbour-transitive but not incidence-transitive"},
      {"j93", "none", "transversals plus parts of a 3x3 partition in J(9,3); group S_3 wr S_3",
       "transitive on the neighbour set but not on the code"},
      {"unitary_bases", "q=3", "orbit of a 12-point orbit of the normaliser of a Z4xZ4 in PSU(3,3); group PGammaU(3,3)",
       "bases code with minimum distance 6"},
  };
}

std::vector<ConstructionSpec> catalog_instances() {
  std::vector<ConstructionSpec> out;
  auto add = [&](ConstructionSpec s) { out.push_back(std::move(s)); };
  ConstructionSpec s;
  s = {};
  s.family = Family::intransitive, s.v = 8, s.u = 5, s.k = 3;
  add(s);
  s = {};
  s.family = Family::intransitive, s.v = 8, s.u = 3, s.k = 3;
  add(s);
  s = {};
  s.family = Family::intransitive, s.v = 9, s.u = 2, s.k = 4;
  add(s);
  const std::size_t lines[][4] = {{3, 3, 1, 3}, {3, 2, 2, 4}, {2, 3, 3, 3}, {2, 3, 4, 4},
                                  {3, 3, 5, 6}, {3, 2, 6, 3}, {2, 3, 7, 3}};
  for (const auto& l : lines) {
    s = {};
    s.family = Family::utype, s.a = l[0], s.b = l[1], s.line = l[2], s.k = l[3];
    if (s.line == 5) s.c = 2;
    add(s);
  }
  s = {};
  s.family = Family::blowup, s.a = 2;
  s.inner = Code(4, 2, {KSubset::from_indices(4, {0, 1}), KSubset::from_indices(4, {2, 3})}, "pairs(4)");
  add(s);
  s = {};
  s.family = Family::blowup, s.a = 3;
  s.inner = Code(5, 2, {KSubset::from_indices(5, {0, 1}), KSubset::from_indices(5, {1, 2}), KSubset::from_indices(5, {2, 3}),
                        KSubset::from_indices(5, {3, 4}), KSubset::from_indices(5, {0, 4})},
                 "pentagon");
  add(s);
  s = {};
  s.family = Family::affine_subspace, s.n = 3, s.q = 2, s.s = 2;
  add(s);
  s = {};
  s.family = Family::affine_subspace, s.n = 2, s.q = 4, s.s = 1;
  add(s);
  s = {};
  s.family = Family::affine_subspace, s.n = 3, s.q = 3, s.s = 2;
  add(s);
  s = {};
  s.family = Family::subfield_line;
  add(s);
  s = {};
  s.family = Family::hyperoval_ag24;
  add(s);
  s = {};
  s.family = Family::projective_subspace, s.n = 3, s.q = 2, s.s = 2;
  add(s);
  s = {};
  s.family = Family::projective_subspace, s.n = 3, s.q = 4, s.s = 2;
  add(s);
  s = {};
  s.family = Family::projective_subspace, s.n = 4, s.q = 2, s.s = 2;
  add(s);
  s = {};
  s.family = Family::baer_subline, s.q0 = 3;
  add(s);
  s = {};
  s.family = Family::unital, s.q = 3;
  add(s);
  s = {};
  s.family = Family::ovoid_circles;
  add(s);
  s = {};
  s.family = Family::psl2_orbit, s.q = 9;
  add(s);
  s = {};
  s.family = Family::psl2_orbit, s.q = 13;
  add(s);
  s = {};
  s.family = Family::j93;
  add(s);
  s = {};
  s.family = Family::unitary_bases;
  add(s);
  return out;
}

}  // namespace jnt
