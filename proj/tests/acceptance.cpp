// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "jnt/codes.hpp"
#include "jnt/errors.hpp"
#include "oracle.hpp"

using namespace jnt;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

ConstructionSpec spec_of(Family f) {
  ConstructionSpec s;
  s.family = f;
  return s;
}

bool triple_design(const Code& c) {
  std::map<std::vector<Point>, int> seen;
  for (const auto& g : c.codewords()) {
    const auto x = g.indices();
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j)
        for (std::size_t l = j + 1; l < x.size(); ++l) ++seen[{x[i], x[j], x[l]}];
  }
  if (seen.size() != binomial(c.v(), 3)) return false;
  for (const auto& [t, n] : seen) {
    if (n != 1) return false;
  }
  return true;
}

bool has_note(const PropertyReport& r, const std::string& needle) {
  for (const auto& n : r.notes) {
    if (n.find(needle) != std::string::npos) return true;
  }
  return false;
}

void unital(Outcome& o) {
  struct Want {
    std::uint32_t q;
    std::size_t v, k, size, delta;
    double limit;
  };
  for (const Want w : {Want{3, 28, 4, 63, 3, 30}, Want{4, 65, 5, 208, 4, 300}}) {
    const auto t0 = std::chrono::steady_clock::now();
    auto s = spec_of(Family::unital);
    s.q = w.q;
    const auto built = build(s);
    const auto r = check_properties(built.code, built.group);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string tag = "q=" + std::to_string(w.q) + " ";
    o.require(r.v == w.v && r.k == w.k && r.code_size == w.size, tag + "parameters");
    o.require(r.min_distance == w.delta, tag + "minimum distance");
    o.require(r.strongly_incidence_transitive == true, tag + "strongly incidence-transitive");
    o.require(secs < w.limit, tag + "time");
    o.detail << " q=" << w.q << ": v=" << r.v << " k=" << r.k << " |code|=" << r.code_size
             << " delta=" << *r.min_distance << " (" << secs << " s)";
  }
}

void subfield(Outcome& o) {
  const auto built = build(spec_of(Family::subfield_line));
  const auto r = check_properties(built.code, built.group);
  o.require(built.group.order() == 960, "group order");
  o.require(r.k == 4 && r.code_size == 20, "parameters");
  o.require(r.min_distance == 3u, "minimum distance");
  o.require(r.neighbour_transitive == true, "neighbour-transitive");
  o.require(r.strongly_incidence_transitive == true, "strongly incidence-transitive");
  o.detail << " |code|=" << r.code_size << " delta=" << *r.min_distance;
}

void utype_table(Outcome& o) {
  struct Row {
    std::size_t a, b, line, k, c;
  };
  const std::vector<Row> rows{{2, 2, 1, 2, 0}, {3, 2, 2, 4, 0}, {2, 2, 3, 2, 0}, {2, 3, 4, 4, 0},
                              {3, 2, 5, 4, 2}, {3, 2, 6, 3, 0}, {2, 3, 7, 3, 0}};
  for (const auto& row : rows) {
    ConstructionSpec s = spec_of(Family::utype);
    s.a = row.a;
    s.b = row.b;
    s.line = row.line;
    s.k = row.k;
    s.c = row.c;
    const auto built = build(s);
    const auto part = UniformPartition::contiguous(row.a, row.b);
    const auto want = utype_line_neighbour_type(row.a, row.b, row.line, row.k, row.c);
    const std::string tag = "line " + std::to_string(row.line) + " ";
    bool types_ok = true;
    for (const auto& n : neighbour_set(built.code)) types_ok = types_ok && u_type(n, part) == want;
    o.require(types_ok, tag + "neighbour types");
    const auto r = check_properties(built.code, built.group);
    o.require(r.incidence_transitive == true, tag + "incidence-transitive");
    const std::size_t delta = (row.line == 1 && row.k == row.a) ? row.k : 1;
    o.require(r.min_distance == delta, tag + "minimum distance");
    o.detail << " L" << row.line << ":" << want.to_string() << ",d=" << *r.min_distance;
  }
}

void blowups(Outcome& o) {
  std::mt19937 rng(7);
  int count = 0;
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
        for (std::size_t i = 0; i < m; ++i) cw.push_back(ranker.unrank(ranks[i]));
        ConstructionSpec s = spec_of(Family::blowup);
        s.a = a;
        s.inner = Code(b, k0, cw, "random");
        const auto built = build(s);
        o.require(*min_distance(built.code) == a * *min_distance(*s.inner),
                  "instance " + std::to_string(count));
        ++count;
      }
    }
  }
  o.require(count >= 20, "instance count");
  o.detail << " " << count << " instances";
}

void circles(Outcome& o) {
  for (Family f : {Family::ovoid_circles, Family::baer_subline}) {
    auto s = spec_of(f);
    s.q0 = 3;
    const auto built = build(s);
    const auto r = check_properties(built.code, built.group);
    const std::string tag = family_name(f) + " ";
    o.require(r.code_size == 30, tag + "size");
    o.require(triple_design(built.code), tag + "3-(10,4,1) design");
    o.require(r.min_distance == 2u, tag + "minimum distance");
    o.require(r.strongly_incidence_transitive == true, tag + "strongly incidence-transitive");
    if (f == Family::baer_subline) o.require(has_note(r, "nominal value 3"), "distance note");
    o.detail << " " << family_name(f) << ": |code|=" << r.code_size << " delta=" << *r.min_distance
             << " |G|=" << r.group_order;
  }
}

void bases(Outcome& o) {
  const auto built = build(spec_of(Family::unitary_bases));
  CheckOptions opt;
  opt.distance_partition = false;
  const auto r = check_properties(built.code, built.group, opt);
  o.require(r.k == 12 && r.code_size == 63, "parameters");
  o.require(r.min_distance == 6u, "minimum distance");
  o.require(r.stabiliser_order == 192, "stabiliser order");
  o.require(r.strongly_incidence_transitive == true, "strongly incidence-transitive under PSU(3,3).2");
  const auto psu = unitary_group(3, UnitaryLevel::psu);
  const auto rs = check_properties(built.code, psu, opt);
  o.require(rs.strongly_incidence_transitive == false, "pair test fails under PSU(3,3)");
  o.detail << " k=" << r.k << " |code|=" << r.code_size << " delta=" << *r.min_distance
           << " |G_gamma|=" << r.stabiliser_order;
}

void consistency(Outcome& o) {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  const auto specs = catalog_instances();
  for (const auto& spec : specs) {
    const auto built = build(spec);
    const auto res = check_theorem_consistency(built.code, built.group);
    if (res.skipped) {
      ++skipped;
      continue;
    }
    ++checked;
    for (const auto& v : res.violations) o.require(false, built.code.name() + ": " + v);
  }
  o.require(specs.size() >= 15, "catalog size");
  o.detail << " " << checked << " codes checked, " << skipped << " degenerate skipped";
}

void search(Outcome& o) {
  const auto g = wreath_product(3, 3);
  SearchOptions opt;
  opt.max_union = 2;
  const auto nt = classify_search(g, 3, Predicate::neighbour_transitive, opt);
  std::set<std::vector<KSubset>> got;
  for (const auto& c : nt) got.insert(c.codewords());
  std::set<std::vector<KSubset>> want;
  for (std::size_t line : {1u, 3u}) {
    ConstructionSpec s = spec_of(Family::utype);
    s.a = 3;
    s.b = 3;
    s.line = line;
    s.k = 3;
    want.insert(build(s).code.codewords());
  }
  o.require(got == want, "neighbour-transitive unions are the parts and the transversals");
  const auto j93 = build(spec_of(Family::j93)).code;
  bool found = false;
  for (const auto& c : classify_search(g, 3, Predicate::neighbour_set_transitive, opt)) found = found || c == j93;
  o.require(found, "parts plus transversals found as transitive on the neighbour set");

  const auto agl = affine_group(1, 16, true);
  std::vector<std::size_t> hits;
  for (std::size_t k = 2; k <= 14; ++k) {
    for (const auto& c : classify_search(agl, k, Predicate::strongly_incidence_transitive)) {
      hits.push_back(k);
      o.require(c.size() == 20, "orbit size at k=" + std::to_string(k));
    }
  }
  o.require(hits == std::vector<std::size_t>{4, 12}, "strongly incidence-transitive orbits only at k = 4, 12");
  o.detail << " wreath: " << nt.size() << " codes; AGammaL(1,16) hits at k =";
  for (auto k : hits) o.detail << " " << k;
}

void engine(Outcome& o) {
  std::mt19937 rng(99);
  const std::vector<PermGroup> groups{symmetric_group(8), wreath_product(3, 3), affine_group(1, 16, true),
                                      projective_group(2, 9, true), unitary_group(3, UnitaryLevel::pgammau),
                                      affine_group(2, 4, true)};
  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    const auto& g = groups[t % groups.size()];
    const std::size_t v = g.degree();
    const std::size_t k = 1 + rng() % (v - 1);
    std::vector<Point> pts(v);
    for (std::size_t i = 0; i < v; ++i) pts[i] = static_cast<Point>(i);
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(k);
    const auto s = KSubset::from_indices(v, pts);
    if (BigInt(orbit_of_subset(g, s).size()) * setwise_stabilizer(g, s).order() != g.order()) ++bad;
  }
  o.require(bad == 0, "orbit-stabiliser");

  BigInt f = 1;
  for (unsigned n = 1; n <= 10; ++n) {
    f *= n;
    o.require(symmetric_group(n).order() == f, "n! for n=" + std::to_string(n));
  }
  for (unsigned a = 2; a <= 4; ++a) {
    for (unsigned b = 2; b <= 4; ++b) {
      BigInt fa = 1, fb = 1, want = 1;
      for (unsigned i = 2; i <= a; ++i) fa *= i;
      for (unsigned i = 2; i <= b; ++i) fb *= i;
      for (unsigned i = 0; i < b; ++i) want *= fa;
      want *= fb;
      o.require(wreath_product(a, b).order() == want, "wreath order");
    }
  }
  for (std::uint32_t q : {3u, 4u}) {
    const std::uint32_t d = std::gcd(3u, q + 1);
    const BigInt want = BigInt(q) * q * q * (q * q * q + 1) * (q * q - 1) / d;
    o.require(unitary_group(q, UnitaryLevel::psu).order() == want, "PSU(3," + std::to_string(q) + ") order");
  }

  const SubsetRanker r(7, 3);
  std::size_t pairs = 0;
  for (std::uint64_t i = 0; i < r.count(); ++i) {
    for (std::uint64_t j = 0; j < r.count(); ++j) {
      const auto a = r.unrank(i);
      const auto b = r.unrank(j);
      o.require(jdistance(a, b) == oracle::bfs_distance(7, a, b), "distance " + a.to_string() + b.to_string());
      ++pairs;
    }
  }
  o.detail << " 100 orbit-stabiliser cases, " << pairs << " distance pairs";
}

void regularity(Outcome& o) {
  struct Case {
    std::size_t v, k, u;
  };
  for (const Case c : {Case{8, 3, 5}, Case{8, 3, 3}, Case{9, 4, 2}}) {
    ConstructionSpec s = spec_of(Family::intransitive);
    s.v = c.v;
    s.k = c.k;
    s.u = c.u;
    const auto built = build(s);
    const auto r = check_properties(built.code, built.group);
    o.require(r.completely_regular == true, "completely regular");
    o.require(!r.intersection_numbers.empty(), "intersection numbers");
    o.detail << " (" << c.v << "," << c.k << "," << c.u << "):";
    for (const auto& row : r.intersection_numbers) {
      o.detail << "[";
      for (std::size_t i = 0; i < row.size(); ++i) o.detail << (i ? "," : "") << row[i];
      o.detail << "]";
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "unital codes q=3 and q=4", 330, unital},
      {2, "subfield line code in AG(1,16)", 5, subfield},
      {3, "u-type table lines 1-7", 60, utype_table},
      {4, "blow-up distance law", 60, blowups},
      {5, "ovoid circles and Baer sublines", 10, circles},
      {6, "unitary bases code", 120, bases},
      {7, "implication laws on the catalog", 600, consistency},
      {8, "classification searches", 300, search},
      {9, "engine properties", 120, engine},
      {10, "complete regularity of intransitive codes", 120, regularity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < c.limit, "time limit " + std::to_string(static_cast<int>(c.limit)) + " s");
    std::printf("%s %2d %s (%.2f s)%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
