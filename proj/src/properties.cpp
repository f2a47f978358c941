#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "jnt/codes.hpp"
#include "jnt/errors.hpp"

namespace jnt {

namespace {

std::string str(std::size_t x) { return std::to_string(x); }

// First element of items outside the G-orbit of items[0], if any.
std::optional<KSubset> orbit_gap(const PermGroup& g, const std::vector<KSubset>& items, std::size_t cap) {
  if (items.empty()) return std::nullopt;
  const auto orb = orbit_of_subset(g, items.front(), cap);
  if (orb.size() == items.size()) return std::nullopt;
  for (const auto& s : items) {
    if (!orb.contains(s)) return s;
  }
  return std::nullopt;
}

bool transitive_on(const PermGroup& g, const std::vector<KSubset>& items, std::size_t cap) {
  if (items.empty()) return true;
  return orbit_of_subset(g, items.front(), cap).size() == items.size();
}

// Neighbours of g that are not codewords.
std::vector<KSubset> outer_neighbours(const Code& code, const KSubset& g) {
  std::vector<KSubset> out;
  for (auto& n : neighbours_of_vertex(g)) {
    if (!code.contains(n)) out.push_back(std::move(n));
  }
  return out;
}

// A pair (x, y) in a x b outside the G-orbit of the first pair, or nullopt.
std::optional<std::pair<Point, Point>> product_gap(const PermGroup& g, const KSubset& a, const KSubset& b) {
  const std::size_t n = g.degree();
  const auto ai = a.indices();
  const auto bi = b.indices();
  std::vector<bool> seen(n * n, false);
  std::vector<std::pair<Point, Point>> queue{{ai[0], bi[0]}};
  seen[static_cast<std::size_t>(ai[0]) * n + bi[0]] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& s : g.generators()) {
      const Point x = s(queue[i].first);
      const Point y = s(queue[i].second);
      const std::size_t key = static_cast<std::size_t>(x) * n + y;
      if (!seen[key]) {
        seen[key] = true;
        queue.emplace_back(x, y);
      }
    }
  }
  for (Point x : ai) {
    for (Point y : bi) {
      if (!seen[static_cast<std::size_t>(x) * n + y]) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

bool strongly_incidence(const Code& code, const PermGroup& g, bool ct, std::size_t cap,
                        std::optional<std::pair<Point, Point>>* gap = nullptr) {
  if (!ct) return false;
  const KSubset& gamma = code[0];
  const KSubset rest = gamma.complement();
  if (gamma.empty() || rest.empty()) return true;
  const PermGroup stab = setwise_stabilizer(g, gamma, cap);
  if (gap == nullptr) return is_transitive_on_product(stab, gamma, rest);
  *gap = product_gap(stab, gamma, rest);
  return !gap->has_value();
}

std::optional<bool> completely_transitive(const PermGroup& g, const DistancePartition& dp, std::size_t cap,
                                          Witness* witness) {
  for (std::size_t i = 0; i < dp.covering_index(); ++i) {
    const auto cell = dp.cell(i);
    if (auto gap = orbit_gap(g, cell, cap)) {
      if (witness != nullptr) {
        *witness = {"completely_transitive", "cell " + str(i) + " splits into several orbits", {cell.front(), *gap}, {}};
      }
      return false;
    }
  }
  return true;
}

}  // namespace

void require_automorphisms(const Code& code, const PermGroup& g) {
  if (g.degree() != code.v()) {
    throw DomainError("group degree " + str(g.degree()) + " differs from v = " + str(code.v()));
  }
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    const auto& s = g.generators()[i];
    for (const auto& c : code.codewords()) {
      const KSubset image = act(s, c);
      if (!code.contains(image)) {
        throw NotAutomorphismError("generator " + str(i) + " " + s.to_cycle_string() + " maps codeword " +
                                   c.to_string() + " to non-codeword " + image.to_string());
      }
    }
  }
}

KSubset delta_block(Point u, const Code& code) {
  if (u >= code.v()) throw DomainError("point " + str(u) + " out of range");
  std::optional<KSubset> acc;
  for (const auto& c : code.codewords()) {
    if (!c.contains(u)) continue;
    acc = acc ? acc->intersect(c) : c;
  }
  if (!acc) throw DomainError("point " + str(u) + " lies in no codeword");
  return *acc;
}

bool incidence_transitive_explicit(const Code& code, const PermGroup& g, std::size_t cap) {
  require_automorphisms(code, g);
  const auto nbrs = neighbour_set(code);
  if (nbrs.empty()) return true;
  std::unordered_map<KSubset, std::uint32_t, KSubsetHash> nidx;
  for (std::size_t i = 0; i < nbrs.size(); ++i) nidx.emplace(nbrs[i], static_cast<std::uint32_t>(i));
  std::size_t total = 0;
  std::pair<std::uint32_t, std::uint32_t> start{0, 0};
  bool have_start = false;
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (const auto& n : outer_neighbours(code, code[i])) {
      if (!have_start) {
        start = {static_cast<std::uint32_t>(i), nidx.at(n)};
        have_start = true;
      }
      ++total;
    }
  }
  if (total > cap) throw ResourceError("incidence pairs " + str(total) + " exceed the orbit cap " + str(cap));
  auto key = [&](std::uint32_t c, std::uint32_t n) { return static_cast<std::uint64_t>(c) * nbrs.size() + n; };
  std::vector<bool> seen(code.size() * nbrs.size(), false);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{start};
  seen[key(start.first, start.second)] = true;
  const auto& cws = code.codewords();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& s : g.generators()) {
      const KSubset c = act(s, cws[queue[i].first]);
      const KSubset n = act(s, nbrs[queue[i].second]);
      const auto ci = static_cast<std::uint32_t>(std::lower_bound(cws.begin(), cws.end(), c) - cws.begin());
      const std::uint32_t ni = nidx.at(n);
      if (!seen[key(ci, ni)]) {
        seen[key(ci, ni)] = true;
        queue.emplace_back(ci, ni);
      }
    }
  }
  return queue.size() == total;
}

bool incidence_transitive_via_stabiliser(const Code& code, const PermGroup& g, std::size_t cap) {
  require_automorphisms(code, g);
  if (!transitive_on(g, code.codewords(), cap)) return false;
  const auto local = outer_neighbours(code, code[0]);
  if (local.empty()) return true;
  const PermGroup stab = setwise_stabilizer(g, code[0], cap);
  return transitive_on(stab, local, cap);
}

PropertyReport check_properties(const Code& code, const PermGroup& g, const CheckOptions& opt) {
  require_automorphisms(code, g);
  PropertyReport r;
  r.name = code.name();
  r.v = code.v();
  r.k = code.k();
  r.code_size = code.size();
  r.degenerate = code.degenerate();
  r.min_distance = min_distance(code);
  r.neighbourhoods_cover_neighbour_set = !r.min_distance || *r.min_distance >= 2;

  if (const auto nominal = code.param("nominal_min_distance")) {
    const std::string computed = r.min_distance ? str(*r.min_distance) : std::string("none");
    if (computed != *nominal) {
      r.notes.push_back("computed minimum distance " + computed + " differs from the nominal value " + *nominal);
    }
  }

  const auto nbrs = neighbour_set(code);
  r.neighbour_count = nbrs.size();

  // Runs one flag computation; a cap hit leaves the flag empty with a note.
  auto guarded = [&](const std::string& flag, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const ResourceError& e) {
      r.notes.push_back(flag + " not computed: " + e.what());
    }
  };

  guarded("code_transitive", [&] {
    if (auto gap = orbit_gap(g, code.codewords(), opt.orbit_cap)) {
      r.code_transitive = false;
      r.witnesses.push_back(
          {"code_transitive", "codeword outside the orbit of the first codeword", {code[0], *gap}, {}});
    } else {
      r.code_transitive = true;
    }
  });
  guarded("neighbour_set_transitive", [&] {
    if (auto gap = orbit_gap(g, nbrs, opt.orbit_cap)) {
      r.neighbour_set_transitive = false;
      r.witnesses.push_back(
          {"neighbour_set_transitive", "neighbour outside the orbit of the first neighbour", {nbrs.front(), *gap}, {}});
    } else {
      r.neighbour_set_transitive = true;
    }
  });
  if (nbrs.empty()) r.notes.push_back("empty neighbour set: neighbour-set transitivity holds vacuously");
  if (r.code_transitive == false || r.neighbour_set_transitive == false) {
    r.neighbour_transitive = false;
  } else if (r.code_transitive && r.neighbour_set_transitive) {
    r.neighbour_transitive = true;
  }

  // |code| * k(v-k) without overflow.
  const std::size_t per = std::max<std::size_t>(code.k() * (code.v() - code.k()), 1);
  const std::size_t pairs = code.size() > opt.explicit_incidence_limit / per ? SIZE_MAX : code.size() * per;
  r.incidence_method = pairs <= opt.explicit_incidence_limit ? "explicit" : "stabiliser";
  guarded("incidence_transitive", [&] {
    r.incidence_transitive = r.incidence_method == "explicit"
                                 ? incidence_transitive_explicit(code, g, opt.orbit_cap)
                                 : incidence_transitive_via_stabiliser(code, g, opt.orbit_cap);
    if (*r.incidence_transitive) return;
    if (r.code_transitive != true) {
      r.witnesses.push_back({"incidence_transitive", "not code-transitive", {}, {}});
      return;
    }
    const auto local = outer_neighbours(code, code[0]);
    const PermGroup stab = setwise_stabilizer(g, code[0], opt.orbit_cap);
    if (auto gap = orbit_gap(stab, local, opt.orbit_cap)) {
      r.witnesses.push_back({"incidence_transitive",
                             "stabiliser of the first codeword has two orbits on its outer neighbours",
                             {code[0], local.front(), *gap},
                             {}});
    }
  });

  guarded("strongly_incidence_transitive", [&] {
    if (!r.code_transitive) return;
    std::optional<std::pair<Point, Point>> gap;
    r.strongly_incidence_transitive = strongly_incidence(code, g, *r.code_transitive, opt.orbit_cap, &gap);
    if (*r.strongly_incidence_transitive) return;
    if (!*r.code_transitive) {
      r.witnesses.push_back({"strongly_incidence_transitive", "not code-transitive", {}, {}});
    } else if (gap) {
      const auto in = code[0].indices();
      const auto out = code[0].complement().indices();
      r.witnesses.push_back({"strongly_incidence_transitive",
                             "stabiliser of the first codeword does not map the first pair to the second",
                             {code[0]},
                             {in[0], out[0], gap->first, gap->second}});
    }
  });

  if (!opt.distance_partition) {
    r.notes.push_back("distance partition not requested");
  } else if (binomial(code.v(), code.k()) > opt.partition_cap) {
    r.notes.push_back("distance partition not computed: C(v,k) exceeds the partition cap " + str(opt.partition_cap));
  } else {
    const DistancePartition dp(code, opt.partition_cap);
    r.covering_index = dp.covering_index();
    r.cell_sizes = dp.cell_sizes();
    const auto reg = is_completely_regular(dp);
    r.completely_regular = reg.regular;
    if (reg.regular) {
      r.intersection_numbers = reg.intersection_numbers;
    } else if (reg.witness) {
      r.witnesses.push_back({"completely_regular",
                             "cell " + str(reg.cell_i) + " vertices have " + str(reg.counts.first) + " and " +
                                 str(reg.counts.second) + " neighbours in cell " + str(reg.cell_j),
                             {reg.witness->first, reg.witness->second},
                             {}});
    }
    guarded("completely_transitive", [&] {
      Witness w;
      r.completely_transitive = completely_transitive(g, dp, opt.orbit_cap, &w);
      if (!*r.completely_transitive) r.witnesses.push_back(std::move(w));
    });
  }

  r.group_order = g.order();
  guarded("stabiliser_order", [&] { r.stabiliser_order = setwise_stabilizer(g, code[0], opt.orbit_cap).order(); });
  const auto prim = primitivity(g);
  r.transitive_on_points = prim.transitive;
  r.primitive_on_points = prim.primitive;
  r.two_transitive_on_points = prim.primitive && is_2transitive(g);
  if (r.degenerate) r.notes.push_back("degenerate code: k outside [2, v-2] or every k-subset is a codeword");
  return r;
}

ConsistencyResult check_theorem_consistency(const Code& code, const PermGroup& g, const PropertyReport& r) {
  ConsistencyResult out;
  if (code.degenerate()) {
    out.skipped = true;
    return out;
  }
  // a => b, ignoring flags that were not computed.
  auto implies = [&](std::optional<bool> a, std::optional<bool> b, const std::string& what) {
    if (a == true && b == false) out.violations.push_back(what);
  };
  const bool d2 = !r.min_distance || *r.min_distance >= 2;
  const bool d3 = !r.min_distance || *r.min_distance >= 3;
  const auto sit = r.strongly_incidence_transitive;
  const auto it = r.incidence_transitive;

  implies(sit, it, "strongly incidence-transitive but not incidence-transitive");
  implies(sit, d2, "strongly incidence-transitive with minimum distance 1");
  implies(sit, r.neighbourhoods_cover_neighbour_set,
          "strongly incidence-transitive but the neighbour set is not the union of the codeword neighbourhoods");
  if (it && d2) {
    implies(*it, sit, "incidence-transitive with minimum distance at least 2 but not strongly incidence-transitive");
  }
  if (d3) implies(r.neighbour_transitive, sit, "neighbour-transitive with minimum distance at least 3 but not strongly incidence-transitive");
  if (r.primitive_on_points) {
    implies(sit, r.two_transitive_on_points, "strongly incidence-transitive and primitive but not 2-transitive");
  }
  implies(it, r.neighbour_transitive, "incidence-transitive but not neighbour-transitive");
  implies(r.neighbour_transitive, r.code_transitive, "neighbour-transitive but not code-transitive");
  implies(r.completely_transitive, r.neighbour_transitive, "completely transitive but not neighbour-transitive");
  implies(r.completely_transitive, r.completely_regular, "completely transitive but not completely regular");

  if (r.code_transitive == true && r.transitive_on_points) {
    std::set<KSubset> blocks;
    for (Point u = 0; u < code.v(); ++u) blocks.insert(delta_block(u, code));
    std::vector<std::vector<Point>> system;
    for (const auto& b : blocks) system.push_back(b.indices());
    if (!is_block_system(g, system)) {
      out.violations.push_back("intersections of codewords through a point do not form blocks");
    }
    if (r.primitive_on_points &&
        !std::all_of(blocks.begin(), blocks.end(), [](const KSubset& b) { return b.size() == 1; })) {
      out.violations.push_back("primitive group but the codewords through a point share another point");
    }
  }
  return out;
}

ConsistencyResult check_theorem_consistency(const Code& code, const PermGroup& g) {
  return check_theorem_consistency(code, g, check_properties(code, g));
}

bool evaluate_predicate(const Code& code, const PermGroup& g, Predicate p, const CheckOptions& opt) {
  require_automorphisms(code, g);
  const std::size_t cap = opt.orbit_cap;
  switch (p) {
    case Predicate::code_transitive:
      return transitive_on(g, code.codewords(), cap);
    case Predicate::neighbour_set_transitive:
      return transitive_on(g, neighbour_set(code), cap);
    case Predicate::neighbour_transitive:
      return transitive_on(g, code.codewords(), cap) && transitive_on(g, neighbour_set(code), cap);
    case Predicate::incidence_transitive:
      return incidence_transitive_via_stabiliser(code, g, cap);
    case Predicate::strongly_incidence_transitive:
      return strongly_incidence(code, g, transitive_on(g, code.codewords(), cap), cap);
    case Predicate::completely_transitive: {
      const DistancePartition dp(code, opt.partition_cap);
      return *completely_transitive(g, dp, cap, nullptr);
    }
    case Predicate::completely_regular:
      return is_completely_regular(code, opt.partition_cap).regular;
  }
  return false;
}

}  // namespace jnt
