#include <algorithm>

#include "jnt/codes.hpp"
#include "jnt/errors.hpp"
#include "jnt/parallel.hpp"

namespace jnt {

std::string predicate_name(Predicate p) {
  switch (p) {
    case Predicate::code_transitive: return "code_transitive";
    case Predicate::neighbour_set_transitive: return "neighbour_set_transitive";
    case Predicate::neighbour_transitive: return "neighbour_transitive";
    case Predicate::incidence_transitive: return "incidence_transitive";
    case Predicate::strongly_incidence_transitive: return "strongly_incidence_transitive";
    case Predicate::completely_transitive: return "completely_transitive";
    case Predicate::completely_regular: return "completely_regular";
  }
  return "unknown";
}

Predicate parse_predicate(const std::string& name) {
  if (name == "strong" || name == "strongly") return Predicate::strongly_incidence_transitive;
  if (name == "incidence") return Predicate::incidence_transitive;
  if (name == "neighbour" || name == "neighbor" || name == "neighbor_transitive") {
    return Predicate::neighbour_transitive;
  }
  for (int i = 0; i <= static_cast<int>(Predicate::completely_regular); ++i) {
    const auto p = static_cast<Predicate>(i);
    if (predicate_name(p) == name) return p;
  }
  throw DomainError("unknown predicate '" + name + "'");
}

std::vector<std::vector<std::uint64_t>> subset_orbits(const PermGroup& g, std::size_t k, std::size_t cap) {
  const std::size_t v = g.degree();
  if (k > v) throw DomainError("k exceeds the degree");
  const std::uint64_t total = binomial(v, k);
  if (total > cap) {
    throw ResourceError("C(" + std::to_string(v) + "," + std::to_string(k) + ") = " + std::to_string(total) +
                        " exceeds the cap " + std::to_string(cap));
  }
  const SubsetRanker ranker(v, k);
  std::vector<bool> seen(total, false);
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<Point> idx;
  std::vector<Point> image(k);
  for (std::uint64_t r0 = 0; r0 < total; ++r0) {
    if (seen[r0]) continue;
    std::vector<std::uint64_t> orb{r0};
    seen[r0] = true;
    for (std::size_t i = 0; i < orb.size(); ++i) {
      ranker.unrank(orb[i], idx);
      for (const auto& s : g.generators()) {
        for (std::size_t j = 0; j < k; ++j) image[j] = s(idx[j]);
        std::sort(image.begin(), image.end());
        const std::uint64_t r = ranker.rank_sorted(image);
        if (!seen[r]) {
          seen[r] = true;
          orb.push_back(r);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<Code> classify_search(const PermGroup& g, std::size_t k, Predicate p, const SearchOptions& opt) {
  if (opt.max_union < 1 || opt.max_union > 3) throw DomainError("max_union must be 1, 2 or 3");
  const std::size_t v = g.degree();
  const auto orbs = subset_orbits(g, k, opt.cap);
  const std::uint64_t total = binomial(v, k);
  const SubsetRanker ranker(v, k);

  std::vector<std::vector<std::size_t>> tuples;
  const std::size_t n = orbs.size();
  for (std::size_t i = 0; i < n; ++i) {
    tuples.push_back({i});
    if (opt.max_union < 2) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      tuples.push_back({i, j});
      if (opt.max_union < 3) continue;
      for (std::size_t l = j + 1; l < n; ++l) tuples.push_back({i, j, l});
    }
  }

  std::vector<std::optional<Code>> found(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t t) {
    std::size_t size = 0;
    for (std::size_t i : tuples[t]) size += orbs[i].size();
    if (size == total) return;  // not a proper code
    std::vector<KSubset> cw;
    cw.reserve(size);
    for (std::size_t i : tuples[t]) {
      for (std::uint64_t r : orbs[i]) cw.push_back(ranker.unrank(r));
    }
    std::string label;
    for (std::size_t i : tuples[t]) label += (label.empty() ? "" : ",") + std::to_string(i);
    Code code(v, k, std::move(cw), "orbits{" + label + "}", {{"orbits", label}, {"predicate", predicate_name(p)}});
    if (evaluate_predicate(code, g, p, opt.check)) found[t] = std::move(code);
  });

  std::vector<Code> out;
  for (auto& c : found) {
    if (c) out.push_back(std::move(*c));
  }
  return out;
}

}  // namespace jnt
