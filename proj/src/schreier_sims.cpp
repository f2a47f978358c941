#include <algorithm>

#include "jnt/errors.hpp"
#include "jnt/perm.hpp"

namespace jnt {

namespace {

void rebuild_level(StabilizerChain& c, std::size_t i) {
  const std::size_t n = c.degree;
  c.orbit[i].assign(1, c.base[i]);
  c.slot[i].assign(n, -1);
  c.slot[i][c.base[i]] = 0;
  c.rep[i].assign(1, Permutation::identity(n));
  c.rep_inv[i].assign(1, Permutation::identity(n));
  for (std::size_t j = 0; j < c.orbit[i].size(); ++j) {
    const Point x = c.orbit[i][j];
    for (const auto& s : c.strong[i]) {
      const Point y = s(x);
      if (c.slot[i][y] >= 0) continue;
      c.slot[i][y] = static_cast<std::int32_t>(c.orbit[i].size());
      c.orbit[i].push_back(y);
      Permutation r = c.rep[i][j] * s;
      c.rep_inv[i].push_back(r.inverse());
      c.rep[i].push_back(std::move(r));
    }
  }
}

void push_level(StabilizerChain& c, Point b) {
  c.base.push_back(b);
  c.strong.emplace_back();
  c.orbit.emplace_back();
  c.slot.emplace_back();
  c.rep.emplace_back();
  c.rep_inv.emplace_back();
}

}  // namespace

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const auto& o : orbit) n *= o.size();
  return n;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t start) const {
  for (std::size_t l = start; l < levels(); ++l) {
    const std::int32_t j = slot[l][g(base[l])];
    if (j < 0) return {std::move(g), l};
    g = g * rep_inv[l][static_cast<std::size_t>(j)];
  }
  return {std::move(g), levels()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree) return false;
  auto [h, level] = sift(g);
  return level == levels() && h.is_identity();
}

StabilizerChain StabilizerChain::tail(std::size_t from) const {
  StabilizerChain t;
  t.degree = degree;
  auto cut = [from](const auto& v) {
    using V = std::decay_t<decltype(v)>;
    return from >= v.size() ? V{} : V(v.begin() + static_cast<std::ptrdiff_t>(from), v.end());
  };
  t.base = cut(base);
  t.strong = cut(strong);
  t.orbit = cut(orbit);
  t.slot = cut(slot);
  t.rep = cut(rep);
  t.rep_inv = cut(rep_inv);
  return t;
}

StabilizerChain schreier_sims(std::size_t degree, const std::vector<Permutation>& generators,
                              std::span<const Point> base_prefix) {
  StabilizerChain c;
  c.degree = degree;
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw DomainError("generator degree does not match group degree");
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  for (Point b : base_prefix) {
    if (b >= degree) throw DomainError("base point out of range");
    if (std::find(c.base.begin(), c.base.end(), b) == c.base.end()) push_level(c, b);
  }
  for (const auto& g : gens) {
    const bool fixes_base = std::all_of(c.base.begin(), c.base.end(), [&](Point b) { return g(b) == b; });
    if (fixes_base) push_level(c, g.first_moved());
  }
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < c.levels(); ++i) {
      c.strong[i].push_back(g);
      if (g(c.base[i]) != c.base[i]) break;
    }
  }
  for (std::size_t i = 0; i < c.levels(); ++i) rebuild_level(c, i);

  // Holt's incremental form: level i is complete once every Schreier generator
  // of level i sifts through levels i+1 and below.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(c.levels()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool restarted = false;
    for (std::size_t j = 0; j < c.orbit[li].size() && !restarted; ++j) {
      for (std::size_t s = 0; s < c.strong[li].size() && !restarted; ++s) {
        const Permutation& gen = c.strong[li][s];
        const Point y = gen(c.orbit[li][j]);
        Permutation sg = c.rep[li][j] * gen * c.rep_inv[li][static_cast<std::size_t>(c.slot[li][y])];
        if (sg.is_identity()) continue;
        auto [h, stop] = c.sift(std::move(sg), li + 1);
        if (stop == c.levels()) {
          if (h.is_identity()) continue;
          push_level(c, h.first_moved());
        }
        const std::size_t top = std::min(stop, c.levels() - 1);
        for (std::size_t m = li + 1; m <= top; ++m) {
          c.strong[m].push_back(h);
          rebuild_level(c, m);
        }
        i = static_cast<std::ptrdiff_t>(top);
        restarted = true;
      }
    }
    if (!restarted) --i;
  }
  return c;
}

// ---- PermGroup ----------------------------------------------------------

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), lazy_(std::make_shared<Lazy>()) {
  if (degree == 0 || degree > kMaxDegree) {
    throw DomainError("group degree " + std::to_string(degree) + " outside 1.." + std::to_string(kMaxDegree));
  }
  for (auto& g : generators) {
    if (g.degree() != degree) throw DomainError("generator degree does not match group degree");
    if (!g.is_identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end()) {
      generators_.push_back(std::move(g));
    }
  }
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, StabilizerChain chain)
    : PermGroup(degree, std::move(generators)) {
  std::call_once(lazy_->once, [&] { lazy_->chain = std::move(chain); });
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

PermGroup subgroup_with_chain(std::size_t degree, std::vector<Permutation> gens, StabilizerChain chain) {
  return PermGroup(degree, std::move(gens), std::move(chain));
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(lazy_->once, [this] { lazy_->chain = schreier_sims(degree_, generators_); });
  return *lazy_->chain;
}

BigInt PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Permutation& g) const { return chain().contains(g); }

std::vector<Permutation> PermGroup::elements(std::size_t cap) const {
  const auto& c = chain();
  if (c.order() > cap) {
    throw ResourceError("group of order " + c.order().str() + " exceeds enumeration cap " + std::to_string(cap));
  }
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(c.order()));
  // Element = t_{L-1} * ... * t_0 with t_l a level-l coset representative.
  std::vector<std::size_t> idx(c.levels(), 0);
  std::vector<Permutation> partial(c.levels() + 1);
  partial[0] = Permutation::identity(degree_);
  std::size_t level = 0;
  // Iterative depth-first traversal with level 0 outermost.
  for (;;) {
    while (level < c.levels()) {
      partial[level + 1] = c.rep[level][idx[level]] * partial[level];
      ++level;
    }
    out.push_back(partial[level]);
    // Advance the odometer from the deepest level.
    while (level > 0) {
      --level;
      if (++idx[level] < c.rep[level].size()) break;
      idx[level] = 0;
      if (level == 0) return out;
    }
    if (c.levels() == 0) return out;
  }
}

}  // namespace jnt
