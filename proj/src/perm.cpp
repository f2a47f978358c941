#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <sstream>

#include "jnt/errors.hpp"
#include "jnt/perm.hpp"

namespace jnt {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) throw DomainError("permutation degree exceeds limit");
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y]) throw DomainError("image list is not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Point x = cyc[i];
      if (x >= degree) throw DomainError("cycle point " + std::to_string(x) + " out of range");
      if (used[x]) throw DomainError("point " + std::to_string(x) + " appears twice in cycles");
      used[x] = true;
      img[x] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::parse_cycles(std::size_t degree, const std::string& text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw DomainError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw DomainError("unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') throw DomainError("bad character in cycle: " + text);
      unsigned long value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<unsigned long>(text[i] - '0');
        if (value > kMaxDegree) throw DomainError("point too large in cycle: " + text);
        ++i;
      }
      cyc.push_back(static_cast<Point>(value));
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_space();
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

Point Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation compose(const Permutation& first, const Permutation& second) {
  if (first.degree() != second.degree()) throw DomainError("composing permutations of different degree");
  std::vector<Point> img(first.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = second.images_[first.images_[i]];
  return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation Permutation::operator*(const Permutation& rhs) const { return compose(*this, rhs); }

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    Point x = static_cast<Point>(i);
    bool first_item = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first_item) os << ' ';
      os << x;
      first_item = false;
      x = images_[x];
    }
    os << ')';
    any = true;
  }
  if (!any) os << "()";
  return os.str();
}

Point act(const Permutation& p, Point x) {
  if (x >= p.degree()) throw DomainError("point " + std::to_string(x) + " outside permutation domain");
  return p(x);
}

KSubset act(const Permutation& p, const KSubset& s) {
  if (s.v() != p.degree()) {
    throw DomainError("subset over " + std::to_string(s.v()) + " points acted on by degree " +
                      std::to_string(p.degree()) + " permutation");
  }
  KSubset out(s.v());
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    KSubset::Word word = s.words_[w];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      out.set(p.images_[w * KSubset::kWordBits + static_cast<std::size_t>(bit)]);
      word &= word - 1;
    }
  }
  out.k_ = s.k_;
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = p.degree();
  for (Point x : p.images()) h = h * 1000003U ^ x;
  return h;
}

// ---- orbits -------------------------------------------------------------

std::vector<Point> orbit(const PermGroup& g, Point x) {
  if (x >= g.degree()) throw DomainError("point out of range");
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> out{x};
  seen[x] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& s : g.generators()) {
      const Point y = s(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < g.degree(); ++x) {
    if (seen[x]) continue;
    auto orb = orbit(g, x);
    for (Point y : orb) seen[y] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(const PermGroup& g) { return g.degree() <= 1 || orbit(g, 0).size() == g.degree(); }

std::int64_t SubsetOrbit::index_of(const KSubset& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

Permutation SubsetOrbit::transversal(std::size_t i, const std::vector<Permutation>& generators) const {
  std::vector<std::int32_t> word;
  for (std::int64_t j = static_cast<std::int64_t>(i); edges_[j].parent >= 0; j = edges_[j].parent) {
    word.push_back(edges_[j].generator);
  }
  Permutation t = Permutation::identity(members_.front().v());
  for (auto it = word.rbegin(); it != word.rend(); ++it) t = t * generators[*it];
  return t;
}

std::vector<KSubset> SubsetOrbit::sorted_members() const {
  auto out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

SubsetOrbit orbit_of_subset(const PermGroup& g, const KSubset& s, std::size_t cap) {
  if (s.v() != g.degree()) throw DomainError("subset and group have different degree");
  SubsetOrbit orb;
  orb.members_.push_back(s);
  orb.edges_.push_back({-1, -1});
  orb.index_.emplace(s, 0);
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < orb.members_.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      KSubset img = act(gens[j], orb.members_[i]);
      if (orb.index_.contains(img)) continue;
      if (orb.members_.size() >= cap) {
        throw ResourceError("subset orbit exceeds cap of " + std::to_string(cap) + " members");
      }
      orb.index_.emplace(img, orb.members_.size());
      orb.members_.push_back(std::move(img));
      orb.edges_.push_back({static_cast<std::int64_t>(i), static_cast<std::int32_t>(j)});
    }
  }
  return orb;
}

BigInt group_order(const PermGroup& g) { return g.order(); }

PermGroup point_stabilizer(const PermGroup& g, Point x) {
  if (x >= g.degree()) throw DomainError("point out of range");
  const Point prefix[] = {x};
  StabilizerChain chain = schreier_sims(g.degree(), g.generators(), prefix);
  StabilizerChain sub = chain.tail(1);
  std::vector<Permutation> gens = sub.levels() > 0 ? sub.strong[0] : std::vector<Permutation>{};
  return subgroup_with_chain(g.degree(), std::move(gens), std::move(sub));
}

PermGroup setwise_stabilizer(const PermGroup& g, const KSubset& s, std::size_t cap) {
  const SubsetOrbit orb = orbit_of_subset(g, s, cap);
  const BigInt target = g.order() / orb.size();
  const auto& gens = g.generators();
  const std::size_t n = g.degree();

  // Transversal elements in BFS order; each extends its parent's by one generator.
  std::vector<Permutation> trans;
  trans.reserve(orb.size());
  trans.push_back(Permutation::identity(n));
  for (std::size_t i = 1; i < orb.size(); ++i) {
    const auto& e = orb.schreier()[i];
    trans.push_back(trans[static_cast<std::size_t>(e.parent)] * gens[static_cast<std::size_t>(e.generator)]);
  }

  std::vector<Permutation> stab_gens;
  StabilizerChain chain = schreier_sims(n, stab_gens);
  if (chain.order() == target) return subgroup_with_chain(n, std::move(stab_gens), std::move(chain));
  for (std::size_t i = 0; i < orb.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const KSubset img = act(gens[j], orb.members()[i]);
      const auto t = static_cast<std::size_t>(orb.index_of(img));
      Permutation sg = trans[i] * gens[j] * trans[t].inverse();
      if (sg.is_identity() || chain.contains(sg)) continue;
      stab_gens.push_back(std::move(sg));
      chain = schreier_sims(n, stab_gens);
      if (chain.order() == target) return subgroup_with_chain(n, std::move(stab_gens), std::move(chain));
    }
  }
  throw Error("setwise stabiliser construction did not reach the orbit-stabiliser order");
}

bool is_transitive_on_product(const PermGroup& g, const KSubset& a, const KSubset& b) {
  check_same_ground(a, b);
  if (a.v() != g.degree()) throw DomainError("sets and group have different degree");
  if (a.empty() || b.empty()) throw DomainError("product of empty sets");
  const bool same = (a == b);
  if (!same && a.intersection_size(b) != 0) throw DomainError("product sets must be equal or disjoint");
  const std::size_t n = g.degree();
  const std::size_t expected = same ? a.size() * (a.size() - 1) : a.size() * b.size();
  if (expected == 0) return true;

  const auto ai = a.indices();
  const auto bi = b.indices();
  const Point x0 = ai[0];
  const Point y0 = same ? ai[1] : bi[0];
  std::vector<bool> seen(n * n, false);
  std::vector<std::pair<Point, Point>> queue{{x0, y0}};
  seen[static_cast<std::size_t>(x0) * n + y0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& s : g.generators()) {
      const Point x = s(queue[i].first);
      const Point y = s(queue[i].second);
      if (!a.contains(x) || !b.contains(y)) {
        throw DomainError("group does not preserve the product sets");
      }
      const std::size_t key = static_cast<std::size_t>(x) * n + y;
      if (!seen[key]) {
        seen[key] = true;
        queue.emplace_back(x, y);
      }
    }
  }
  return queue.size() == expected;
}

// ---- primitivity --------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }
  Point find(Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Point x, Point y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent[y] = x;
    return true;
  }
};

// Finest block system in which 0 and x share a block.
std::vector<std::vector<Point>> minimal_blocks(const PermGroup& g, Point x) {
  const std::size_t n = g.degree();
  UnionFind uf(n);
  std::vector<std::pair<Point, Point>> pending;
  uf.unite(0, x);
  pending.emplace_back(0, x);
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    for (const auto& s : g.generators()) {
      const Point sa = s(a);
      const Point sb = s(b);
      if (uf.unite(sa, sb)) pending.emplace_back(sa, sb);
    }
  }
  std::vector<std::vector<Point>> classes(n);
  for (Point y = 0; y < n; ++y) classes[uf.find(y)].push_back(y);
  std::vector<std::vector<Point>> out;
  for (auto& c : classes) {
    if (!c.empty()) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

bool is_block_system(const PermGroup& g, const std::vector<std::vector<Point>>& blocks) {
  const std::size_t n = g.degree();
  std::vector<std::int64_t> block_of(n, -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Point x : blocks[i]) {
      if (x >= n || block_of[x] != -1) return false;
      block_of[x] = static_cast<std::int64_t>(i);
    }
  }
  if (std::find(block_of.begin(), block_of.end(), -1) != block_of.end()) return false;
  for (const auto& s : g.generators()) {
    for (const auto& blk : blocks) {
      const std::int64_t target = block_of[s(blk.front())];
      for (Point x : blk) {
        if (block_of[s(x)] != target) return false;
      }
    }
  }
  return true;
}

PrimitivityResult primitivity(const PermGroup& g) {
  PrimitivityResult r;
  r.transitive = is_transitive(g);
  if (!r.transitive) return r;
  r.primitive = true;
  for (Point x = 1; x < g.degree(); ++x) {
    auto blocks = minimal_blocks(g, x);
    if (blocks.size() > 1) {
      r.primitive = false;
      r.blocks = std::move(blocks);
      break;
    }
  }
  return r;
}

bool is_primitive(const PermGroup& g) { return primitivity(g).primitive; }

bool is_2transitive(const PermGroup& g) {
  if (!is_transitive(g)) return false;
  if (g.degree() <= 2) return g.degree() < 2 || !g.is_trivial();
  const PermGroup stab = point_stabilizer(g, 0);
  return orbit(stab, 1).size() == g.degree() - 1;
}

}  // namespace jnt
