#include "jnt/johnson.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "jnt/errors.hpp"
#include "jnt/parallel.hpp"

namespace jnt {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

Code::Code(std::size_t v, std::size_t k, std::vector<KSubset> codewords, std::string name, Params params)
    : v_(v), k_(k), codewords_(std::move(codewords)), name_(std::move(name)), params_(std::move(params)) {
  if (v == 0 || v > kMaxDegree) throw DomainError("code ground set size out of range");
  if (k > v) throw DomainError("codeword size exceeds ground set");
  if (codewords_.empty()) throw DomainError("a code needs at least one codeword");
  for (std::size_t i = 0; i < codewords_.size(); ++i) {
    const auto& c = codewords_[i];
    if (c.v() != v) throw DomainError("codeword " + std::to_string(i) + " has wrong ground set size");
    if (c.size() != k) throw DomainError("codeword " + std::to_string(i) + " has size " + std::to_string(c.size()));
  }
  std::sort(codewords_.begin(), codewords_.end());
  auto dup = std::adjacent_find(codewords_.begin(), codewords_.end());
  if (dup != codewords_.end()) throw DomainError("duplicate codeword " + dup->to_string());
}

std::optional<std::string> Code::param(const std::string& key) const {
  for (const auto& [k, val] : params_) {
    if (k == key) return val;
  }
  return std::nullopt;
}

void Code::set_param(const std::string& key, std::string value) {
  for (auto& [k, val] : params_) {
    if (k == key) {
      val = std::move(value);
      return;
    }
  }
  params_.emplace_back(key, std::move(value));
}

bool Code::contains(const KSubset& s) const { return std::binary_search(codewords_.begin(), codewords_.end(), s); }

bool Code::degenerate() const { return k_ < 2 || k_ + 2 > v_ || is_full(); }

std::size_t jdistance(const KSubset& a, const KSubset& b) {
  if (a.v() != b.v() || a.size() != b.size()) {
    throw DomainError("distance between vertices of different Johnson graphs");
  }
  return a.size() - a.intersection_size(b);
}

std::vector<KSubset> neighbours_of_vertex(const KSubset& g) {
  std::vector<KSubset> out;
  const auto in = g.indices();
  const auto out_pts = g.complement().indices();
  out.reserve(in.size() * out_pts.size());
  for (Point u : in) {
    for (Point w : out_pts) out.push_back(g.exchange(u, w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<KSubset> neighbour_set(const Code& code) {
  std::unordered_set<KSubset, KSubsetHash> seen;
  for (const auto& c : code.codewords()) {
    const auto in = c.indices();
    const auto out_pts = c.complement().indices();
    for (Point u : in) {
      for (Point w : out_pts) {
        KSubset n = c.exchange(u, w);
        if (!code.contains(n)) seen.insert(std::move(n));
      }
    }
  }
  std::vector<KSubset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> min_distance(const Code& code) {
  const auto& cw = code.codewords();
  if (cw.size() < 2) return std::nullopt;
  std::mutex m;
  std::size_t best = 0;  // largest intersection between distinct codewords
  parallel_for(cw.size(), [&](std::size_t i) {
    std::size_t local = 0;
    for (std::size_t j = i + 1; j < cw.size(); ++j) local = std::max(local, cw[i].intersection_size(cw[j]));
    std::lock_guard lock(m);
    best = std::max(best, local);
  });
  return code.k() - best;
}

// ---- U-types ------------------------------------------------------------

UniformPartition::UniformPartition(std::size_t v, std::vector<std::vector<Point>> parts) : v_(v), a_(0) {
  if (parts.empty()) throw DomainError("partition without parts");
  part_of_.assign(v, parts.size());
  a_ = parts.front().size();
  if (a_ == 0) throw DomainError("partition with an empty part");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() != a_) throw DomainError("partition parts differ in size");
    for (Point x : parts[i]) {
      if (x >= v) throw DomainError("partition point out of range");
      if (part_of_[x] != parts.size()) throw DomainError("partition parts overlap");
      part_of_[x] = i;
    }
    parts_.push_back(KSubset::from_indices(v, parts[i]));
  }
  if (a_ * parts.size() != v) throw DomainError("partition does not cover the point set");
}

UniformPartition UniformPartition::contiguous(std::size_t a, std::size_t b) {
  std::vector<std::vector<Point>> parts(b);
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < a; ++j) parts[i].push_back(static_cast<Point>(i * a + j));
  }
  return UniformPartition(a * b, std::move(parts));
}

UType UType::from_sizes(std::size_t a, const std::vector<long long>& sizes) {
  UType t;
  t.m.assign(a, 0);
  for (long long s : sizes) {
    if (s < 0 || static_cast<std::size_t>(s) > a) throw DomainError("intersection size out of range");
    if (s > 0) ++t.m[static_cast<std::size_t>(s) - 1];
  }
  return t;
}

std::size_t UType::parts_met() const {
  std::size_t n = 0;
  for (auto c : m) n += c;
  return n;
}

std::size_t UType::weight() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < m.size(); ++i) n += (i + 1) * m[i];
  return n;
}

std::string UType::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << ',';
    first = false;
    os << (i + 1);
    if (m[i] > 1) os << '^' << m[i];
  }
  os << '}';
  return os.str();
}

UType u_type(const KSubset& g, const UniformPartition& partition) {
  if (g.v() != partition.v()) throw DomainError("subset and partition have different ground sets");
  UType t;
  t.m.assign(partition.a(), 0);
  for (const auto& part : partition.parts()) {
    const std::size_t s = g.intersection_size(part);
    if (s > 0) ++t.m[s - 1];
  }
  return t;
}

Code complement_code(const Code& code) {
  std::vector<KSubset> cw;
  cw.reserve(code.size());
  for (const auto& c : code.codewords()) cw.push_back(c.complement());
  Params params = code.params();
  return Code(code.v(), code.v() - code.k(), std::move(cw), "complement(" + code.name() + ")", std::move(params));
}

}  // namespace jnt
