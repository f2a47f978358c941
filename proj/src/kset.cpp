#include "jnt/kset.hpp"

#include <bit>
#include <sstream>

#include "jnt/errors.hpp"

namespace jnt {

namespace {

std::size_t word_count(std::size_t v) { return (v + KSubset::kWordBits - 1) / KSubset::kWordBits; }

}  // namespace

KSubset::KSubset(std::size_t v) : v_(v), words_(word_count(v), 0) {
  if (v > kMaxDegree) {
    throw DomainError("ground set of " + std::to_string(v) + " points exceeds the limit of " +
                      std::to_string(kMaxDegree));
  }
}

KSubset KSubset::from_indices(std::size_t v, std::span<const Point> indices) {
  KSubset s(v);
  for (Point x : indices) {
    if (x >= v) {
      throw DomainError("point " + std::to_string(x) + " out of range for v=" + std::to_string(v));
    }
    if (s.contains(x)) throw DomainError("point " + std::to_string(x) + " repeated in subset");
    s.set(x);
  }
  s.k_ = indices.size();
  return s;
}

KSubset KSubset::from_indices(std::size_t v, std::initializer_list<Point> indices) {
  return from_indices(v, std::span<const Point>(indices.begin(), indices.size()));
}

KSubset KSubset::full(std::size_t v) { return KSubset(v).complement(); }

KSubset KSubset::range(std::size_t v, Point first, Point last) {
  if (first > last || last > v) throw DomainError("invalid point range");
  KSubset s(v);
  for (Point x = first; x < last; ++x) s.set(x);
  s.k_ = last - first;
  return s;
}

bool KSubset::contains(Point x) const {
  if (x >= v_) return false;
  return (words_[x / kWordBits] >> (x % kWordBits)) & 1U;
}

void KSubset::set(Point x) { words_[x / kWordBits] |= Word{1} << (x % kWordBits); }

void KSubset::reset(Point x) { words_[x / kWordBits] &= ~(Word{1} << (x % kWordBits)); }

void KSubset::recount() {
  k_ = 0;
  for (Word w : words_) k_ += static_cast<std::size_t>(std::popcount(w));
}

std::vector<Point> KSubset::indices() const {
  std::vector<Point> out;
  out.reserve(k_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word w = words_[i];
    while (w != 0) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<Point>(i * kWordBits + static_cast<std::size_t>(bit)));
      w &= w - 1;
    }
  }
  return out;
}

Point KSubset::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<Point>(i * kWordBits + std::countr_zero(words_[i]));
  }
  throw DomainError("first() of an empty subset");
}

void check_same_ground(const KSubset& a, const KSubset& b) {
  if (a.v() != b.v()) {
    throw DomainError("subsets over different ground sets (v=" + std::to_string(a.v()) + " and v=" +
                      std::to_string(b.v()) + ")");
  }
}

std::size_t KSubset::intersection_size(const KSubset& other) const {
  check_same_ground(*this, other);
  std::size_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return n;
}

bool KSubset::is_subset_of(const KSubset& other) const {
  check_same_ground(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

KSubset KSubset::complement() const {
  KSubset out(*this);
  for (auto& w : out.words_) w = ~w;
  const std::size_t tail = v_ % kWordBits;
  if (tail != 0) out.words_.back() &= (Word{1} << tail) - 1;
  out.k_ = v_ - k_;
  return out;
}

KSubset KSubset::intersect(const KSubset& other) const {
  check_same_ground(*this, other);
  KSubset out(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  out.recount();
  return out;
}

KSubset KSubset::unite(const KSubset& other) const {
  check_same_ground(*this, other);
  KSubset out(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  out.recount();
  return out;
}

KSubset KSubset::with(Point x) const {
  if (x >= v_) throw DomainError("point out of range");
  KSubset out(*this);
  if (!contains(x)) {
    out.set(x);
    ++out.k_;
  }
  return out;
}

KSubset KSubset::without(Point x) const {
  KSubset out(*this);
  if (contains(x)) {
    out.reset(x);
    --out.k_;
  }
  return out;
}

KSubset KSubset::exchange(Point out_point, Point in_point) const {
  if (!contains(out_point) || in_point >= v_ || contains(in_point)) {
    throw DomainError("invalid exchange in subset");
  }
  KSubset out(*this);
  out.reset(out_point);
  out.set(in_point);
  return out;
}

std::string KSubset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_item = true;
  for (Point x : indices()) {
    if (!first_item) os << ',';
    os << x;
    first_item = false;
  }
  os << '}';
  return os.str();
}

bool operator<(const KSubset& a, const KSubset& b) {
  if (a.v_ != b.v_) return a.v_ < b.v_;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  }
  return false;
}

std::size_t KSubset::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v_;
  for (Word w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace jnt
