#include "jnt/geometry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "jnt/errors.hpp"

namespace jnt {

// ---- matrices -----------------------------------------------------------

FieldMatrix FieldMatrix::identity(const GaloisField& f, std::size_t n) {
  FieldMatrix m{n, std::vector<Value>(n * n, f.zero())};
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Vec FieldMatrix::apply(const GaloisField& f, const Vec& x) const {
  Vec y(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Value s = 0;
    for (std::size_t j = 0; j < n; ++j) s = f.add(s, f.mul(at(i, j), x[j]));
    y[i] = s;
  }
  return y;
}

FieldMatrix FieldMatrix::multiply(const GaloisField& f, const FieldMatrix& o) const {
  FieldMatrix r{n, std::vector<Value>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Value s = 0;
      for (std::size_t l = 0; l < n; ++l) s = f.add(s, f.mul(at(i, l), o.at(l, j)));
      r.at(i, j) = s;
    }
  }
  return r;
}

Value FieldMatrix::determinant(const GaloisField& f) const {
  FieldMatrix m = *this;
  Value det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m.at(piv, c) == 0) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m.at(c, c));
    const Value inv = f.inv(m.at(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      const Value factor = f.mul(m.at(r, c), inv);
      for (std::size_t j = c; j < n; ++j) m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(c, j)));
    }
  }
  return det;
}

Value hermitian_form(const GaloisField& f, const Vec& x, const Vec& y) {
  Value s = f.mul(x[0], f.conjugate(y[2]));
  s = f.add(s, f.mul(x[2], f.conjugate(y[0])));
  return f.add(s, f.mul(x[1], f.conjugate(y[1])));
}

// ---- spaces -------------------------------------------------------------

namespace {

std::uint64_t checked_power(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= b;
    if (r > (std::uint64_t{1} << 40)) throw ResourceError("geometry too large");
  }
  return r;
}

// Calls fn on every vector of GF(q)^n in lexicographic order.
template <class Fn>
void for_each_vector(std::uint32_t q, std::size_t n, Fn fn) {
  const std::uint64_t total = checked_power(q, n);
  Vec x(n, 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    std::uint64_t r = i;
    for (std::size_t j = n; j-- > 0;) {
      x[j] = static_cast<Value>(r % q);
      r /= q;
    }
    fn(x);
  }
}

bool is_normalised(const Vec& x) {
  for (Value c : x) {
    if (c != 0) return c == 1;
  }
  return false;
}

}  // namespace

void GeometrySpace::add_point(const Vec& x) {
  if (size_ >= kMaxDegree) throw ResourceError("geometry exceeds " + std::to_string(kMaxDegree) + " points");
  index_.emplace(pack(x), static_cast<Point>(size_));
  coords_.insert(coords_.end(), x.begin(), x.end());
  ++size_;
}

std::uint64_t GeometrySpace::pack(const Vec& x) const {
  std::uint64_t r = 0;
  for (Value c : x) r = r * field_->q() + c;
  return r;
}

GeometrySpace GeometrySpace::affine(std::size_t n, std::uint32_t q) {
  if (n == 0) throw DomainError("affine dimension must be positive");
  GeometrySpace s;
  s.kind_ = SpaceKind::affine;
  s.n_ = n;
  s.q_param_ = q;
  s.field_ = GaloisField::of_order(q);
  if (checked_power(q, n) > kMaxDegree) throw ResourceError("AG(" + std::to_string(n) + "," + std::to_string(q) + ") too large");
  for_each_vector(q, n, [&](const Vec& x) { s.add_point(x); });
  return s;
}

GeometrySpace GeometrySpace::projective(std::size_t n, std::uint32_t q) {
  if (n < 2) throw DomainError("projective spaces need vector dimension >= 2");
  GeometrySpace s;
  s.kind_ = SpaceKind::projective;
  s.n_ = n;
  s.q_param_ = q;
  s.field_ = GaloisField::of_order(q);
  if ((checked_power(q, n) - 1) / (q - 1) > kMaxDegree) {
    throw ResourceError("PG(" + std::to_string(n - 1) + "," + std::to_string(q) + ") too large");
  }
  for_each_vector(q, n, [&](const Vec& x) {
    if (is_normalised(x)) s.add_point(x);
  });
  return s;
}

GeometrySpace GeometrySpace::hermitian_isotropic(std::uint32_t q) {
  GeometrySpace s;
  s.kind_ = SpaceKind::hermitian_isotropic;
  s.n_ = 3;
  s.q_param_ = q;
  if (static_cast<std::uint64_t>(q) * q > GaloisField::kMaxOrder) throw ResourceError("Hermitian space too large");
  s.field_ = GaloisField::of_order(q * q);
  const auto& f = *s.field_;
  for_each_vector(f.q(), 3, [&](const Vec& x) {
    if (is_normalised(x) && hermitian_form(f, x, x) == 0) s.add_point(x);
  });
  return s;
}

GeometrySpace GeometrySpace::abstract(std::size_t v) {
  if (v == 0 || v > kMaxDegree) throw DomainError("abstract space size out of range");
  GeometrySpace s;
  s.kind_ = SpaceKind::abstract;
  s.size_ = v;
  return s;
}

Vec GeometrySpace::point(Point i) const {
  if (i >= size_) throw DomainError("point index out of range");
  if (kind_ == SpaceKind::abstract) return {i};
  return Vec(coords_.begin() + static_cast<std::ptrdiff_t>(i * n_), coords_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
}

Vec GeometrySpace::normalise(Vec x) const {
  if (kind_ == SpaceKind::affine) return x;
  for (Value c : x) {
    if (c != 0) {
      const Value inv = field_->inv(c);
      for (auto& y : x) y = field_->mul(y, inv);
      return x;
    }
  }
  return {};
}

std::optional<Point> GeometrySpace::index_of(const Vec& x) const {
  if (kind_ == SpaceKind::abstract) {
    if (x.size() == 1 && x[0] < size_) return x[0];
    return std::nullopt;
  }
  if (x.size() != n_) return std::nullopt;
  for (Value c : x) {
    if (c >= field_->q()) return std::nullopt;
  }
  const Vec y = normalise(x);
  if (y.empty()) return std::nullopt;
  auto it = index_.find(pack(y));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Point GeometrySpace::index_or_throw(const Vec& x) const {
  auto i = index_of(x);
  if (!i) throw DomainError("vector does not name a point of " + describe());
  return *i;
}

Permutation GeometrySpace::induced(const FieldMatrix& m, unsigned frobenius_power, const Vec& translation) const {
  if (kind_ == SpaceKind::abstract) throw DomainError("matrices do not act on an abstract space");
  if (m.n != n_) throw DomainError("matrix size does not match the space");
  if (!translation.empty() && (kind_ != SpaceKind::affine || translation.size() != n_)) {
    throw DomainError("translations need an affine space of matching dimension");
  }
  const auto& f = *field_;
  std::vector<Point> img(size_);
  for (Point i = 0; i < size_; ++i) {
    Vec x = point(i);
    for (auto& c : x) c = f.frobenius(c, frobenius_power);
    Vec y = m.apply(f, x);
    if (!translation.empty()) {
      for (std::size_t j = 0; j < n_; ++j) y[j] = f.add(y[j], translation[j]);
    }
    img[i] = index_or_throw(y);
  }
  return Permutation(std::move(img));
}

std::string GeometrySpace::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case SpaceKind::affine:
      os << "AG(" << n_ << "," << q_param_ << ")";
      break;
    case SpaceKind::projective:
      os << "PG(" << n_ - 1 << "," << q_param_ << ")";
      break;
    case SpaceKind::hermitian_isotropic:
      os << "H(2," << q_param_ << "^2)";
      break;
    case SpaceKind::abstract:
      os << "abstract(" << size_ << ")";
      break;
  }
  return os.str();
}

// ---- lines --------------------------------------------------------------

std::vector<Line> lines(const GeometrySpace& space) {
  if (space.kind() != SpaceKind::affine && space.kind() != SpaceKind::projective) {
    throw DomainError("lines are defined for affine and projective spaces only");
  }
  const auto& f = *space.field();
  const std::size_t v = space.size();
  const std::size_t n = space.dimension();
  std::vector<bool> covered(v * v, false);
  std::set<std::vector<Point>> found;
  auto record = [&](std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    for (Point x : pts) {
      for (Point y : pts) covered[static_cast<std::size_t>(x) * v + y] = true;
    }
    found.insert(std::move(pts));
  };
  for (Point i = 0; i < v; ++i) {
    for (Point j = i + 1; j < v; ++j) {
      if (covered[static_cast<std::size_t>(i) * v + j]) continue;
      const Vec u = space.point(i);
      const Vec w = space.point(j);
      std::vector<Point> pts;
      if (space.kind() == SpaceKind::affine) {
        Vec d(n);
        for (std::size_t c = 0; c < n; ++c) d[c] = f.sub(w[c], u[c]);
        for (Value t = 0; t < f.q(); ++t) {
          Vec x(n);
          for (std::size_t c = 0; c < n; ++c) x[c] = f.add(u[c], f.mul(t, d[c]));
          pts.push_back(space.index_or_throw(x));
        }
      } else {
        pts.push_back(i);
        for (Value t = 0; t < f.q(); ++t) {
          Vec x(n);
          for (std::size_t c = 0; c < n; ++c) x[c] = f.add(w[c], f.mul(t, u[c]));
          pts.push_back(space.index_or_throw(x));
        }
      }
      record(std::move(pts));
    }
  }
  std::vector<Line> out;
  out.reserve(found.size());
  for (const auto& pts : found) out.push_back(Line{pts});
  return out;
}

std::vector<std::size_t> line_class(const GeometrySpace& space, const KSubset& g) {
  if (g.v() != space.size()) throw DomainError("subset does not belong to the space");
  std::set<std::size_t> sizes;
  for (const auto& l : lines(space)) {
    std::size_t c = 0;
    for (Point x : l.points) c += g.contains(x) ? 1 : 0;
    sizes.insert(c);
  }
  return {sizes.begin(), sizes.end()};
}

}  // namespace jnt
