#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "jnt/gf.hpp"
#include "jnt/johnson.hpp"
#include "jnt/perm.hpp"

namespace jnt {

using Value = GaloisField::Value;
using Vec = std::vector<Value>;

enum class SpaceKind { affine, projective, hermitian_isotropic, abstract };

// Square matrix over a field, row-major, acting on column vectors.
struct FieldMatrix {
  std::size_t n = 0;
  std::vector<Value> e;

  static FieldMatrix identity(const GaloisField& f, std::size_t n);
  Value at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
  Value& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
  Vec apply(const GaloisField& f, const Vec& x) const;
  FieldMatrix multiply(const GaloisField& f, const FieldMatrix& o) const;
  Value determinant(const GaloisField& f) const;
};

// phi(x, y) = x0*conj(y2) + x2*conj(y0) + x1*conj(y1) over GF(q^2).
Value hermitian_form(const GaloisField& f, const Vec& x, const Vec& y);

class GeometrySpace {
 public:
  // AG(n, q): all of GF(q)^n, lexicographic with the first coordinate most significant.
  static GeometrySpace affine(std::size_t n, std::uint32_t q);
  // PG(n-1, q): normalised non-zero vectors of GF(q)^n (first non-zero coordinate 1), lexicographic.
  static GeometrySpace projective(std::size_t n, std::uint32_t q);
  // The q^3+1 isotropic points of PG(2, q^2) for the Hermitian form above.
  static GeometrySpace hermitian_isotropic(std::uint32_t q);
  static GeometrySpace abstract(std::size_t v);

  SpaceKind kind() const { return kind_; }
  std::size_t dimension() const { return n_; }
  // Order of the coordinate field (q^2 for the Hermitian space).
  std::uint32_t field_order() const { return field_ ? field_->q() : 0; }
  const std::shared_ptr<const GaloisField>& field() const { return field_; }
  std::size_t size() const { return size_; }

  // Canonical coordinates of point i.
  Vec point(Point i) const;
  // Index of the point spanned or named by x, if it lies in the space.
  std::optional<Point> index_of(const Vec& x) const;
  Point index_or_throw(const Vec& x) const;

  // Permutation induced by x -> M * frob^e(x) + t. Throws if a point leaves the space.
  Permutation induced(const FieldMatrix& m, unsigned frobenius_power = 0, const Vec& translation = {}) const;

  std::string describe() const;

 private:
  GeometrySpace() = default;
  Vec normalise(Vec x) const;
  std::uint64_t pack(const Vec& x) const;
  void add_point(const Vec& x);

  SpaceKind kind_ = SpaceKind::abstract;
  std::size_t n_ = 0;
  std::uint32_t q_param_ = 0;
  std::shared_ptr<const GaloisField> field_;
  std::size_t size_ = 0;
  std::vector<Value> coords_;
  std::unordered_map<std::uint64_t, Point> index_;
};

struct Line {
  std::vector<Point> points;  // sorted
};

// All lines of an affine or projective space, sorted by point list.
std::vector<Line> lines(const GeometrySpace& space);

// Sorted distinct values of |g n l| over all lines l.
std::vector<std::size_t> line_class(const GeometrySpace& space, const KSubset& g);

// ---- groups -------------------------------------------------------------

enum class GroupFamily {
  trivial,
  sym,
  alt,
  wreath,       // S_a wr S_b on contiguous parts of size a
  young,        // Sym on each given part
  agl,
  agammal,
  pgl,
  pgammal,
  psl,
  psu,
  pgu,
  pgammau,
};

struct GroupRequest {
  GroupFamily family = GroupFamily::trivial;
  std::size_t degree = 0;  // trivial, sym, alt
  std::size_t a = 0, b = 0;  // wreath
  std::vector<std::vector<Point>> parts;  // young
  std::size_t n = 0;  // vector dimension for linear families
  std::uint32_t q = 0;
};

PermGroup group_generators(const GroupRequest& request);
// The space a group request acts on.
GeometrySpace space_for(const GroupRequest& request);

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
// S_a wr top, parts {ia, ..., ia+a-1}; top acts on the b part indices (default Sym(b)).
PermGroup wreath_product(std::size_t a, std::size_t b, const std::optional<PermGroup>& top = std::nullopt);
PermGroup young_subgroup(std::size_t v, const std::vector<std::vector<Point>>& parts);
PermGroup affine_group(std::size_t n, std::uint32_t q, bool semilinear);
PermGroup projective_group(std::size_t n, std::uint32_t q, bool semilinear);
PermGroup projective_special_group(std::size_t n, std::uint32_t q);

struct UnitaryGenerators {
  std::uint32_t q = 0;
  std::vector<FieldMatrix> transvections;  // t(alpha, beta)
  std::vector<std::pair<Value, Value>> transvection_params;
  FieldMatrix torus_special;  // h(nu, nu^(q-1)), determinant 1
  FieldMatrix torus_general;  // h(nu, 1)
  FieldMatrix weyl;           // antidiag(1, -1, 1)
  std::vector<Permutation> psu;
  std::vector<Permutation> pgu;
  std::vector<Permutation> pgammau;
};

// t(alpha, beta) = [[1, -conj(beta), alpha], [0, 1, beta], [0, 0, 1]].
FieldMatrix unitary_transvection(const GaloisField& f, Value alpha, Value beta);
// h(nu, mu) = diag(nu, mu, conj(nu)^-1).
FieldMatrix unitary_torus(const GaloisField& f, Value nu, Value mu);
UnitaryGenerators unitary_generators(std::uint32_t q);

enum class UnitaryLevel { psu, pgu, pgammau };
PermGroup unitary_group(std::uint32_t q, UnitaryLevel level);

// ---- geometric codes ----------------------------------------------------

// Blocks of the classical unital on the Hermitian isotropic points, q in {3,4,5}.
Code unital_blocks(std::uint32_t q);
// Orbit of the standard Baer subline under PGammaL(2, q0^2), q0 in {2,3}.
Code baer_sublines(std::uint32_t q0);

struct Hyperoval {
  std::vector<Point> projective_points;  // in PG(2,4)
  KSubset affine_points;                  // image in AG(2,4)
  BigInt projective_stabiliser_order;     // in PGL(3,4)
  BigInt affine_stabiliser_order;         // in AGammaL(2,4)
};
// A hyperoval of PG(2,4) disjoint from the line x0 = 0, transported to AG(2,4).
Hyperoval hyperoval_pg24();

}  // namespace jnt
