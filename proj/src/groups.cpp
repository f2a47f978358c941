#include <algorithm>

#include "jnt/errors.hpp"
#include "jnt/geometry.hpp"

namespace jnt {

namespace {

Permutation cycle_on(std::size_t degree, const std::vector<Point>& pts) {
  return Permutation::from_cycles(degree, {pts});
}

std::vector<Point> iota_points(Point from, Point to) {
  std::vector<Point> out;
  for (Point x = from; x < to; ++x) out.push_back(x);
  return out;
}

// Generators of GL(n, q): a diagonal generator of the torus, one elementary
// transvection, and the permutation matrices of an n-cycle and a transposition.
std::vector<FieldMatrix> general_linear_matrices(const GaloisField& f, std::size_t n) {
  std::vector<FieldMatrix> out;
  FieldMatrix d = FieldMatrix::identity(f, n);
  d.at(0, 0) = f.primitive();
  if (f.q() > 2) out.push_back(d);
  if (n >= 2) {
    FieldMatrix t = FieldMatrix::identity(f, n);
    t.at(0, 1) = f.one();
    out.push_back(t);
    FieldMatrix c{n, std::vector<Value>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i) c.at((i + 1) % n, i) = f.one();
    out.push_back(c);
    FieldMatrix s = FieldMatrix::identity(f, n);
    s.at(0, 0) = s.at(1, 1) = 0;
    s.at(0, 1) = s.at(1, 0) = f.one();
    out.push_back(s);
  }
  return out;
}

// Generators of SL(n, q), n >= 2.
std::vector<FieldMatrix> special_linear_matrices(const GaloisField& f, std::size_t n) {
  std::vector<FieldMatrix> out;
  FieldMatrix up = FieldMatrix::identity(f, n);
  up.at(0, 1) = f.one();
  out.push_back(up);
  FieldMatrix down = FieldMatrix::identity(f, n);
  down.at(1, 0) = f.one();
  out.push_back(down);
  if (f.q() > 3) {
    FieldMatrix d = FieldMatrix::identity(f, n);
    d.at(0, 0) = f.primitive();
    d.at(1, 1) = f.inv(f.primitive());
    out.push_back(d);
  }
  if (n >= 3) {
    FieldMatrix c{n, std::vector<Value>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i) c.at((i + 1) % n, i) = f.one();
    if (n % 2 == 0) c.at(1, 0) = f.neg(f.one());
    out.push_back(c);
  }
  return out;
}

}  // namespace

PermGroup symmetric_group(std::size_t n) {
  if (n <= 1) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}), cycle_on(n, iota_points(0, static_cast<Point>(n)))});
}

PermGroup alternating_group(std::size_t n) {
  if (n <= 2) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) {
    gens.push_back(n % 2 == 1 ? cycle_on(n, iota_points(0, static_cast<Point>(n)))
                              : cycle_on(n, iota_points(1, static_cast<Point>(n))));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup wreath_product(std::size_t a, std::size_t b, const std::optional<PermGroup>& top) {
  if (a == 0 || b == 0) throw DomainError("wreath product needs positive a and b");
  const std::size_t v = a * b;
  std::vector<Permutation> gens;
  if (a >= 2) {
    for (std::size_t i = 0; i < b; ++i) {
      const auto base = static_cast<Point>(i * a);
      gens.push_back(Permutation::from_cycles(v, {{base, base + 1}}));
      gens.push_back(cycle_on(v, iota_points(base, static_cast<Point>(base + a))));
    }
  }
  const PermGroup t = top ? *top : symmetric_group(b);
  if (t.degree() != b) throw DomainError("top group must act on the " + std::to_string(b) + " parts");
  for (const auto& g : t.generators()) {
    std::vector<Point> img(v);
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < a; ++j) img[i * a + j] = static_cast<Point>(g(static_cast<Point>(i)) * a + j);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(v, std::move(gens));
}

PermGroup young_subgroup(std::size_t v, const std::vector<std::vector<Point>>& parts) {
  std::vector<bool> used(v, false);
  std::vector<Permutation> gens;
  for (const auto& part : parts) {
    for (Point x : part) {
      if (x >= v || used[x]) throw DomainError("parts must be disjoint subsets of the point set");
      used[x] = true;
    }
    if (part.size() >= 2) {
      gens.push_back(Permutation::from_cycles(v, {{part[0], part[1]}}));
      if (part.size() >= 3) gens.push_back(cycle_on(v, part));
    }
  }
  return PermGroup(v, std::move(gens));
}

PermGroup affine_group(std::size_t n, std::uint32_t q, bool semilinear) {
  const auto space = GeometrySpace::affine(n, q);
  const auto& f = *space.field();
  std::vector<Permutation> gens;
  for (const auto& m : general_linear_matrices(f, n)) gens.push_back(space.induced(m));
  Vec e0(n, 0);
  e0[0] = f.one();
  gens.push_back(space.induced(FieldMatrix::identity(f, n), 0, e0));
  if (semilinear && f.a() > 1) gens.push_back(space.induced(FieldMatrix::identity(f, n), 1));
  return PermGroup(space.size(), std::move(gens));
}

PermGroup projective_group(std::size_t n, std::uint32_t q, bool semilinear) {
  const auto space = GeometrySpace::projective(n, q);
  const auto& f = *space.field();
  std::vector<Permutation> gens;
  for (const auto& m : general_linear_matrices(f, n)) gens.push_back(space.induced(m));
  if (semilinear && f.a() > 1) gens.push_back(space.induced(FieldMatrix::identity(f, n), 1));
  return PermGroup(space.size(), std::move(gens));
}

PermGroup projective_special_group(std::size_t n, std::uint32_t q) {
  const auto space = GeometrySpace::projective(n, q);
  const auto& f = *space.field();
  std::vector<Permutation> gens;
  for (const auto& m : special_linear_matrices(f, n)) gens.push_back(space.induced(m));
  return PermGroup(space.size(), std::move(gens));
}

// ---- unitary groups -----------------------------------------------------

FieldMatrix unitary_transvection(const GaloisField& f, Value alpha, Value beta) {
  if (f.add(f.add(alpha, f.conjugate(alpha)), f.mul(beta, f.conjugate(beta))) != 0) {
    throw DomainError("(alpha, beta) violates alpha + conj(alpha) + beta conj(beta) = 0");
  }
  FieldMatrix m = FieldMatrix::identity(f, 3);
  m.at(0, 1) = f.neg(f.conjugate(beta));
  m.at(0, 2) = alpha;
  m.at(1, 2) = beta;
  return m;
}

FieldMatrix unitary_torus(const GaloisField& f, Value nu, Value mu) {
  if (nu == 0) throw DomainError("torus element needs nu != 0");
  if (f.mul(mu, f.conjugate(mu)) != f.one()) throw DomainError("torus element needs mu conj(mu) = 1");
  FieldMatrix m = FieldMatrix::identity(f, 3);
  m.at(0, 0) = nu;
  m.at(1, 1) = mu;
  m.at(2, 2) = f.inv(f.conjugate(nu));
  return m;
}

UnitaryGenerators unitary_generators(std::uint32_t q) {
  const auto space = GeometrySpace::hermitian_isotropic(q);
  const auto& f = *space.field();
  UnitaryGenerators u;
  u.q = q;
  // One admissible pair with beta = 0 and one with beta = 1, each with least alpha.
  for (Value beta : {Value{0}, Value{1}}) {
    for (Value alpha = 0; alpha < f.q(); ++alpha) {
      if (alpha == 0 && beta == 0) continue;
      const Value lhs = f.add(f.add(alpha, f.conjugate(alpha)), f.mul(beta, f.conjugate(beta)));
      if (lhs == 0) {
        u.transvections.push_back(unitary_transvection(f, alpha, beta));
        u.transvection_params.emplace_back(alpha, beta);
        break;
      }
    }
  }
  const Value nu = f.primitive();
  u.torus_special = unitary_torus(f, nu, f.pow(nu, static_cast<long long>(q) - 1));
  u.torus_general = unitary_torus(f, nu, f.one());
  u.weyl = FieldMatrix{3, std::vector<Value>(9, 0)};
  u.weyl.at(0, 2) = f.one();
  u.weyl.at(1, 1) = f.neg(f.one());
  u.weyl.at(2, 0) = f.one();

  for (const auto& t : u.transvections) u.psu.push_back(space.induced(t));
  u.psu.push_back(space.induced(u.torus_special));
  u.psu.push_back(space.induced(u.weyl));
  u.pgu = u.psu;
  u.pgu.push_back(space.induced(u.torus_general));
  u.pgammau = u.pgu;
  if (f.a() > 1) u.pgammau.push_back(space.induced(FieldMatrix::identity(f, 3), 1));
  return u;
}

PermGroup unitary_group(std::uint32_t q, UnitaryLevel level) {
  auto u = unitary_generators(q);
  const std::size_t v = static_cast<std::size_t>(q) * q * q + 1;
  switch (level) {
    case UnitaryLevel::psu:
      return PermGroup(v, std::move(u.psu));
    case UnitaryLevel::pgu:
      return PermGroup(v, std::move(u.pgu));
    case UnitaryLevel::pgammau:
      break;
  }
  return PermGroup(v, std::move(u.pgammau));
}

// ---- dispatch -----------------------------------------------------------

GeometrySpace space_for(const GroupRequest& r) {
  switch (r.family) {
    case GroupFamily::agl:
    case GroupFamily::agammal:
      return GeometrySpace::affine(r.n, r.q);
    case GroupFamily::pgl:
    case GroupFamily::pgammal:
    case GroupFamily::psl:
      return GeometrySpace::projective(r.n, r.q);
    case GroupFamily::psu:
    case GroupFamily::pgu:
    case GroupFamily::pgammau:
      return GeometrySpace::hermitian_isotropic(r.q);
    case GroupFamily::wreath:
      return GeometrySpace::abstract(r.a * r.b);
    default:
      return GeometrySpace::abstract(r.degree);
  }
}

PermGroup group_generators(const GroupRequest& r) {
  switch (r.family) {
    case GroupFamily::trivial:
      return PermGroup::trivial(r.degree);
    case GroupFamily::sym:
      return symmetric_group(r.degree);
    case GroupFamily::alt:
      return alternating_group(r.degree);
    case GroupFamily::wreath:
      return wreath_product(r.a, r.b);
    case GroupFamily::young:
      return young_subgroup(r.degree, r.parts);
    case GroupFamily::agl:
      return affine_group(r.n, r.q, false);
    case GroupFamily::agammal:
      return affine_group(r.n, r.q, true);
    case GroupFamily::pgl:
      return projective_group(r.n, r.q, false);
    case GroupFamily::pgammal:
      return projective_group(r.n, r.q, true);
    case GroupFamily::psl:
      return projective_special_group(r.n, r.q);
    case GroupFamily::psu:
      return unitary_group(r.q, UnitaryLevel::psu);
    case GroupFamily::pgu:
      return unitary_group(r.q, UnitaryLevel::pgu);
    case GroupFamily::pgammau:
      return unitary_group(r.q, UnitaryLevel::pgammau);
  }
  throw DomainError("unsupported group family");
}

}  // namespace jnt
