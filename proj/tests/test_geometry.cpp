#include <doctest.h>

#include <map>

#include "jnt/errors.hpp"
#include "jnt/geometry.hpp"

using namespace jnt;

TEST_CASE("point counts") {
  CHECK(GeometrySpace::affine(3, 3).size() == 27);
  CHECK(GeometrySpace::projective(3, 4).size() == 21);
  CHECK(GeometrySpace::projective(4, 2).size() == 15);
  CHECK(GeometrySpace::projective(2, 9).size() == 10);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) CHECK(GeometrySpace::hermitian_isotropic(q).size() == q * q * q + 1);
}

TEST_CASE("canonical coordinates") {
  const auto ag = GeometrySpace::affine(2, 3);
  CHECK(ag.point(5) == Vec{1, 2});
  CHECK(ag.index_of({2, 0}) == Point{6});
  const auto pg = GeometrySpace::projective(3, 3);
  CHECK(pg.point(0) == Vec{0, 0, 1});
  // Scalar multiples name the same point.
  CHECK(pg.index_of({0, 2, 2}) == pg.index_of({0, 1, 1}));
  CHECK_FALSE(pg.index_of({0, 0, 0}).has_value());
  for (Point i = 1; i < pg.size(); ++i) CHECK(pg.point(i - 1) < pg.point(i));
}

TEST_CASE("lines") {
  const auto ag = GeometrySpace::affine(2, 4);
  const auto al = lines(ag);
  CHECK(al.size() == 20);
  for (const auto& l : al) CHECK(l.points.size() == 4);
  const auto pl = lines(GeometrySpace::projective(3, 4));
  CHECK(pl.size() == 21);
  for (const auto& l : pl) CHECK(l.points.size() == 5);
  CHECK(lines(GeometrySpace::projective(4, 2)).size() == 35);
  CHECK(lines(GeometrySpace::affine(3, 2)).size() == 28);
}

TEST_CASE("hyperoval of PG(2,4)") {
  const auto h = hyperoval_pg24();
  CHECK(h.projective_points.size() == 6);
  const auto plane = GeometrySpace::projective(3, 4);
  const auto set = KSubset::from_indices(21, h.projective_points);
  CHECK(line_class(plane, set) == std::vector<std::size_t>{0, 2});
  CHECK(h.projective_stabiliser_order == 360);
  CHECK(h.affine_stabiliser_order == 120);
  CHECK(line_class(GeometrySpace::affine(2, 4), h.affine_points) == std::vector<std::size_t>{0, 2});
  for (Point x : h.projective_points) CHECK(plane.point(x)[0] != 0);
}

TEST_CASE("unitary generators preserve the hermitian form") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    const auto gens = unitary_generators(q);
    const auto f = GaloisField::of_order(q * q);
    const auto space = GeometrySpace::hermitian_isotropic(q);
    std::vector<FieldMatrix> isometries = gens.transvections;
    isometries.push_back(gens.weyl);
    isometries.push_back(gens.torus_special);
    for (const auto& m : isometries) {
      for (Point i = 0; i < space.size(); i += 3) {
        for (Point j = 0; j < space.size(); j += 5) {
          const Vec x = space.point(i);
          const Vec y = space.point(j);
          CHECK(hermitian_form(*f, m.apply(*f, x), m.apply(*f, y)) == hermitian_form(*f, x, y));
        }
      }
    }
    CHECK(gens.torus_special.determinant(*f) == 1);
    for (const auto& t : gens.transvections) CHECK(t.determinant(*f) == 1);
  }
}

TEST_CASE("transvection shape") {
  const auto f = GaloisField::of_order(9);
  const Value beta = 1;
  // Any alpha with alpha + conj(alpha) + beta conj(beta) = 0.
  Value alpha = 0;
  while (f->add(f->add(alpha, f->conjugate(alpha)), f->mul(beta, f->conjugate(beta))) != 0) ++alpha;
  const auto t = unitary_transvection(*f, alpha, beta);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(0, 1) == f->neg(f->conjugate(beta)));
  CHECK(t.at(0, 2) == alpha);
  CHECK(t.at(1, 0) == 0);
  CHECK(t.at(1, 1) == 1);
  CHECK(t.at(1, 2) == beta);
  CHECK(t.at(2, 0) == 0);
  CHECK(t.at(2, 1) == 0);
  CHECK(t.at(2, 2) == 1);
  CHECK_THROWS_AS(unitary_transvection(*f, 0, 1), DomainError);
}

TEST_CASE("unital blocks") {
  for (std::uint32_t q : {3u, 4u}) {
    const Code c = unital_blocks(q);
    const std::size_t v = q * q * q + 1;
    CHECK(c.v() == v);
    CHECK(c.k() == q + 1);
    // 2-(q^3+1, q+1, 1) design: b = v(v-1)/((q+1)q).
    CHECK(c.size() == v * (v - 1) / ((q + 1) * q));
    std::map<std::pair<Point, Point>, int> pairs;
    for (const auto& b : c.codewords()) {
      const auto idx = b.indices();
      for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) ++pairs[{idx[i], idx[j]}];
      }
    }
    CHECK(pairs.size() == v * (v - 1) / 2);
    for (const auto& [pair, count] : pairs) CHECK(count == 1);
  }
}

TEST_CASE("baer sublines") {
  const Code b2 = baer_sublines(2);
  CHECK(b2.size() == 10);
  CHECK(b2.is_full());
  const Code b3 = baer_sublines(3);
  CHECK(b3.v() == 10);
  CHECK(b3.size() == 30);
  CHECK_THROWS_AS(baer_sublines(4), DomainError);
}

TEST_CASE("induced permutations") {
  const auto pg = GeometrySpace::projective(2, 4);
  const auto f = pg.field();
  auto m = FieldMatrix::identity(*f, 2);
  m.at(0, 1) = 1;
  const auto p = pg.induced(m);
  CHECK(p.degree() == 5);
  CHECK_FALSE(p.is_identity());
  const auto space = GeometrySpace::hermitian_isotropic(3);
  auto bad = FieldMatrix::identity(*space.field(), 3);
  bad.at(0, 1) = 1;
  CHECK_THROWS_AS(space.induced(bad), DomainError);
}
