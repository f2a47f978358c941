#include <algorithm>
#include <set>

#include "jnt/errors.hpp"
#include "jnt/geometry.hpp"

namespace jnt {

Code unital_blocks(std::uint32_t q) {
  if (q < 3 || q > 5) throw DomainError("unital blocks are supported for q in {3,4,5}");
  const auto iso = GeometrySpace::hermitian_isotropic(q);
  const auto plane = GeometrySpace::projective(3, q * q);
  const auto& f = *iso.field();
  std::set<KSubset> blocks;
  for (Point m = 0; m < plane.size(); ++m) {
    const Vec pole = plane.point(m);
    if (hermitian_form(f, pole, pole) == 0) continue;
    // The polar line of a non-isotropic point is a non-degenerate 2-space.
    std::vector<Point> pts;
    for (Point x = 0; x < iso.size(); ++x) {
      if (hermitian_form(f, iso.point(x), pole) == 0) pts.push_back(x);
    }
    if (pts.size() != q + 1) throw ConstructionError("unital block of unexpected size");
    blocks.insert(KSubset::from_indices(iso.size(), pts));
  }
  return Code(iso.size(), q + 1, {blocks.begin(), blocks.end()}, "unital(q=" + std::to_string(q) + ")",
              {{"family", "unital"}, {"q", std::to_string(q)}, {"group", "pgammau:" + std::to_string(q)}});
}

Code baer_sublines(std::uint32_t q0) {
  if (q0 < 2 || q0 > 3) throw DomainError("Baer sublines are supported for q0 in {2,3}");
  const std::uint32_t q = q0 * q0;
  const auto line = GeometrySpace::projective(2, q);
  const auto& f = *line.field();
  std::vector<Point> pts{line.index_or_throw({0, 1})};  // the point at infinity
  for (Value t : f.subfield(f.a() / 2)) pts.push_back(line.index_or_throw({1, t}));
  const KSubset standard = KSubset::from_indices(line.size(), pts);
  const PermGroup g = projective_group(2, q, true);
  const auto orb = orbit_of_subset(g, standard);
  return Code(line.size(), q0 + 1, orb.sorted_members(), "baer_sublines(q0=" + std::to_string(q0) + ")",
              {{"family", "baer_subline"},
               {"q0", std::to_string(q0)},
               {"nominal_min_distance", std::to_string(q0)},
               {"group", "pgammal:2," + std::to_string(q)}});
}

Hyperoval hyperoval_pg24() {
  const auto plane = GeometrySpace::projective(3, 4);
  const auto& f = *plane.field();
  // Conic x1^2 = x0 x2 plus its nucleus.
  std::vector<Point> pts;
  for (Value t = 0; t < 4; ++t) pts.push_back(plane.index_or_throw({1, t, f.mul(t, t)}));
  pts.push_back(plane.index_or_throw({0, 0, 1}));
  pts.push_back(plane.index_or_throw({0, 1, 0}));
  const KSubset conic_plus_nucleus = KSubset::from_indices(plane.size(), pts);

  const PermGroup pgl = projective_group(3, 4, false);
  const auto orb = orbit_of_subset(pgl, conic_plus_nucleus);
  KSubset line_at_infinity(plane.size());
  for (Point x = 0; x < plane.size(); ++x) {
    if (plane.point(x)[0] == 0) line_at_infinity = line_at_infinity.with(x);
  }
  const auto members = orb.sorted_members();
  auto it = std::find_if(members.begin(), members.end(),
                         [&](const KSubset& h) { return h.intersection_size(line_at_infinity) == 0; });
  if (it == members.end()) throw ConstructionError("no hyperoval avoids the line x0 = 0");

  const auto aff = GeometrySpace::affine(2, 4);
  std::vector<Point> affine_pts;
  for (Point x : it->indices()) {
    const Vec c = plane.point(x);
    affine_pts.push_back(aff.index_or_throw({c[1], c[2]}));
  }
  Hyperoval h{it->indices(), KSubset::from_indices(aff.size(), affine_pts), 0, 0};
  h.projective_stabiliser_order = setwise_stabilizer(pgl, *it).order();
  h.affine_stabiliser_order = setwise_stabilizer(affine_group(2, 4, true), h.affine_points).order();
  return h;
}

}  // namespace jnt
