#pragma once

// Bisection cones B_{F,G} = { a : bis_{F,G}(0, a) is nonempty }.
//
// All membership tests treat cones as closed. Facet arguments use the
// 0-based index conventions of polytope.hpp.

#include <optional>
#include <string>
#include <vector>

#include "bisfan/lp.hpp"
#include "bisfan/polytope.hpp"

namespace bisfan {

struct FacetPair {
  FacetIndex f = 0;
  FacetIndex g = 0;
  friend auto operator<=>(const FacetPair&, const FacetPair&) = default;
};

struct Cone {
  std::size_t dim = 0;
  std::vector<QVector> generators;
  /// Optional H-description: rows with relation GE or EQ and rhs 0.
  std::optional<std::vector<LinearConstraint>> halfspaces;

  /// Membership through the generators (LP), or through the halfspaces when
  /// no generators are stored.
  bool contains(const QVector& x) const;
};

/// cone{ v - u : v in vert F, u in vert G } with zero differences dropped and
/// positive multiples merged.
Cone bisection_cone_rays(const UnitBall& ball, FacetIndex f, FacetIndex g);

/// (x, 0) in homog(F) + (-homog(G)), decided by LP over the lifted vertices.
bool homog_membership(const UnitBall& ball, FacetIndex f, FacetIndex g, const QVector& x);

// Closed forms. Polygon facet i is the edge conv{v_i, v_{i+1}}.
bool polygon_cone_contains(const UnitBall& ball, FacetIndex i, FacetIndex j, const QVector& x);
/// x in the interior of B_{i,j} (always false for i = j).
bool polygon_cone_interior(const UnitBall& ball, FacetIndex i, FacetIndex j, const QVector& x);
/// Coordinates i, j are 0-based.
bool cube_cone_contains(std::size_t d, std::size_t i, Sign s1, std::size_t j, Sign s2, const QVector& a);
bool cross_cone_contains(std::size_t d, SubsetMask I, SubsetMask J, const QVector& a);
/// Errors: NotInHyperplane when sum(a) != 0; BadFacet for I or J empty or full.
bool wasserstein_cone_contains(std::size_t d, SubsetMask I, SubsetMask J, const QVector& a);

/// Family dispatcher: closed form where one exists, conical-hull LP on the
/// vertex differences otherwise.
bool cone_contains(const UnitBall& ball, FacetIndex f, FacetIndex g, const QVector& x);

/// Image of the cone under an invertible linear map. Halfspace rows are
/// mapped through the inverse transpose. Errors: SingularMap, DimMismatch.
Cone apply_linear_iso(const Cone& cone, const QMatrix& m);

}  // namespace bisfan
