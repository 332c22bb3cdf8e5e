#pragma once

// Centrally symmetric unit balls and their facet data.
//
// Facet index conventions (0-based indices into UnitBall::facets()):
//   Polygon        F_i = conv{v_i, v_{i+1}}, index i-1 for i in 1..2n
//   Cube           F_i^+ at 2(i-1), F_i^- at 2(i-1)+1
//   CrossPolytope  F_I at index mask(I), all 2^d subsets
//   RootPolytopeA  F_I at index mask(I)-1, proper nonempty subsets
//   GeneralVRep    order of the input facet list (or discovery order)
// mask(I) sets bit i-1 for every i in I.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bisfan/exact.hpp"

namespace bisfan {

using FacetIndex = std::size_t;
using SubsetMask = std::uint32_t;

/// Largest ambient dimension accepted by subset-indexed code paths.
inline constexpr std::size_t kMaxMaskDim = 20;
/// Largest dimension for which the cube, cross-polytope and root polytope are
/// materialized with explicit vertex and facet lists.
inline constexpr std::size_t kMaxExplicitDim = 16;

enum class Family { Polygon, Cube, CrossPolytope, RootPolytopeA, GeneralVRep };
enum class Sign { Plus, Minus };

std::string_view to_string(Family f);

struct Facet {
  std::vector<std::size_t> vertex_indices;  // sorted
  QVector normal;                           // z
  Rational offset;                          // b > 0
  FacetIndex opposite = 0;                  // index of -F
};

class UnitBall {
 public:
  Family family() const { return family_; }
  std::size_t dim() const { return dim_; }
  std::size_t intrinsic_dim() const { return sum_zero_ ? dim_ - 1 : dim_; }
  /// True for the root polytope, whose points live in sum(x) = 0.
  bool sum_zero_constraint() const { return sum_zero_; }

  const std::vector<QVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const Facet& facet(FacetIndex f) const;
  std::size_t num_facets() const { return facets_.size(); }
  FacetIndex opposite(FacetIndex f) const { return facet(f).opposite; }

  /// Values lambda_F(x) = (z_F . x) / b_F.
  Rational facet_value(FacetIndex f, const QVector& x) const;

  // Family-specific index helpers. They throw Errc::BadFacet when the ball
  // is of a different family or the index is out of range.
  std::size_t polygon_half() const;  // n for a 2n-gon
  FacetIndex cube_facet(std::size_t coord, Sign s) const;
  std::size_t cube_coord(FacetIndex f) const;
  Sign cube_sign(FacetIndex f) const;
  FacetIndex subset_facet(SubsetMask mask) const;
  SubsetMask facet_mask(FacetIndex f) const;

  /// Human readable label: F3, F1+, F{1,3}.
  std::string facet_label(FacetIndex f) const;

  /// Validates the central-symmetry and facet invariants. Throws on failure.
  void check_invariants() const;

  friend UnitBall make_polygon(std::vector<QVector> ccw_vertices);
  friend UnitBall make_cube(std::size_t d);
  friend UnitBall make_cross_polytope(std::size_t d);
  friend UnitBall make_root_polytope_a(std::size_t d);
  friend UnitBall make_vrep(std::size_t dim, std::vector<QVector> vertices,
                            std::optional<std::vector<std::vector<std::size_t>>> facets);

 private:
  void link_opposites();

  Family family_ = Family::GeneralVRep;
  std::size_t dim_ = 0;
  bool sum_zero_ = false;
  std::vector<QVector> vertices_;
  std::vector<Facet> facets_;
};

/// Centrally symmetric 2n-gon, vertices listed counter-clockwise.
/// Errors: NotCentrallySymmetric, BadOrientation.
UnitBall make_polygon(std::vector<QVector> ccw_vertices);
/// [-1, 1]^d.
UnitBall make_cube(std::size_t d);
/// conv{+-e_i}.
UnitBall make_cross_polytope(std::size_t d);
/// conv{e_i - e_j : i != j} inside sum(x) = 0, in ambient R^d.
UnitBall make_root_polytope_a(std::size_t d);
/// General centrally symmetric polytope. Without a facet list, facets are
/// discovered by enumerating d-subsets of vertices on a common supporting
/// hyperplane.
UnitBall make_vrep(std::size_t dim, std::vector<QVector> vertices,
                   std::optional<std::vector<std::vector<std::size_t>>> facets = std::nullopt);

/// Affinely regular hexagon with rational vertices (1,0),(1,1),(0,1),...
UnitBall make_affine_regular_hexagon();
/// The hexagon above with v_3 and v_6 pushed off the main-diagonal
/// parallel classes.
UnitBall make_perturbed_hexagon();

/// Centrally symmetric 2n-gon close to the regular one: exact for n = 2
/// (the square conv{+-e_i}) and n = 3 (the hexagon above); otherwise the
/// vertices are rational points on the unit circle near the regular angles.
UnitBall make_regular_polygon(std::size_t n);
/// Polygon with vertices circle_point(t_k) for strictly increasing t_k in
/// (-1, 1], followed by their negatives.
UnitBall make_circle_polygon(const std::vector<Rational>& ts);
/// ((1 - t^2), 2t) / (1 + t^2), the rational point at angle 2 atan(t).
QVector circle_point(const Rational& t);

/// Specification of a ball for the dispatcher below.
struct BallSpec {
  Family family = Family::Cube;
  std::size_t dim = 0;         // unused for Polygon
  std::size_t half_sides = 0;  // n of a 2n-gon; used when vertices is empty
  std::vector<QVector> vertices;
  std::optional<std::vector<std::vector<std::size_t>>> facets;
};

UnitBall make_ball(const BallSpec& spec);

/// ||x||_P via the family closed form (facet maximum for Polygon/VRep).
/// Errors: DimMismatch; NotInHyperplane for the root polytope off sum 0.
Rational gauge(const UnitBall& ball, const QVector& x);
/// max_F (z_F . x) / b_F, independent of the family closed forms.
Rational gauge_by_facets(const UnitBall& ball, const QVector& x);

/// All facets F with x in C_F (the argmax facets). Errors: ZeroVector.
std::vector<FacetIndex> face_cone_of(const UnitBall& ball, const QVector& x);

/// z_F . a != 0 for every facet F. Errors: ZeroVector.
bool is_weak_general_position(const UnitBall& ball, const QVector& a);

/// Subset helpers shared by the subset-indexed families.
std::string subset_to_string(SubsetMask mask);
std::vector<std::size_t> subset_members(SubsetMask mask);  // 1-based

}  // namespace bisfan
