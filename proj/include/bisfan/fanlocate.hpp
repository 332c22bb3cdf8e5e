#pragma once

// Maximal cones of the bisection fan for the four closed-form families.

#include <cstdint>
#include <variant>
#include <vector>

#include "bisfan/bisector.hpp"

namespace bisfan {

/// Fan ray of a polygon: primitive direction of v_i - v_j, labelled by the
/// lexicographically smallest 1-based (i, j) producing it.
struct FanRay {
  QVector direction;
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const FanRay&, const FanRay&) = default;
};

struct PolygonSig {
  FanRay lo;  // last ray at or before the point, counter-clockwise
  FanRay hi;  // first ray after it
  friend bool operator==(const PolygonSig&, const PolygonSig&) = default;
};

struct CubeSig {
  std::vector<std::int8_t> signs;
  std::size_t dominant = 0;  // 0-based coordinate with maximal |a_i|
  friend bool operator==(const CubeSig&, const CubeSig&) = default;
};

struct CrossSig {
  std::vector<std::int8_t> signs;
  /// sign of a(I) - a(I^c) for every I containing element 1, in mask order.
  std::vector<std::int8_t> subset_signs;
  friend bool operator==(const CrossSig&, const CrossSig&) = default;
};

struct WassersteinSig {
  std::size_t dim = 0;
  /// Subsets containing element 1 with positive sum. The rest of S_a^+ is
  /// the complements of the subsets containing 1 with negative sum.
  std::vector<SubsetMask> positive_canonical;
  std::vector<SubsetMask> heavy_positive;  // X in I^+ with a(X) > a(I^+ \ X)
  std::vector<SubsetMask> light_negative;  // X in I^- with a(X) < a(I^- \ X)

  /// The full S_a^+ (proper nonempty subsets with positive sum), sorted.
  std::vector<SubsetMask> positive_sums() const;
  friend bool operator==(const WassersteinSig&, const WassersteinSig&) = default;
};

using FanSignature = std::variant<PolygonSig, CubeSig, CrossSig, WassersteinSig>;

/// Signature of the open fan cone containing a.
/// Errors: ZeroSite; DegeneratePoint when a is not in general position;
/// Unsupported for GeneralVRep.
FanSignature locate(const UnitBall& ball, const QVector& a);

bool same_cone(const UnitBall& ball, const QVector& a, const QVector& b);

/// Distinct fan ray directions of a polygon, counter-clockwise from the
/// positive x-axis.
std::vector<FanRay> fan_rays_polygon(const UnitBall& ball);

/// p(a) = sum over I of max(a(I n I+), a(I^c n I+)) + min(a(I n I-), a(I^c n I-)).
/// Errors: NotInHyperplane, CapExceeded above d = 12.
Rational wasserstein_p(const QVector& a);

/// D(a) without the genericity check.
WassersteinSig wasserstein_signature(const QVector& a);

}  // namespace bisfan
