#pragma once

// Seeded rational sampling. Every draw is a function of the seed alone.

#include <cstdint>
#include <random>

#include "bisfan/polytope.hpp"

namespace bisfan {

class Sampler {
 public:
  /// Coordinates are k / denominator with k uniform in [-range, range].
  explicit Sampler(std::uint64_t seed, long range = 1000, long denominator = 1000);

  long range() const { return range_; }
  long denominator() const { return den_; }

  Rational coordinate();
  QVector point(std::size_t d);
  /// Point with coordinates summing to zero (the last one balances the rest).
  QVector sum_zero_point(std::size_t d);
  /// Nonzero point in the ambient space of the ball.
  QVector point_for(const UnitBall& ball);
  /// Rejection sampling until the site is in general position (weak general
  /// position for GeneralVRep). Throws std::runtime_error after max_tries.
  QVector generic_site(const UnitBall& ball, std::size_t max_tries = 100000);
  /// Random centrally symmetric 2n-gon with vertices on the unit circle.
  UnitBall perturbed_polygon(std::size_t n);
  /// Integer uniform in [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 rng_;
  long range_;
  long den_;
};

}  // namespace bisfan
