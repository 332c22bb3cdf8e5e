#include "bisfan/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bisfan/bisector.hpp"

namespace bisfan {

Sampler::Sampler(std::uint64_t seed, long range, long denominator)
    : rng_(seed), range_(range), den_(denominator) {
  if (range <= 0 || denominator <= 0) throw Error(Errc::Parse, "sampling range and denominator must be positive");
}

long Sampler::uniform(long lo, long hi) {
  // Plain modulo reduction of the raw engine output keeps draws identical
  // across standard library implementations.
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % span);
}

Rational Sampler::coordinate() { return rat(uniform(-range_, range_), den_); }

QVector Sampler::point(std::size_t d) {
  QVector v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = coordinate();
  return v;
}

QVector Sampler::sum_zero_point(std::size_t d) {
  QVector v(d);
  Rational s;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    v[i] = coordinate();
    s += v[i];
  }
  if (d > 0) v[d - 1] = -s;
  return v;
}

QVector Sampler::point_for(const UnitBall& ball) {
  while (true) {
    auto v = ball.sum_zero_constraint() ? sum_zero_point(ball.dim()) : point(ball.dim());
    if (!v.is_zero()) return v;
  }
}

QVector Sampler::generic_site(const UnitBall& ball, std::size_t max_tries) {
  for (std::size_t t = 0; t < max_tries; ++t) {
    auto v = point_for(ball);
    const auto rep = genericity(ball, v);
    const bool ok = ball.family() == Family::GeneralVRep ? rep.weak_general : rep.general == Verdict::Yes;
    if (ok) return v;
  }
  throw std::runtime_error("no generic site found within the try budget");
}

UnitBall Sampler::perturbed_polygon(std::size_t n) {
  if (n < 2) throw Error(Errc::NotCentrallySymmetric, "polygon needs 2n >= 4 vertices");
  constexpr long kDen = 10000;
  while (true) {
    std::vector<Rational> ts;
    for (std::size_t k = 0; k < n; ++k) {
      // Regular angle plus a jitter of up to 40% of the angular gap.
      const double jitter = static_cast<double>(uniform(-400, 400)) / 1000.0;
      const double theta =
          -M_PI / 2 + M_PI * (static_cast<double>(k) + 0.5 + jitter) / static_cast<double>(n);
      ts.push_back(rat(std::lround(std::tan(theta / 2) * kDen), kDen));
    }
    if (std::adjacent_find(ts.begin(), ts.end(), [](const Rational& x, const Rational& y) { return y <= x; }) ==
        ts.end())
      return make_circle_polygon(ts);
  }
}

}  // namespace bisfan
