#include "bisfan/fanlocate.hpp"

#include <algorithm>
#include <functional>

#include "bisfan/subset_sums.hpp"

namespace bisfan {

namespace {

int half_plane(const QVector& v) {
  return (v[1].sign() > 0 || (v[1].is_zero() && v[0].sign() > 0)) ? 0 : 1;
}

// u strictly before v counter-clockwise from the positive x-axis.
bool angle_less(const QVector& u, const QVector& v) {
  const int hu = half_plane(u);
  const int hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return (u[0] * v[1] - u[1] * v[0]).sign() > 0;
}

std::int8_t sign8(int s) { return static_cast<std::int8_t>(s > 0 ? 1 : (s < 0 ? -1 : 0)); }

std::vector<SubsetMask> submasks_where(SubsetMask support, const std::function<bool(SubsetMask)>& keep) {
  std::vector<SubsetMask> out;
  for (SubsetMask x = support;; x = (x - 1) & support) {
    if (keep(x)) out.push_back(x);
    if (x == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SubsetMask> WassersteinSig::positive_sums() const {
  const SubsetMask full = static_cast<SubsetMask>((std::uint64_t{1} << dim) - 1);
  std::vector<SubsetMask> out(positive_canonical);
  for (SubsetMask k = 1; k < full; k += 2)
    if (!std::binary_search(positive_canonical.begin(), positive_canonical.end(), k))
      out.push_back(full & ~k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FanRay> fan_rays_polygon(const UnitBall& ball) {
  const std::size_t m = 2 * ball.polygon_half();
  std::vector<FanRay> rays;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      auto dir = primitive_direction(ball.vertices()[i] - ball.vertices()[j]);
      const auto it = std::find_if(rays.begin(), rays.end(), [&](const FanRay& r) { return r.direction == dir; });
      if (it == rays.end()) rays.push_back({std::move(dir), i + 1, j + 1});
    }
  std::sort(rays.begin(), rays.end(),
            [](const FanRay& x, const FanRay& y) { return angle_less(x.direction, y.direction); });
  return rays;
}

WassersteinSig wasserstein_signature(const QVector& a) {
  if (!a.sum().is_zero()) throw Error(Errc::NotInHyperplane, "site does not sum to zero");
  if (a.dim() > kMaxPairEnumDim) throw Error(Errc::CapExceeded, "signature capped at d = 12");
  const SubsetSums s(a);
  WassersteinSig sig;
  sig.dim = a.dim();
  for (SubsetMask k = 1; k < s.full(); k += 2)
    if (s.sign(k) > 0) sig.positive_canonical.push_back(k);
  const SubsetMask pos = s.positive();
  const SubsetMask neg = s.negative();
  sig.heavy_positive = submasks_where(pos, [&](SubsetMask x) { return s.rank(x) > s.rank(pos & ~x); });
  sig.light_negative = submasks_where(neg, [&](SubsetMask x) { return s.rank(x) < s.rank(neg & ~x); });
  return sig;
}

Rational wasserstein_p(const QVector& a) {
  if (!a.sum().is_zero()) throw Error(Errc::NotInHyperplane, "site does not sum to zero");
  if (a.dim() > kMaxPairEnumDim) throw Error(Errc::CapExceeded, "p is capped at d = 12");
  const SubsetSums s(a);
  const SubsetMask full = s.full();
  const SubsetMask pos = s.positive();
  const SubsetMask neg = s.negative();
  mpz_class total = 0;
  for (SubsetMask i = 0; i <= full; ++i) {
    const SubsetMask c = full & ~i;
    total += std::max(s.scaled(i & pos), s.scaled(c & pos));
    total += std::min(s.scaled(i & neg), s.scaled(c & neg));
  }
  return rat(total, s.denominator());
}

FanSignature locate(const UnitBall& ball, const QVector& a) {
  if (ball.family() == Family::GeneralVRep)
    throw Error(Errc::Unsupported, "fan location needs a closed-form family");
  const auto rep = genericity(ball, a);
  if (rep.general != Verdict::Yes) {
    std::string why = rep.violations.empty() ? "not in general position" : rep.violations.front();
    throw Error(Errc::DegeneratePoint, a.to_string() + ": " + why);
  }
  switch (ball.family()) {
    case Family::Polygon: {
      const auto rays = fan_rays_polygon(ball);
      const auto hi = std::upper_bound(rays.begin(), rays.end(), a, [](const QVector& x, const FanRay& r) {
        return angle_less(x, r.direction);
      });
      const std::size_t h = hi == rays.end() ? 0 : static_cast<std::size_t>(hi - rays.begin());
      const std::size_t l = (h + rays.size() - 1) % rays.size();
      return PolygonSig{rays[l], rays[h]};
    }
    case Family::Cube: {
      CubeSig sig;
      for (std::size_t i = 0; i < a.dim(); ++i) {
        sig.signs.push_back(sign8(a[i].sign()));
        if (a[i].abs() > a[sig.dominant].abs()) sig.dominant = i;
      }
      return sig;
    }
    case Family::CrossPolytope: {
      CrossSig sig;
      for (const auto& c : a) sig.signs.push_back(sign8(c.sign()));
      const SubsetSums s(a);
      for (SubsetMask k = 1; k <= s.full(); k += 2) {
        const auto diff = s.rank(k) - s.rank(s.full() & ~k);
        sig.subset_signs.push_back(sign8(diff > 0 ? 1 : (diff < 0 ? -1 : 0)));
      }
      return sig;
    }
    case Family::RootPolytopeA:
      return wasserstein_signature(a);
    case Family::GeneralVRep:
      break;
  }
  throw Error(Errc::Unsupported, "fan location needs a closed-form family");
}

bool same_cone(const UnitBall& ball, const QVector& a, const QVector& b) {
  return locate(ball, a) == locate(ball, b);
}

}  // namespace bisfan
