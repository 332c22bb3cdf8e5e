#include "bisfan/biscone.hpp"

#include <set>

namespace bisfan {

namespace {

Rational cross2(const QVector& u, const QVector& v) { return u[0] * v[1] - u[1] * v[0]; }

void require_dim(const QVector& x, std::size_t d) {
  if (x.dim() != d) throw Error(Errc::DimMismatch, "point dimension");
}

Rational subset_sum(const QVector& a, SubsetMask mask) {
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (mask >> i & 1U) s += a[i];
  return s;
}

// Sums of the positive and of the negative entries of a restricted to mask:
// the extreme values of a(K) over K inside mask.
std::pair<Rational, Rational> signed_sums(const QVector& a, SubsetMask mask) {
  Rational pos, neg;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!(mask >> i & 1U)) continue;
    if (a[i].sign() > 0) pos += a[i];
    else neg += a[i];
  }
  return {pos, neg};
}

bool all_sign(const QVector& a, SubsetMask mask, int want) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!(mask >> i & 1U)) continue;
    if (a[i].sign() * want < 0) return false;
  }
  return true;
}

SubsetMask full_mask(std::size_t d) { return static_cast<SubsetMask>((std::uint64_t{1} << d) - 1); }

void check_mask_dim(std::size_t d) {
  if (d > kMaxMaskDim) throw Error(Errc::CapExceeded, "dimension above subset cap");
}

}  // namespace

bool Cone::contains(const QVector& x) const {
  require_dim(x, dim);
  if (!generators.empty() || !halfspaces) return cone_member_oracle(generators, x);
  for (const auto& h : *halfspaces) {
    const auto v = dot(h.coeffs, x);
    if (h.relation == Relation::EQ ? !v.is_zero() : v.sign() < 0) return false;
  }
  return true;
}

Cone bisection_cone_rays(const UnitBall& ball, FacetIndex f, FacetIndex g) {
  const auto& ff = ball.facet(f);
  const auto& gg = ball.facet(g);
  Cone cone;
  cone.dim = ball.dim();
  std::set<QVector> seen;
  for (auto vi : ff.vertex_indices) {
    for (auto ui : gg.vertex_indices) {
      QVector diff = ball.vertices()[vi] - ball.vertices()[ui];
      if (diff.is_zero()) continue;
      if (seen.insert(primitive_direction(diff)).second) cone.generators.push_back(std::move(diff));
    }
  }
  return cone;
}

bool homog_membership(const UnitBall& ball, FacetIndex f, FacetIndex g, const QVector& x) {
  require_dim(x, ball.dim());
  const auto& fv = ball.facet(f).vertex_indices;
  const auto& gv = ball.facet(g).vertex_indices;
  const std::size_t n = fv.size() + gv.size();
  // sum mu (v, 1) + sum nu (-u, -1) = (x, 0), mu, nu >= 0.
  LinearSystem sys;
  sys.dim = n;
  for (std::size_t c = 0; c <= ball.dim(); ++c) {
    QVector row(n);
    for (std::size_t k = 0; k < fv.size(); ++k)
      row[k] = c < ball.dim() ? ball.vertices()[fv[k]][c] : Rational(1);
    for (std::size_t k = 0; k < gv.size(); ++k)
      row[fv.size() + k] = c < ball.dim() ? -ball.vertices()[gv[k]][c] : Rational(-1);
    sys.add(std::move(row), Relation::EQ, c < ball.dim() ? x[c] : Rational(0));
  }
  for (std::size_t k = 0; k < n; ++k) sys.add(QVector::unit(n, k), Relation::GE, 0);
  return feasible(sys).feasible;
}

bool polygon_cone_contains(const UnitBall& ball, FacetIndex i, FacetIndex j, const QVector& x) {
  const std::size_t m = 2 * ball.polygon_half();
  ball.facet(i);
  ball.facet(j);
  require_dim(x, 2);
  const auto& v = ball.vertices();
  if (i == j) return cross2(v[(i + 1) % m] - v[i], x).is_zero();
  QVector u = v[i] - v[j];
  QVector w = v[(i + 1) % m] - v[(j + 1) % m];
  auto turn = cross2(u, w).sign();
  if (turn < 0) {
    std::swap(u, w);
    turn = -turn;
  }
  if (turn == 0) {
    // Degenerate pair of generators; not reached for strictly convex input.
    if (!cross2(u, x).is_zero()) return false;
    return dot(u, w).sign() < 0 || dot(u, x).sign() >= 0;
  }
  return cross2(u, x).sign() >= 0 && cross2(x, w).sign() >= 0;
}

bool polygon_cone_interior(const UnitBall& ball, FacetIndex i, FacetIndex j, const QVector& x) {
  const std::size_t m = 2 * ball.polygon_half();
  ball.facet(i);
  ball.facet(j);
  require_dim(x, 2);
  if (i == j) return false;
  const auto& v = ball.vertices();
  QVector u = v[i] - v[j];
  QVector w = v[(i + 1) % m] - v[(j + 1) % m];
  if (cross2(u, w).sign() < 0) std::swap(u, w);
  return cross2(u, x).sign() > 0 && cross2(x, w).sign() > 0;
}

bool cube_cone_contains(std::size_t d, std::size_t i, Sign s1, std::size_t j, Sign s2, const QVector& a) {
  require_dim(a, d);
  if (i >= d || j >= d) throw Error(Errc::BadFacet, "cube coordinate out of range");
  const int g1 = s1 == Sign::Plus ? 1 : -1;
  const int g2 = s2 == Sign::Plus ? 1 : -1;
  if (i != j) return a[i].sign() * g1 >= 0 && a[j].sign() * g2 <= 0;
  if (s1 == s2) return a[i].is_zero();
  // C_{F_i^s1}: s1 * a_i >= |a_k| for all k.
  const Rational lead = g1 > 0 ? a[i] : -a[i];
  for (std::size_t k = 0; k < d; ++k)
    if (lead < a[k].abs()) return false;
  return true;
}

bool cross_cone_contains(std::size_t d, SubsetMask I, SubsetMask J, const QVector& a) {
  check_mask_dim(d);
  require_dim(a, d);
  const SubsetMask full = full_mask(d);
  if ((I | J) & ~full) throw Error(Errc::BadFacet, "subset outside [d]");
  if (!all_sign(a, I & ~J, 1)) return false;
  if (!all_sign(a, J & ~I, -1)) return false;
  if (subset_sum(a, J) > subset_sum(a, full & ~J)) return false;
  return subset_sum(a, full & ~I) <= subset_sum(a, I);
}

bool wasserstein_cone_contains(std::size_t d, SubsetMask I, SubsetMask J, const QVector& a) {
  check_mask_dim(d);
  require_dim(a, d);
  const SubsetMask full = full_mask(d);
  for (SubsetMask s : {I, J})
    if (s == 0 || (s & full) == full || (s & ~full))
      throw Error(Errc::BadFacet, "facet subset must be proper and nonempty");
  if (!a.sum().is_zero()) throw Error(Errc::NotInHyperplane, "site does not sum to zero");

  const SubsetMask both = I & J;
  const SubsetMask neither = full & ~(I | J);
  if (!all_sign(a, I & ~J, 1)) return false;
  if (!all_sign(a, J & ~I, -1)) return false;
  if (both != 0 && neither != 0) return subset_sum(a, I).sign() >= 0 && subset_sum(a, J).sign() <= 0;
  if (both == 0 && neither != 0) {
    const auto [pos, neg] = signed_sums(a, neither);
    return subset_sum(a, J) <= neg && pos <= subset_sum(a, I);
  }
  if (both != 0 && neither == 0) {
    const auto [pos, neg] = signed_sums(a, both);
    return pos <= subset_sum(a, full & ~J) && subset_sum(a, full & ~I) <= neg;
  }
  return true;
}

bool cone_contains(const UnitBall& ball, FacetIndex f, FacetIndex g, const QVector& x) {
  ball.facet(f);
  ball.facet(g);
  switch (ball.family()) {
    case Family::Polygon:
      return polygon_cone_contains(ball, f, g, x);
    case Family::Cube:
      return cube_cone_contains(ball.dim(), ball.cube_coord(f), ball.cube_sign(f), ball.cube_coord(g),
                                ball.cube_sign(g), x);
    case Family::CrossPolytope:
      return cross_cone_contains(ball.dim(), ball.facet_mask(f), ball.facet_mask(g), x);
    case Family::RootPolytopeA:
      return wasserstein_cone_contains(ball.dim(), ball.facet_mask(f), ball.facet_mask(g), x);
    case Family::GeneralVRep:
      break;
  }
  require_dim(x, ball.dim());
  return cone_member_oracle(bisection_cone_rays(ball, f, g).generators, x);
}

Cone apply_linear_iso(const Cone& cone, const QMatrix& m) {
  if (m.rows() != cone.dim || m.cols() != cone.dim) throw Error(Errc::DimMismatch, "map dimension");
  if (rank(m) != cone.dim) throw Error(Errc::SingularMap, "linear map is not invertible");
  Cone out;
  out.dim = cone.dim;
  for (const auto& g : cone.generators) out.generators.push_back(m * g);
  if (cone.halfspaces) {
    const QMatrix mt = m.transpose();
    std::vector<LinearConstraint> rows;
    for (const auto& h : *cone.halfspaces) {
      auto sol = solve_linear(mt, h.coeffs);
      rows.push_back({std::move(sol.x), h.relation, h.rhs});
    }
    out.halfspaces = std::move(rows);
  }
  return out;
}

}  // namespace bisfan
