#include "bisfan/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace bisfan {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Polygon: return "polygon";
    case Family::Cube: return "cube";
    case Family::CrossPolytope: return "l1";
    case Family::RootPolytopeA: return "wasserstein";
    case Family::GeneralVRep: return "vrep";
  }
  return "unknown";
}

std::vector<std::size_t> subset_members(SubsetMask mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if (mask >> i & 1U) out.push_back(i + 1);
  return out;
}

std::string subset_to_string(SubsetMask mask) {
  std::string out = "{";
  bool first = true;
  for (auto i : subset_members(mask)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

namespace {

void require_dim(std::size_t d, std::size_t lo, std::size_t hi, const char* what) {
  if (d < lo) throw Error(Errc::DimMismatch, std::string(what) + ": dimension too small");
  if (d > hi) throw Error(Errc::CapExceeded, std::string(what) + ": dimension above cap");
}

Rational cross2(const QVector& u, const QVector& v) { return u[0] * v[1] - u[1] * v[0]; }

}  // namespace

// ---------------------------------------------------------------- UnitBall

const Facet& UnitBall::facet(FacetIndex f) const {
  if (f >= facets_.size()) throw Error(Errc::BadFacet, "facet index " + std::to_string(f));
  return facets_[f];
}

Rational UnitBall::facet_value(FacetIndex f, const QVector& x) const {
  const auto& fc = facet(f);
  return dot(fc.normal, x) / fc.offset;
}

std::size_t UnitBall::polygon_half() const {
  if (family_ != Family::Polygon) throw Error(Errc::BadFacet, "not a polygon");
  return vertices_.size() / 2;
}

FacetIndex UnitBall::cube_facet(std::size_t coord, Sign s) const {
  if (family_ != Family::Cube || coord >= dim_) throw Error(Errc::BadFacet, "cube facet");
  return 2 * coord + (s == Sign::Plus ? 0 : 1);
}

std::size_t UnitBall::cube_coord(FacetIndex f) const {
  if (family_ != Family::Cube) throw Error(Errc::BadFacet, "not a cube");
  facet(f);
  return f / 2;
}

Sign UnitBall::cube_sign(FacetIndex f) const {
  if (family_ != Family::Cube) throw Error(Errc::BadFacet, "not a cube");
  facet(f);
  return f % 2 == 0 ? Sign::Plus : Sign::Minus;
}

FacetIndex UnitBall::subset_facet(SubsetMask mask) const {
  const SubsetMask full = (SubsetMask{1} << dim_) - 1;
  if (family_ == Family::CrossPolytope && mask <= full) return mask;
  if (family_ == Family::RootPolytopeA && mask != 0 && mask < full) return mask - 1;
  throw Error(Errc::BadFacet, "subset " + subset_to_string(mask) + " is not a facet label");
}

SubsetMask UnitBall::facet_mask(FacetIndex f) const {
  facet(f);
  if (family_ == Family::CrossPolytope) return static_cast<SubsetMask>(f);
  if (family_ == Family::RootPolytopeA) return static_cast<SubsetMask>(f + 1);
  throw Error(Errc::BadFacet, "family has no subset labels");
}

std::string UnitBall::facet_label(FacetIndex f) const {
  facet(f);
  switch (family_) {
    case Family::Cube:
      return "F" + std::to_string(f / 2 + 1) + (f % 2 == 0 ? "+" : "-");
    case Family::CrossPolytope:
    case Family::RootPolytopeA:
      return "F" + subset_to_string(facet_mask(f));
    case Family::Polygon:
    case Family::GeneralVRep:
      break;
  }
  return "F" + std::to_string(f + 1);
}

void UnitBall::link_opposites() {
  std::map<QVector, FacetIndex> by_normal;
  for (FacetIndex f = 0; f < facets_.size(); ++f) {
    auto key = facets_[f].normal * facets_[f].offset.inverse();
    by_normal.emplace(std::move(key), f);
  }
  for (auto& fc : facets_) {
    auto it = by_normal.find(-(fc.normal * fc.offset.inverse()));
    if (it == by_normal.end())
      throw Error(Errc::NotCentrallySymmetric, "facet without an opposite facet");
    fc.opposite = it->second;
  }
}

void UnitBall::check_invariants() const {
  std::set<QVector> verts(vertices_.begin(), vertices_.end());
  for (const auto& v : vertices_) {
    if (!verts.count(-v)) throw Error(Errc::NotCentrallySymmetric, "vertex " + v.to_string());
  }
  std::vector<bool> covered(vertices_.size(), false);
  for (FacetIndex f = 0; f < facets_.size(); ++f) {
    const auto& fc = facets_[f];
    if (fc.offset.sign() <= 0) throw std::logic_error("facet offset must be positive");
    std::size_t k = 0;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      const auto value = dot(fc.normal, vertices_[v]);
      const bool on = k < fc.vertex_indices.size() && fc.vertex_indices[k] == v;
      if (on) {
        ++k;
        covered[v] = true;
        if (value != fc.offset) throw std::logic_error("facet vertex off its hyperplane");
      } else if (value >= fc.offset) {
        throw std::logic_error("vertex outside or on a facet it does not belong to");
      }
    }
    const auto& op = facets_[fc.opposite];
    // Inside sum(x) = 0 normals only matter up to the all-ones vector.
    const QVector gap = op.normal + fc.normal;
    bool same = gap.is_zero();
    if (sum_zero_) same = std::all_of(gap.begin(), gap.end(), [&](const Rational& c) { return c == gap[0]; });
    if (op.offset != fc.offset || !same) throw std::logic_error("opposite facet mismatch");
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw std::logic_error("vertex on no facet");
}

// ---------------------------------------------------------------- factories

UnitBall make_polygon(std::vector<QVector> ccw_vertices) {
  const std::size_t m = ccw_vertices.size();
  if (m < 4 || m % 2 != 0) throw Error(Errc::NotCentrallySymmetric, "polygon needs 2n >= 4 vertices");
  for (const auto& v : ccw_vertices)
    if (v.dim() != 2) throw Error(Errc::DimMismatch, "polygon vertices must be 2-dimensional");
  const std::size_t n = m / 2;
  for (std::size_t i = 0; i < n; ++i) {
    if (ccw_vertices[i + n] != -ccw_vertices[i])
      throw Error(Errc::NotCentrallySymmetric, "v_{i+n} != -v_i at i=" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto e1 = ccw_vertices[(i + 1) % m] - ccw_vertices[i];
    const auto e2 = ccw_vertices[(i + 2) % m] - ccw_vertices[(i + 1) % m];
    if (cross2(e1, e2).sign() <= 0)
      throw Error(Errc::BadOrientation, "vertices are not strictly convex counter-clockwise");
  }

  UnitBall ball;
  ball.family_ = Family::Polygon;
  ball.dim_ = 2;
  ball.vertices_ = std::move(ccw_vertices);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = ball.vertices_[i];
    const auto& q = ball.vertices_[(i + 1) % m];
    const auto e = q - p;
    Facet fc;
    fc.normal = QVector{e[1], -e[0]};
    fc.offset = dot(fc.normal, p);
    fc.vertex_indices = {i, (i + 1) % m};
    std::sort(fc.vertex_indices.begin(), fc.vertex_indices.end());
    // Left turns alone allow star polygons; every other vertex must be
    // strictly inside this edge's supporting line.
    for (std::size_t k = 0; k < m; ++k) {
      if (k == i || k == (i + 1) % m) continue;
      if (dot(fc.normal, ball.vertices_[k]) >= fc.offset)
        throw Error(Errc::BadOrientation, "vertices do not wind once counter-clockwise");
    }
    ball.facets_.push_back(std::move(fc));
  }
  for (std::size_t i = 0; i < m; ++i) ball.facets_[i].opposite = (i + n) % m;
  return ball;
}

UnitBall make_cube(std::size_t d) {
  require_dim(d, 1, kMaxExplicitDim, "cube");
  UnitBall ball;
  ball.family_ = Family::Cube;
  ball.dim_ = d;
  const std::size_t nv = std::size_t{1} << d;
  for (std::size_t m = 0; m < nv; ++m) {
    QVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = (m >> i & 1U) ? 1 : -1;
    ball.vertices_.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (int s : {1, -1}) {
      Facet fc;
      fc.normal = QVector::unit(d, i) * Rational(s);
      fc.offset = 1;
      for (std::size_t m = 0; m < nv; ++m) {
        const bool plus = m >> i & 1U;
        if (plus == (s == 1)) fc.vertex_indices.push_back(m);
      }
      ball.facets_.push_back(std::move(fc));
    }
  }
  for (FacetIndex f = 0; f < ball.facets_.size(); ++f) ball.facets_[f].opposite = f ^ 1U;
  return ball;
}

UnitBall make_cross_polytope(std::size_t d) {
  require_dim(d, 1, kMaxExplicitDim, "cross-polytope");
  UnitBall ball;
  ball.family_ = Family::CrossPolytope;
  ball.dim_ = d;
  for (std::size_t i = 0; i < d; ++i) ball.vertices_.push_back(QVector::unit(d, i));
  for (std::size_t i = 0; i < d; ++i) ball.vertices_.push_back(-QVector::unit(d, i));
  const SubsetMask full = (SubsetMask{1} << d) - 1;
  for (SubsetMask mask = 0; mask <= full; ++mask) {
    Facet fc;
    fc.normal = QVector(d);
    fc.offset = 1;
    for (std::size_t i = 0; i < d; ++i) {
      const bool in = mask >> i & 1U;
      fc.normal[i] = in ? 1 : -1;
      fc.vertex_indices.push_back(in ? i : d + i);
    }
    std::sort(fc.vertex_indices.begin(), fc.vertex_indices.end());
    fc.opposite = full ^ mask;
    ball.facets_.push_back(std::move(fc));
  }
  return ball;
}

UnitBall make_root_polytope_a(std::size_t d) {
  require_dim(d, 2, kMaxExplicitDim, "root polytope");
  UnitBall ball;
  ball.family_ = Family::RootPolytopeA;
  ball.dim_ = d;
  ball.sum_zero_ = true;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) {
        ball.vertices_.push_back(QVector::unit(d, i) - QVector::unit(d, j));
        pairs.emplace_back(i, j);
      }
  const SubsetMask full = (SubsetMask{1} << d) - 1;
  for (SubsetMask mask = 1; mask < full; ++mask) {
    Facet fc;
    fc.normal = QVector(d);
    fc.offset = 1;
    for (std::size_t i = 0; i < d; ++i) fc.normal[i] = (mask >> i & 1U) ? 1 : 0;
    for (std::size_t v = 0; v < pairs.size(); ++v) {
      const auto [i, j] = pairs[v];
      if ((mask >> i & 1U) && !(mask >> j & 1U)) fc.vertex_indices.push_back(v);
    }
    fc.opposite = (full ^ mask) - 1;
    ball.facets_.push_back(std::move(fc));
  }
  return ball;
}

namespace {

// Facet through the given vertices with offset normalized to 1.
std::optional<Facet> facet_through(const std::vector<QVector>& vertices,
                                   const std::vector<std::size_t>& subset, std::size_t dim) {
  std::vector<QVector> rows;
  for (auto v : subset) rows.push_back(vertices[v]);
  const auto sol = solve_linear(QMatrix(rows), QVector(std::vector<Rational>(rows.size(), Rational(1))));
  if (sol.status != LinearSolution::Status::Unique) return std::nullopt;
  Facet fc;
  fc.normal = sol.x;
  fc.offset = 1;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const auto value = dot(fc.normal, vertices[v]);
    if (value > 1) return std::nullopt;
    if (value == 1) fc.vertex_indices.push_back(v);
  }
  if (fc.vertex_indices.size() < dim) return std::nullopt;
  return fc;
}

}  // namespace

UnitBall make_vrep(std::size_t dim, std::vector<QVector> vertices,
                   std::optional<std::vector<std::vector<std::size_t>>> facets) {
  if (dim < 1) throw Error(Errc::DimMismatch, "dimension must be positive");
  for (const auto& v : vertices)
    if (v.dim() != dim) throw Error(Errc::DimMismatch, "vertex dimension");
  {
    std::set<QVector> verts(vertices.begin(), vertices.end());
    if (verts.size() != vertices.size()) throw Error(Errc::Parse, "duplicate vertices");
    for (const auto& v : vertices)
      if (!verts.count(-v)) throw Error(Errc::NotCentrallySymmetric, "-" + v.to_string() + " missing");
  }
  if (rank(vertices) != dim) throw Error(Errc::DimMismatch, "vertices do not span the space");

  UnitBall ball;
  ball.family_ = Family::GeneralVRep;
  ball.dim_ = dim;
  ball.vertices_ = std::move(vertices);
  if (facets) {
    for (const auto& idx : *facets) {
      for (auto v : idx)
        if (v >= ball.vertices_.size()) throw Error(Errc::BadFacet, "facet vertex index out of range");
      auto fc = facet_through(ball.vertices_, idx, dim);
      std::vector<std::size_t> sorted(idx);
      std::sort(sorted.begin(), sorted.end());
      if (!fc || fc->vertex_indices != sorted)
        throw Error(Errc::BadFacet, "listed vertex set does not span a facet");
      ball.facets_.push_back(std::move(*fc));
    }
  } else {
    // Enumerate d-subsets; keep each supporting hyperplane once.
    std::set<QVector> seen;
    std::vector<std::size_t> pick(dim);
    std::iota(pick.begin(), pick.end(), 0);
    const std::size_t nv = ball.vertices_.size();
    while (true) {
      if (auto fc = facet_through(ball.vertices_, pick, dim); fc && seen.insert(fc->normal).second)
        ball.facets_.push_back(std::move(*fc));
      std::size_t k = dim;
      while (k > 0 && pick[k - 1] == nv - dim + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < dim; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  ball.link_opposites();
  return ball;
}

UnitBall make_affine_regular_hexagon() {
  return make_polygon({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
}

UnitBall make_perturbed_hexagon() {
  return make_polygon(
      {{1, 0}, {1, 1}, {rat(1, 5), rat(4, 5)}, {-1, 0}, {-1, -1}, {rat(-1, 5), rat(-4, 5)}});
}

QVector circle_point(const Rational& t) {
  const Rational w = (Rational(1) + t * t).inverse();
  return QVector{(Rational(1) - t * t) * w, Rational(2) * t * w};
}

UnitBall make_circle_polygon(const std::vector<Rational>& ts) {
  std::vector<QVector> verts;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (ts[k] <= -1 || ts[k] > 1 || (k > 0 && ts[k] <= ts[k - 1]))
      throw Error(Errc::BadOrientation, "circle parameters must increase inside (-1, 1]");
    verts.push_back(circle_point(ts[k]));
  }
  for (std::size_t k = 0; k < ts.size(); ++k) verts.push_back(-verts[k]);
  return make_polygon(std::move(verts));
}

UnitBall make_regular_polygon(std::size_t n) {
  if (n < 2) throw Error(Errc::NotCentrallySymmetric, "polygon needs 2n >= 4 vertices");
  if (n == 2) return make_polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  if (n == 3) return make_affine_regular_hexagon();
  constexpr long kDen = 10000;
  std::vector<Rational> ts;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = -M_PI / 2 + M_PI * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    ts.push_back(rat(std::lround(std::tan(theta / 2) * kDen), kDen));
  }
  return make_circle_polygon(ts);
}

UnitBall make_ball(const BallSpec& spec) {
  switch (spec.family) {
    case Family::Polygon:
      return spec.vertices.empty() ? make_regular_polygon(spec.half_sides) : make_polygon(spec.vertices);
    case Family::Cube: return make_cube(spec.dim);
    case Family::CrossPolytope: return make_cross_polytope(spec.dim);
    case Family::RootPolytopeA: return make_root_polytope_a(spec.dim);
    case Family::GeneralVRep: {
      const std::size_t dim = spec.dim ? spec.dim : (spec.vertices.empty() ? 0 : spec.vertices[0].dim());
      return make_vrep(dim, spec.vertices, spec.facets);
    }
  }
  throw Error(Errc::Unsupported, "unknown family");
}

// ---------------------------------------------------------------- gauge

namespace {

void check_point(const UnitBall& ball, const QVector& x) {
  if (x.dim() != ball.dim()) throw Error(Errc::DimMismatch, "point dimension");
  if (ball.sum_zero_constraint() && !x.sum().is_zero())
    throw Error(Errc::NotInHyperplane, "coordinates of " + x.to_string() + " do not sum to zero");
}

}  // namespace

Rational gauge_by_facets(const UnitBall& ball, const QVector& x) {
  check_point(ball, x);
  Rational best;
  for (FacetIndex f = 0; f < ball.num_facets(); ++f) {
    auto v = ball.facet_value(f, x);
    if (f == 0 || v > best) best = std::move(v);
  }
  return best;
}

Rational gauge(const UnitBall& ball, const QVector& x) {
  check_point(ball, x);
  switch (ball.family()) {
    case Family::Cube: {
      Rational best;
      for (const auto& c : x) best = std::max(best, c.abs());
      return best;
    }
    case Family::CrossPolytope: {
      Rational s;
      for (const auto& c : x) s += c.abs();
      return s;
    }
    case Family::RootPolytopeA: {
      Rational s;
      for (const auto& c : x) s += c.abs();
      return s / 2;
    }
    case Family::Polygon:
    case Family::GeneralVRep:
      break;
  }
  return gauge_by_facets(ball, x);
}

std::vector<FacetIndex> face_cone_of(const UnitBall& ball, const QVector& x) {
  check_point(ball, x);
  if (x.is_zero()) throw Error(Errc::ZeroVector, "face_cone_of(0)");
  std::vector<FacetIndex> out;
  Rational best;
  for (FacetIndex f = 0; f < ball.num_facets(); ++f) {
    auto v = ball.facet_value(f, x);
    if (out.empty() || v > best) {
      best = std::move(v);
      out.assign(1, f);
    } else if (v == best) {
      out.push_back(f);
    }
  }
  return out;
}

bool is_weak_general_position(const UnitBall& ball, const QVector& a) {
  if (a.dim() != ball.dim()) throw Error(Errc::DimMismatch, "point dimension");
  if (a.is_zero()) throw Error(Errc::ZeroVector, "site difference is zero");
  return std::none_of(ball.facets().begin(), ball.facets().end(),
                      [&](const Facet& fc) { return dot(fc.normal, a).is_zero(); });
}

}  // namespace bisfan
