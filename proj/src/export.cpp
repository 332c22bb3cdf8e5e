#include "bisfan/export.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bisfan {

namespace {

QVector cross3(const QVector& u, const QVector& v) {
  return QVector{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// a . x <= b
struct Plane {
  QVector a;
  Rational b;
  bool equation = false;
};

// Normal n with n . g >= 0 for every generator, if one side holds them all.
std::optional<QVector> supporting(const QVector& n, const std::vector<QVector>& gens) {
  bool pos = true, neg = true;
  for (const auto& g : gens) {
    const int s = dot(n, g).sign();
    pos = pos && s >= 0;
    neg = neg && s <= 0;
  }
  if (pos) return primitive_direction(n);
  if (neg) return primitive_direction(-n);
  return std::nullopt;
}

std::vector<std::size_t> cyclic_order(const std::vector<QVector>& verts, std::vector<std::size_t> idx,
                                      const QVector& outward) {
  QVector c(3);
  for (auto i : idx) c += verts[i];
  c *= rat(1, static_cast<long>(idx.size()));
  const QVector r0 = verts[idx.front()] - c;
  auto half = [&](const QVector& u) {
    const int s = dot(cross3(r0, u), outward).sign();
    return (s > 0 || (s == 0 && dot(r0, u).sign() > 0)) ? 0 : 1;
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    const QVector u = verts[x] - c;
    const QVector w = verts[y] - c;
    const int hu = half(u), hw = half(w);
    if (hu != hw) return hu < hw;
    return dot(cross3(u, w), outward).sign() > 0;
  });
  return idx;
}

}  // namespace

ConePiece cone_piece(const UnitBall& ball, FacetIndex f, FacetIndex g) {
  if (ball.dim() != 3 || ball.sum_zero_constraint())
    throw Error(Errc::DimMismatch, "cone export needs a full-dimensional 3-polytope");
  ConePiece piece;
  piece.pair = {f, g};
  piece.generators = bisection_cone_rays(ball, f, g).generators;
  const auto& gens = piece.generators;
  const std::size_t r = rank(gens);

  std::set<QVector> seen;
  auto add_half = [&](const std::optional<QVector>& n) {
    if (n && seen.insert(*n).second) piece.halfspaces.push_back(*n);
  };
  std::optional<QVector> plane_normal;
  if (r == 3) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        const auto n = cross3(gens[i], gens[j]);
        if (!n.is_zero()) add_half(supporting(n, gens));
      }
  } else if (r == 2) {
    for (std::size_t i = 0; i < gens.size() && !plane_normal; ++i)
      for (std::size_t j = i + 1; j < gens.size() && !plane_normal; ++j) {
        const auto n = cross3(gens[i], gens[j]);
        if (!n.is_zero()) plane_normal = primitive_direction(n);
      }
    piece.equations.push_back(*plane_normal);
    for (const auto& gi : gens) add_half(supporting(cross3(*plane_normal, gi), gens));
  } else {
    throw std::logic_error("bisection cone of rank below 2");
  }

  std::vector<Plane> planes;
  for (const auto& n : piece.equations) planes.push_back({n, 0, true});
  for (const auto& n : piece.halfspaces) planes.push_back({-n, 0, false});
  for (const auto& fc : ball.facets()) planes.push_back({fc.normal, fc.offset, false});

  auto inside = [&](const QVector& x) {
    for (const auto& p : planes) {
      const auto v = dot(p.a, x);
      if (p.equation ? v != p.b : v > p.b) return false;
    }
    return true;
  };

  std::set<QVector> verts;
  const std::size_t m = planes.size();
  const std::size_t neq = piece.equations.size();
  auto try_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    const auto sol = solve_linear(QMatrix({planes[i].a, planes[j].a, planes[k].a}),
                                  QVector{planes[i].b, planes[j].b, planes[k].b});
    if (sol.status == LinearSolution::Status::Unique && inside(sol.x)) verts.insert(sol.x);
  };
  if (neq == 1) {
    for (std::size_t j = 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) try_triple(0, j, k);
  } else {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k) try_triple(i, j, k);
  }
  piece.vertices.assign(verts.begin(), verts.end());

  if (neq == 1) {
    std::vector<std::size_t> all(piece.vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (all.size() >= 3) piece.faces.push_back(cyclic_order(piece.vertices, all, *plane_normal));
    return piece;
  }
  std::set<std::vector<std::size_t>> face_sets;
  for (const auto& p : planes) {
    std::vector<std::size_t> on;
    for (std::size_t v = 0; v < piece.vertices.size(); ++v)
      if (dot(p.a, piece.vertices[v]) == p.b) on.push_back(v);
    if (on.size() < 3 || !face_sets.insert(on).second) continue;
    piece.faces.push_back(cyclic_order(piece.vertices, on, p.a));
  }
  return piece;
}

std::vector<ConePiece> all_cone_pieces(const UnitBall& ball) {
  const std::size_t m = ball.num_facets();
  std::vector<ConePiece> out(m * m);
  const auto count = static_cast<long>(m * m);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    out[idx] = cone_piece(ball, idx / m, idx % m);
  }
  return out;
}

void write_off(std::ostream& os, const std::vector<ConePiece>& pieces) {
  std::size_t nv = 0, nf = 0;
  for (const auto& p : pieces) {
    nv += p.vertices.size();
    nf += p.faces.size();
  }
  os << "OFF\n" << nv << ' ' << nf << " 0\n";
  for (const auto& p : pieces)
    for (const auto& v : p.vertices) os << v[0].to_decimal(12) << ' ' << v[1].to_decimal(12) << ' ' << v[2].to_decimal(12) << '\n';
  std::size_t base = 0;
  for (const auto& p : pieces) {
    for (const auto& face : p.faces) {
      os << face.size();
      for (auto i : face) os << ' ' << base + i;
      os << '\n';
    }
    base += p.vertices.size();
  }
}

Json pieces_to_json(const UnitBall& ball, const std::vector<ConePiece>& pieces) {
  Json arr = Json::array();
  std::size_t vbase = 0, fbase = 0;
  for (const auto& p : pieces) {
    Json gens = Json::array(), verts = Json::array(), halves = Json::array(), eqs = Json::array();
    for (const auto& g : p.generators) gens.push_back(to_json(g));
    for (const auto& v : p.vertices) verts.push_back(to_json(v));
    for (const auto& h : p.halfspaces) halves.push_back(to_json(h));
    for (const auto& e : p.equations) eqs.push_back(to_json(e));
    arr.push_back({{"F", facet_to_json(ball, p.pair.f)},
                   {"G", facet_to_json(ball, p.pair.g)},
                   {"generators", gens},
                   {"halfspaces", halves},
                   {"equations", eqs},
                   {"vertices", verts},
                   {"faces", p.faces},
                   {"offVertexRange", {vbase, vbase + p.vertices.size()}},
                   {"offFaceRange", {fbase, fbase + p.faces.size()}}});
    vbase += p.vertices.size();
    fbase += p.faces.size();
  }
  Json facets = Json::array();
  for (const auto& fc : ball.facets())
    facets.push_back({{"normal", to_json(fc.normal)}, {"offset", to_json(fc.offset)}, {"vertices", fc.vertex_indices}});
  return {{"dim", 3}, {"facets", facets}, {"pieces", arr}};
}

}  // namespace bisfan
