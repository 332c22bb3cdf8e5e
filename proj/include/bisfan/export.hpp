#pragma once

// Pieces B_{F,G} n P of the bisection cones of a 3-polytope, with OFF and
// JSON writers.

#include <ostream>
#include <vector>

#include "bisfan/biscone.hpp"
#include "bisfan/io.hpp"

namespace bisfan {

struct ConePiece {
  FacetPair pair;
  std::vector<QVector> generators;
  /// Inward halfspace normals n (n . x >= 0) and plane normals (n . x = 0).
  std::vector<QVector> halfspaces;
  std::vector<QVector> equations;
  /// Vertices of B_{F,G} n P, sorted.
  std::vector<QVector> vertices;
  /// Vertex cycles, counter-clockwise seen from outside.
  std::vector<std::vector<std::size_t>> faces;
};

/// Errors: DimMismatch unless the ball is 3-dimensional.
ConePiece cone_piece(const UnitBall& ball, FacetIndex f, FacetIndex g);
std::vector<ConePiece> all_cone_pieces(const UnitBall& ball);

/// One OFF mesh holding every piece; vertices use 12 significant digits.
void write_off(std::ostream& os, const std::vector<ConePiece>& pieces);
/// Exact sidecar: per piece the facet pair, generators, vertices and the
/// vertex and face ranges inside the OFF mesh.
Json pieces_to_json(const UnitBall& ball, const std::vector<ConePiece>& pieces);

}  // namespace bisfan
