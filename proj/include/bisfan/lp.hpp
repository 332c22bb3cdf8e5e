#pragma once

// Exact rational LP feasibility (phase-one simplex, Bland's rule) and the
// oracles built on it.

#include <optional>
#include <vector>

#include "bisfan/exact.hpp"
#include "bisfan/polytope.hpp"

namespace bisfan {

enum class Relation { LE, EQ, GE };

struct LinearConstraint {
  QVector coeffs;
  Relation relation = Relation::LE;
  Rational rhs;
};

struct LinearSystem {
  std::size_t dim = 0;
  std::vector<LinearConstraint> constraints;

  void add(QVector coeffs, Relation rel, Rational rhs);
};

struct FeasibilityResult {
  bool feasible = false;
  std::optional<QVector> witness;
};

/// Decides whether the system has a solution. Variables are free. A returned
/// witness has been checked exactly against every constraint.
FeasibilityResult feasible(const LinearSystem& sys);

/// Like feasible(), but rows with strict[k] set must hold strictly. Only GE
/// and LE rows may be strict.
FeasibilityResult feasible_strict(const LinearSystem& sys, const std::vector<bool>& strict);

/// The system for bis_{F,G}(0, a): x in C_F, x - a in C_G and
/// lambda_F(x) = lambda_G(x - a). Errors: BadFacet, DimMismatch.
LinearSystem cell_system(const UnitBall& ball, FacetIndex f, FacetIndex g, const QVector& a);

/// bis_{F,G}(0, a) is nonempty, decided by LP.
bool cell_nonempty_oracle(const UnitBall& ball, FacetIndex f, FacetIndex g, const QVector& a);

/// bis_{F,G}(0, a) meets int C_F and a + int C_G (relative to sum(x) = 0 for
/// the root polytope). For a in weak general position this is exactly the
/// cell being (d-1)-dimensional.
bool cell_interior_oracle(const UnitBall& ball, FacetIndex f, FacetIndex g, const QVector& a);

/// x in cone(generators), decided by LP over nonnegative multipliers.
bool cone_member_oracle(const std::vector<QVector>& generators, const QVector& x);

}  // namespace bisfan
