#include "doctest.h"

#include "bisfan/lp.hpp"
#include "support/gen.hpp"

using namespace bisfan;

namespace {

bool satisfies(const LinearSystem& sys, const QVector& x) {
  for (const auto& c : sys.constraints) {
    const auto v = dot(c.coeffs, x);
    if (c.relation == Relation::LE && v > c.rhs) return false;
    if (c.relation == Relation::GE && v < c.rhs) return false;
    if (c.relation == Relation::EQ && v != c.rhs) return false;
  }
  return true;
}

// Brute force: a bounded polyhedron is nonempty iff some choice of dim
// constraints taken with equality yields a point satisfying the rest.
bool feasible_by_vertices(const LinearSystem& sys) {
  const std::size_t m = sys.constraints.size();
  const std::size_t d = sys.dim;
  std::vector<std::size_t> pick(d);
  bool found = false;
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (found) return;
    if (depth == d) {
      std::vector<QVector> rows;
      QVector rhs(d);
      for (std::size_t k = 0; k < d; ++k) {
        rows.push_back(sys.constraints[pick[k]].coeffs);
        rhs[k] = sys.constraints[pick[k]].rhs;
      }
      const auto sol = solve_linear(QMatrix(rows), rhs);
      if (sol.status == LinearSolution::Status::Unique && satisfies(sys, sol.x)) found = true;
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return found;
}

LinearSystem random_boxed_system(std::mt19937_64& rng, std::size_t d) {
  LinearSystem sys;
  sys.dim = d;
  for (std::size_t i = 0; i < d; ++i) {
    sys.add(QVector::unit(d, i), Relation::LE, 10);
    sys.add(QVector::unit(d, i), Relation::GE, -10);
  }
  const long rows = gen::int_in(rng, 1, 5);
  for (long r = 0; r < rows; ++r) {
    const long kind = gen::int_in(rng, 0, 6);
    const Relation rel = kind == 0 ? Relation::EQ : (kind % 2 ? Relation::LE : Relation::GE);
    sys.add(gen::vec(rng, d, 5, 3), rel, gen::small_rational(rng, 12, 3));
  }
  return sys;
}

}  // namespace

TEST_CASE("cone membership examples") {
  const std::vector<QVector> gens{QVector{1, 0}, QVector{0, 1}};
  CHECK(cone_member_oracle(gens, QVector{2, 3}));
  CHECK_FALSE(cone_member_oracle(gens, QVector{-1, 0}));
  CHECK(cone_member_oracle(gens, QVector{0, 0}));
  CHECK(cone_member_oracle({QVector{1, 1}, QVector{-1, -1}}, QVector{-3, -3}));
  CHECK_FALSE(cone_member_oracle({}, QVector{1, 0}));
}

TEST_CASE("small feasibility examples") {
  LinearSystem sys;
  sys.dim = 2;
  sys.add(QVector{1, 1}, Relation::LE, 1);
  sys.add(QVector{1, 1}, Relation::GE, 2);
  CHECK_FALSE(feasible(sys).feasible);

  LinearSystem eq;
  eq.dim = 3;
  eq.add(QVector{1, 2, 3}, Relation::EQ, 6);
  eq.add(QVector{0, 1, -1}, Relation::EQ, rat(1, 2));
  const auto r = feasible(eq);
  REQUIRE(r.feasible);
  REQUIRE(r.witness);
  CHECK(satisfies(eq, *r.witness));

  LinearSystem empty;
  empty.dim = 2;
  CHECK(feasible(empty).feasible);
}

TEST_CASE("strict rows") {
  LinearSystem sys;
  sys.dim = 1;
  sys.add(QVector{1}, Relation::GE, 0);
  sys.add(QVector{1}, Relation::LE, 0);
  CHECK(feasible_strict(sys, {false, false}).feasible);
  CHECK_FALSE(feasible_strict(sys, {true, false}).feasible);

  LinearSystem open;
  open.dim = 2;
  open.add(QVector{1, 0}, Relation::GE, 1);
  open.add(QVector{1, 1}, Relation::LE, 4);
  open.add(QVector{0, 1}, Relation::GE, 2);
  const auto r = feasible_strict(open, {true, true, true});
  REQUIRE(r.feasible);
  const auto& x = *r.witness;
  CHECK(x[0] > Rational(1));
  CHECK(x[1] > Rational(2));
  CHECK(x[0] + x[1] < Rational(4));

  // The closed triangle shrinks to the single point (1,2).
  LinearSystem tight = open;
  tight.constraints[1].rhs = 3;
  CHECK(feasible(tight).feasible);
  CHECK(feasible_strict(tight, {false, false, false}).feasible);
  CHECK_FALSE(feasible_strict(tight, {true, false, false}).feasible);
  CHECK_THROWS_AS(feasible_strict(tight, {true}), Error);
}

TEST_CASE("simplex verdict matches vertex enumeration") {
  std::mt19937_64 rng(99);
  int feasible_count = 0;
  for (int k = 0; k < 400; ++k) {
    const std::size_t d = static_cast<std::size_t>(gen::int_in(rng, 1, 3));
    const auto sys = random_boxed_system(rng, d);
    const auto r = feasible(sys);
    CHECK(r.feasible == feasible_by_vertices(sys));
    if (r.feasible) {
      ++feasible_count;
      REQUIRE(r.witness);
      CHECK(satisfies(sys, *r.witness));
    }
  }
  // Both verdicts must be exercised.
  CHECK(feasible_count > 40);
  CHECK(feasible_count < 360);
}

TEST_CASE("cell oracle under translation and swap") {
  std::mt19937_64 rng(5);
  for (const auto& ball : gen::small_balls()) {
    for (int k = 0; k < 3; ++k) {
      const auto a = gen::point_for(rng, ball);
      for (FacetIndex f = 0; f < ball.num_facets(); ++f)
        for (FacetIndex g = 0; g < ball.num_facets(); ++g)
          CHECK(cell_nonempty_oracle(ball, f, g, a) == cell_nonempty_oracle(ball, g, f, -a));
    }
  }
}

TEST_CASE("cell system errors") {
  const auto c = make_cube(2);
  CHECK_THROWS_AS(cell_system(c, 0, 9, QVector{1, 2}), Error);
  CHECK_THROWS_AS(cell_system(c, 0, 1, QVector{1, 2, 3}), Error);
}
