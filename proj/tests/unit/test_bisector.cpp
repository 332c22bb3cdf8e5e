#include "doctest.h"

#include <set>

#include "bisfan/bisector.hpp"
#include "bisfan/sampling.hpp"
#include "support/gen.hpp"

using namespace bisfan;

namespace {

std::set<std::string> labels(const UnitBall& ball, const CellSet& cells) {
  std::set<std::string> out;
  for (const auto& p : cells.pairs()) out.insert(pair_label(ball, p));
  return out;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::Parse;
}

}  // namespace

// Goldens frozen from tests/oracle/derive_goldens.py (scipy LP and brute force).
TEST_CASE("frozen cell sets") {
  const auto c3 = make_cube(3);
  CHECK(labels(c3, enumerate_cells(c3, QVector{5, 2, -1})) ==
        std::set<std::string>{"(F1+,F1-)", "(F1+,F2-)", "(F1+,F3+)", "(F2+,F1-)", "(F2+,F3+)", "(F3-,F1-)",
                              "(F3-,F2-)"});
  const auto x2 = make_cross_polytope(2);
  CHECK(labels(x2, enumerate_cells(x2, QVector{3, 1})) ==
        std::set<std::string>{"(F{1},F{})", "(F{1,2},F{})", "(F{1,2},F{2})"});
  const auto x3 = make_cross_polytope(3);
  CHECK(labels(x3, enumerate_cells(x3, QVector{5, 1, -2})) ==
        std::set<std::string>{"(F{1},F{})", "(F{1},F{3})", "(F{1,2},F{})", "(F{1,2},F{2})", "(F{1,2},F{3})",
                              "(F{1,2},F{2,3})", "(F{1,3},F{3})", "(F{1,2,3},F{3})", "(F{1,2,3},F{2,3})"});
  CHECK(cell_count(make_cross_polytope(4), QVector{7, -3, 2, 5}) == 39);
  const auto w3 = make_root_polytope_a(3);
  CHECK(labels(w3, enumerate_cells(w3, QVector{2, -3, 1})) ==
        std::set<std::string>{"(F{1},F{2})", "(F{1},F{1,2})", "(F{3},F{2,3})", "(F{1,3},F{2})",
                              "(F{1,3},F{2,3})"});
  CHECK(cell_count(make_root_polytope_a(4), QVector{5, -2, -4, 1}) == 23);
  CHECK(cell_count(make_root_polytope_a(5), QVector{7, -3, -5, 2, -1}) == 85);
}

TEST_CASE("enumeration examples") {
  CHECK(cell_count(make_affine_regular_hexagon(), QVector{3, 1}) == 5);
  CHECK(cell_count(make_cube(4), QVector{7, -3, 2, 5}) == 13);
  CHECK(cell_count(make_cross_polytope(4), QVector{7, -3, 2, 5}) >= 4);
  // a = (1,1) is parallel to the facet with normal (1,-1).
  const auto x2 = make_cross_polytope(2);
  const auto cells = enumerate_cells(x2, QVector{1, 1});
  bool has_diagonal = false;
  for (const auto& p : cells.pairs())
    if (p.f == p.g && dot(x2.facet(p.f).normal, QVector{1, 1}).is_zero()) has_diagonal = true;
  CHECK(has_diagonal);
  CHECK(code_of([] { enumerate_cells(make_cube(2), QVector{0, 0}); }) == Errc::ZeroSite);
  CHECK(code_of([] { enumerate_cells(make_root_polytope_a(3), QVector{1, 1, 0}); }) == Errc::NotInHyperplane);
  CHECK(code_of([] { enumerate_cells(make_cube(3), QVector{1, 1}); }) == Errc::DimMismatch);
  CHECK(code_of([] { equivalent(make_cube(2), QVector{1, 2}, QVector{0, 0}); }) == Errc::ZeroSite);
}

TEST_CASE("equivalence examples") {
  const auto x2 = make_cross_polytope(2);
  CHECK(equivalent(x2, QVector{3, 1}, QVector{3, 1}));
  CHECK(equivalent(x2, QVector{3, 1}, QVector{6, 2}));
  CHECK_FALSE(equivalent(x2, QVector{3, 1}, QVector{1, 3}));
}

TEST_CASE("genericity examples") {
  const auto x3 = make_cross_polytope(3);
  const auto tie = genericity(x3, QVector{3, 1, -2});
  CHECK(tie.general == Verdict::No);
  REQUIRE_FALSE(tie.violations.empty());
  CHECK(std::find(tie.violations.begin(), tie.violations.end(), "a({2}) = a({1,3}) = 1") != tie.violations.end());
  CHECK(genericity(x3, QVector{5, 1, -2}).general == Verdict::Yes);
  CHECK(genericity(make_root_polytope_a(3), QVector{2, -3, 1}).general == Verdict::Yes);
  CHECK(genericity(make_cube(3), QVector{5, 5, 1}).general == Verdict::No);
  CHECK(genericity(make_cube(3), QVector{5, 2, -2}).general == Verdict::Yes);
  const auto weak = genericity(make_cube(3), QVector{0, 1, 2});
  CHECK_FALSE(weak.weak_general);
  CHECK(weak.general == Verdict::No);
  CHECK(genericity(make_affine_regular_hexagon(), QVector{1, 1}).general == Verdict::No);
  const auto oct = make_vrep(3, {QVector{1, 0, 0}, QVector{-1, 0, 0}, QVector{0, 1, 0}, QVector{0, -1, 0},
                                 QVector{0, 0, 1}, QVector{0, 0, -1}});
  CHECK(genericity(oct, QVector{5, 1, -2}).general == Verdict::Unknown);
}

TEST_CASE("closed form enumeration equals the LP enumeration") {
  Sampler s(77, 30, 7);
  std::vector<UnitBall> balls;
  for (std::size_t n = 2; n <= 6; ++n) balls.push_back(make_regular_polygon(n));
  balls.push_back(make_perturbed_hexagon());
  balls.push_back(s.perturbed_polygon(5));
  for (std::size_t d = 2; d <= 4; ++d) {
    balls.push_back(make_cube(d));
    balls.push_back(make_cross_polytope(d));
  }
  for (std::size_t d = 3; d <= 5; ++d) balls.push_back(make_root_polytope_a(d));
  for (const auto& ball : balls) {
    const int sites = ball.family() == Family::RootPolytopeA && ball.dim() == 5 ? 1 : 3;
    for (int k = 0; k < sites; ++k) {
      // Alternate generic and arbitrary (often degenerate) sites.
      const auto a = k % 2 ? s.point_for(ball) : s.generic_site(ball);
      const auto closed = enumerate_cells(ball, a);
      CHECK(closed == enumerate_cells_lp(ball, a));
      CHECK(closed == enumerate_cells_reference(ball, a));
    }
  }
}

TEST_CASE("general position bisectors are pure") {
  Sampler s(91);
  std::vector<UnitBall> balls{make_affine_regular_hexagon(), make_perturbed_hexagon(), make_cube(3),
                              make_cross_polytope(3), make_root_polytope_a(4)};
  for (const auto& ball : balls) {
    for (int k = 0; k < 4; ++k) {
      const auto a = s.generic_site(ball);
      const auto cells = enumerate_cells(ball, a);
      for (const auto& p : cells.pairs()) {
        CHECK(p.f != p.g);
        CHECK(cell_interior_oracle(ball, p.f, p.g, a));
      }
    }
  }
}

TEST_CASE("scale invariance and swap") {
  std::mt19937_64 rng(13);
  Sampler s(13);
  for (const auto& ball : gen::small_balls()) {
    for (int k = 0; k < 10; ++k) {
      const auto a = s.point_for(ball);
      const auto t = gen::positive_rational(rng, 50, 7);
      CHECK(equivalent(ball, a, a * t));
      CHECK(enumerate_cells(ball, -a) == enumerate_cells(ball, a).swapped());
    }
  }
}

TEST_CASE("separated sites are not equivalent") {
  Sampler s(29);
  int separated = 0;
  for (const auto& ball : gen::small_balls()) {
    for (int k = 0; k < 40; ++k) {
      const auto a = s.generic_site(ball);
      const auto b = s.generic_site(ball);
      bool apart = face_cone_of(ball, a) != face_cone_of(ball, b);
      for (const auto& f : ball.facets())
        apart = apart || dot(f.normal, a).sign() * dot(f.normal, b).sign() < 0;
      if (!apart) continue;
      ++separated;
      CHECK_FALSE(equivalent(ball, a, b));
    }
  }
  CHECK(separated > 100);
}

TEST_CASE("cell set helpers") {
  const CellSet cells({FacetPair{2, 1}, FacetPair{0, 3}, FacetPair{2, 1}});
  CHECK(cells.size() == 2);
  CHECK(cells.contains(FacetPair{0, 3}));
  CHECK_FALSE(cells.contains(FacetPair{3, 0}));
  CHECK(cells.swapped().contains(FacetPair{3, 0}));
  CHECK(cells.swapped().swapped() == cells);
  CHECK(code_of([] { enumerate_cells(make_cross_polytope(13), QVector::unit(13, 0)); }) == Errc::CapExceeded);
}
