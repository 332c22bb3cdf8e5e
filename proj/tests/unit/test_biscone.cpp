#include "doctest.h"

#include "bisfan/biscone.hpp"
#include "bisfan/sampling.hpp"
#include "support/gen.hpp"

using namespace bisfan;

namespace {

constexpr SubsetMask S(std::initializer_list<int> members) {
  SubsetMask m = 0;
  for (int i : members) m |= SubsetMask{1} << (i - 1);
  return m;
}

Rational det2(const QVector& u, const QVector& v) { return u[0] * v[1] - u[1] * v[0]; }

}  // namespace

TEST_CASE("bisection cone rays of the square") {
  const auto sq = make_regular_polygon(2);
  REQUIRE(sq.vertices()[0] == QVector{1, 0});
  const auto cone = bisection_cone_rays(sq, 0, 2);
  CHECK(std::find(cone.generators.begin(), cone.generators.end(), QVector{2, 0}) != cone.generators.end());
  CHECK(std::find(cone.generators.begin(), cone.generators.end(), QVector{0, 2}) != cone.generators.end());
  for (const auto& g : cone.generators) CHECK_FALSE(g.is_zero());
  CHECK(polygon_cone_contains(sq, 0, 2, QVector{3, 1}));
  CHECK_FALSE(polygon_cone_contains(sq, 0, 2, QVector{-1, -1}));
  // B_{i,i} is the line through v_{i+1} - v_i.
  for (long t : {-3L, 0L, 2L}) CHECK(polygon_cone_contains(sq, 1, 1, QVector{-t, -t}));
  CHECK_FALSE(polygon_cone_contains(sq, 1, 1, QVector{1, 0}));
}

TEST_CASE("cube closed form examples") {
  CHECK(cube_cone_contains(3, 0, Sign::Plus, 1, Sign::Minus, QVector{2, 1, -1}));
  CHECK(cube_cone_contains(3, 0, Sign::Plus, 0, Sign::Minus, QVector{3, 1, -1}));
  CHECK_FALSE(cube_cone_contains(3, 0, Sign::Plus, 0, Sign::Minus, QVector{3, 4, -1}));
  CHECK_FALSE(cube_cone_contains(3, 0, Sign::Plus, 0, Sign::Plus, QVector{1, 0, 0}));
  CHECK(cube_cone_contains(3, 0, Sign::Plus, 0, Sign::Plus, QVector{0, 5, -7}));
  const auto c = make_cube(3);
  CHECK(cell_nonempty_oracle(c, c.cube_facet(0, Sign::Plus), c.cube_facet(0, Sign::Minus), QVector{3, 1, -1}));
}

TEST_CASE("cross-polytope closed form examples") {
  CHECK(cross_cone_contains(3, S({1}), S({3}), QVector{5, 1, -2}));
  CHECK_FALSE(cross_cone_contains(3, S({1, 2}), S({1, 2}), QVector{5, 1, -2}));
  CHECK(cross_cone_contains(3, S({1, 2, 3}), 0, QVector{1, 2, 0}));
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    const auto a = gen::vec(rng, 3, 3, 1);
    const auto I = static_cast<SubsetMask>(gen::int_in(rng, 0, 7));
    const auto J = static_cast<SubsetMask>(gen::int_in(rng, 0, 7));
    CHECK(cross_cone_contains(3, I, J, a) == cross_cone_contains(3, J, I, -a));
  }
}

TEST_CASE("wasserstein closed form examples") {
  CHECK(wasserstein_cone_contains(3, S({1}), S({2}), QVector{2, -3, 1}));
  CHECK_FALSE(wasserstein_cone_contains(3, S({2}), S({2}), QVector{2, -3, 1}));
  // B_{I, I^c} = C_I on the sign orthant of I.
  CHECK(wasserstein_cone_contains(4, S({1, 3}), S({2, 4}), QVector{3, -1, 2, -4}));
  CHECK_THROWS_AS(wasserstein_cone_contains(3, S({1}), S({2}), QVector{1, 1, 1}), Error);
  CHECK_THROWS_AS(wasserstein_cone_contains(3, 0, S({2}), QVector{1, -1, 0}), Error);
  CHECK_THROWS_AS(wasserstein_cone_contains(3, S({1}), S({1, 2, 3}), QVector{1, -1, 0}), Error);
}

TEST_CASE("closed form, conical hull and homogenization agree") {
  std::mt19937_64 rng(31);
  for (const auto& ball : gen::small_balls()) {
    const std::size_t m = ball.num_facets();
    int hits = 0;
    for (int k = 0; k < 120; ++k) {
      const auto f = static_cast<FacetIndex>(gen::int_in(rng, 0, static_cast<long>(m) - 1));
      const auto g = static_cast<FacetIndex>(gen::int_in(rng, 0, static_cast<long>(m) - 1));
      // Small integer ranges land on cone boundaries often.
      const auto x = gen::point_for(rng, ball, k % 2 ? 3 : 40);
      const bool closed = cone_contains(ball, f, g, x);
      hits += closed;
      CHECK(closed == cone_member_oracle(bisection_cone_rays(ball, f, g).generators, x));
      CHECK(closed == homog_membership(ball, f, g, x));
      CHECK(closed == cell_nonempty_oracle(ball, f, g, x));
    }
    CHECK(hits > 0);
  }
}

TEST_CASE("swap and negation symmetry") {
  std::mt19937_64 rng(41);
  for (const auto& ball : gen::small_balls()) {
    for (int k = 0; k < 10; ++k) {
      const auto x = gen::point_for(rng, ball, 3);
      for (FacetIndex f = 0; f < ball.num_facets(); ++f)
        for (FacetIndex g = 0; g < ball.num_facets(); ++g) {
          const bool in = cone_contains(ball, f, g, x);
          CHECK(in == cone_contains(ball, g, f, -x));
          CHECK(in == cone_contains(ball, ball.opposite(f), ball.opposite(g), -x));
        }
    }
  }
}

TEST_CASE("cone dimension via generator rank") {
  for (const auto& ball : gen::small_balls()) {
    const std::size_t d = ball.intrinsic_dim();
    for (FacetIndex f = 0; f < ball.num_facets(); ++f)
      for (FacetIndex g = 0; g < ball.num_facets(); ++g) {
        const auto gens = bisection_cone_rays(ball, f, g).generators;
        CHECK(rank(gens) == (f == g ? d - 1 : d));
        if (f == g)
          for (const auto& v : gens) CHECK(dot(ball.facet(f).normal, v).is_zero());
      }
  }
}

TEST_CASE("B_{F,-F} is the face cone and halfspaces are covered") {
  std::mt19937_64 rng(43);
  for (const auto& ball : gen::small_balls()) {
    for (int k = 0; k < 30; ++k) {
      const auto x = gen::point_for(rng, ball, k % 2 ? 3 : 50);
      const auto cones = face_cone_of(ball, x);
      for (FacetIndex f = 0; f < ball.num_facets(); ++f) {
        const bool in_cf = std::find(cones.begin(), cones.end(), f) != cones.end();
        CHECK(cone_contains(ball, f, ball.opposite(f), x) == in_cf);
        if (dot(ball.facet(f).normal, x).sign() < 0) {
          for (FacetIndex g = 0; g < ball.num_facets(); ++g) CHECK_FALSE(homog_membership(ball, f, g, x));
          continue;
        }
        bool covered = false;
        for (FacetIndex g = 0; g < ball.num_facets() && !covered; ++g)
          covered = g != f && cone_contains(ball, f, g, x);
        CHECK(covered);
      }
    }
  }
}

TEST_CASE("polygon half-plane decomposition") {
  std::mt19937_64 rng(47);
  std::vector<UnitBall> polys{make_regular_polygon(2), make_affine_regular_hexagon(), make_perturbed_hexagon(),
                              make_regular_polygon(5)};
  Sampler sampler(5);
  polys.push_back(sampler.perturbed_polygon(4));
  for (const auto& p : polys) {
    const std::size_t m = p.num_facets();
    const std::size_t n = m / 2;
    const auto& v = p.vertices();
    int tested = 0;
    for (int k = 0; k < 400; ++k) {
      const auto i = static_cast<std::size_t>(gen::int_in(rng, 0, static_cast<long>(m) - 1));
      const auto j = static_cast<std::size_t>(gen::int_in(rng, 0, static_cast<long>(m) - 1));
      if (i == j) continue;
      const auto x = gen::nonzero_vec(rng, 2, 60);
      if (det2(v[i] - v[j], x).sign() <= 0) continue;
      std::size_t interior = 0;
      bool on_boundary = false;
      for (std::size_t s = 0; s < n; ++s) {
        const auto a = (i + s) % m, b = (j + s) % m;
        const bool in = polygon_cone_contains(p, a, b, x);
        const bool open = polygon_cone_interior(p, a, b, x);
        interior += open;
        on_boundary = on_boundary || (in && !open);
      }
      if (on_boundary) continue;
      CHECK(interior == 1);
      ++tested;
    }
    CHECK(tested > 100);
  }
}

TEST_CASE("linear isomorphisms") {
  const auto sq = make_regular_polygon(2);
  const auto scaled = make_polygon({QVector{2, 0}, QVector{0, 1}, QVector{-2, 0}, QVector{0, -1}});
  const auto m = QMatrix::diagonal(QVector{2, 1});
  std::mt19937_64 rng(53);
  for (FacetIndex f = 0; f < 4; ++f)
    for (FacetIndex g = 0; g < 4; ++g) {
      const auto cone = bisection_cone_rays(sq, f, g);
      const auto mapped = apply_linear_iso(cone, m);
      const auto same = apply_linear_iso(cone, QMatrix::identity(2));
      const auto neg = apply_linear_iso(cone, QMatrix::diagonal(QVector{-1, -1}));
      for (int k = 0; k < 15; ++k) {
        const auto x = gen::nonzero_vec(rng, 2, 4, 1);
        CHECK(mapped.contains(x) == polygon_cone_contains(scaled, f, g, x));
        CHECK(same.contains(x) == cone.contains(x));
        CHECK(neg.contains(x) == polygon_cone_contains(sq, g, f, x));
      }
    }
  try {
    apply_linear_iso(bisection_cone_rays(sq, 0, 1), QMatrix({QVector{1, 2}, QVector{2, 4}}));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SingularMap);
  }
}
