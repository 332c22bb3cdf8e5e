#include "doctest.h"

#include "bisfan/exact.hpp"
#include "support/gen.hpp"

using namespace bisfan;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/-4") == rat(-3, 2));
  CHECK(Rational::parse("-0/7").is_zero());
  CHECK(rat(4, -6).den() == 3);
  CHECK(rat(4, -6).num() == -2);
  CHECK(Rational::parse("17").to_string() == "17");
  CHECK(rat(-1, 3).to_string() == "-1/3");
  CHECK_THROWS_AS(Rational::parse("0.5"), Error);
  CHECK_THROWS_AS(Rational::parse("1/"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  try {
    Rational::parse("1/0");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroDenominator);
  }
  CHECK_THROWS_AS(rat(1, 0), Error);
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
}

TEST_CASE("decimal rendering") {
  CHECK(rat(1, 3).to_decimal(4) == "0.3333");
  CHECK(rat(-2, 1).to_decimal(12) == "-2");
  CHECK(Rational(0).to_decimal(12) == "0");
}

TEST_CASE("additive and multiplicative inverses are exact") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    const Rational r = gen::small_rational(rng, 1000000, 1000000);
    CHECK((r + (-r)).is_zero());
    if (!r.is_zero()) CHECK(r * r.inverse() == Rational(1));
  }
  // 1/3 summed three times is exactly one.
  CHECK(rat(1, 3) + rat(1, 3) + rat(1, 3) == Rational(1));
}

TEST_CASE("vector parsing and arithmetic") {
  const auto v = QVector::parse("3,-1/2,0");
  REQUIRE(v.dim() == 3);
  CHECK(v[1] == rat(-1, 2));
  CHECK(v.sum() == rat(5, 2));
  CHECK(dot(v, QVector{1, 2, 3}) == Rational(2));
  CHECK_THROWS_AS(dot(v, QVector{1, 2}), Error);
  CHECK_THROWS_AS(QVector::parse("1,,2"), Error);
  CHECK_THROWS_AS(QVector::parse("1.5,2"), Error);
  CHECK(primitive_direction(QVector{rat(2, 3), rat(-4, 9), 0}) == QVector{3, -2, 0});
  CHECK_THROWS_AS(primitive_direction(QVector{0, 0}), Error);
}

TEST_CASE("solve_linear examples") {
  const auto id = solve_linear(QMatrix::identity(2), QVector{3, 5});
  REQUIRE(id.status == LinearSolution::Status::Unique);
  CHECK(id.x == QVector{3, 5});

  const QMatrix ones({QVector{1, 1}, QVector{1, 1}});
  CHECK(solve_linear(ones, QVector{1, 2}).status == LinearSolution::Status::NoSolution);
  const auto under = solve_linear(ones, QVector{1, 1});
  CHECK(under.status == LinearSolution::Status::Underdetermined);
  CHECK(under.rank == 1);
  CHECK(rank(ones) == 1);
  CHECK(rank(std::vector<QVector>{QVector{1, 0, 1}, QVector{0, 1, 1}, QVector{1, 1, 2}}) == 2);
}

TEST_CASE("solve_linear round trip on full column rank systems") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = static_cast<std::size_t>(gen::int_in(rng, 1, 5));
    const std::size_t m = n + static_cast<std::size_t>(gen::int_in(rng, 0, 2));
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < m; ++i) rows.push_back(gen::vec(rng, n, 7, 5));
    const QMatrix a(rows);
    if (rank(a) != n) continue;
    const auto x = gen::vec(rng, n, 20, 9);
    const auto sol = solve_linear(a, a * x);
    REQUIRE(sol.status == LinearSolution::Status::Unique);
    CHECK(sol.x == x);
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("matrix helpers") {
  const QMatrix m({QVector{1, 2, 3}, QVector{4, 5, 6}});
  CHECK(m.transpose().rows() == 3);
  CHECK(m.transpose()(2, 1) == Rational(6));
  CHECK(QMatrix::diagonal(QVector{2, 3}) * QVector{1, 1} == QVector{2, 3});
  CHECK_THROWS_AS(QMatrix({QVector{1, 2}, QVector{1}}), Error);
}
