#pragma once

// Exact rational scalars, vectors and small dense linear algebra.
//
// Everything above this layer computes with Rational only; there is no
// floating point anywhere in the geometry except the decimal rendering used
// by mesh export.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bisfan/error.hpp"

namespace bisfan {

/// Arbitrary-precision rational, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& value) : q_(value) {}
  explicit Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Decimal notation is rejected.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }
  mpq_class& raw() { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational inverse() const;

  std::string to_string() const;
  /// Decimal rendering with the given number of significant digits.
  std::string to_decimal(int significant_digits = 12) const;
  double to_double() const { return q_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_;
};

/// num/den in lowest terms. Throws Errc::ZeroDenominator for den == 0.
Rational rat(long num, long den);
Rational rat(const mpz_class& num, const mpz_class& den);

class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t dim) : coords_(dim) {}
  QVector(std::initializer_list<Rational> coords) : coords_(coords) {}
  explicit QVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static QVector unit(std::size_t dim, std::size_t i);
  /// Parses a comma separated list of rationals, e.g. "3,-1/2,0".
  static QVector parse(std::string_view text);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;
  Rational sum() const;
  std::string to_string() const;

  QVector operator-() const;
  QVector& operator+=(const QVector& o);
  QVector& operator-=(const QVector& o);
  QVector& operator*=(const Rational& s);

  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator*(QVector a, const Rational& s) { return a *= s; }
  friend QVector operator*(const Rational& s, QVector a) { return a *= s; }

  friend bool operator==(const QVector&, const QVector&) = default;
  friend auto operator<=>(const QVector& a, const QVector& b) { return a.coords_ <=> b.coords_; }

  friend std::ostream& operator<<(std::ostream& os, const QVector& v) {
    return os << v.to_string();
  }

 private:
  std::vector<Rational> coords_;
};

/// Exact inner product. Throws Errc::DimMismatch.
Rational dot(const QVector& u, const QVector& v);

/// Positive multiple of v with coprime integer coordinates. v must be nonzero.
QVector primitive_direction(const QVector& v);

class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::vector<QVector> rows);
  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(const QVector& diag);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const QVector& row(std::size_t i) const { return rows_[i]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  QMatrix transpose() const;
  QVector operator*(const QVector& x) const;

 private:
  std::vector<QVector> rows_;
  std::size_t cols_ = 0;
};

struct LinearSolution {
  enum class Status { Unique, NoSolution, Underdetermined };
  Status status = Status::NoSolution;
  QVector x;  // set only for Unique
  std::size_t rank = 0;
};

/// Solves A x = b with fraction-free (Bareiss) elimination on the integer
/// scaled augmented matrix. Inconsistency takes precedence over rank
/// deficiency.
LinearSolution solve_linear(const QMatrix& a, const QVector& b);

/// Rank of a rational matrix (Bareiss elimination).
std::size_t rank(const QMatrix& a);
std::size_t rank(const std::vector<QVector>& rows);

}  // namespace bisfan
