#include "bisfan/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace bisfan {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::NotCentrallySymmetric: return "NotCentrallySymmetric";
    case Errc::BadOrientation: return "BadOrientation";
    case Errc::NotInHyperplane: return "NotInHyperplane";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::BadFacet: return "BadFacet";
    case Errc::SingularMap: return "SingularMap";
    case Errc::ZeroSite: return "ZeroSite";
    case Errc::DegeneratePoint: return "DegeneratePoint";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::Unsupported: return "Unsupported";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(text, num)
                      : parse_integer(text.substr(0, slash), num) &&
                            parse_integer(text.substr(slash + 1), den);
  if (!ok) throw Error(Errc::Parse, "not a rational: '" + std::string(text) + "'");
  return rat(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::ZeroDenominator, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::ZeroDenominator, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_decimal(int significant_digits) const {
  const mpf_class f(q_, 256);
  std::vector<char> buf(64 + static_cast<std::size_t>(significant_digits));
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
  return buf.data();
}

Rational rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::ZeroDenominator, "denominator is zero");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational rat(long num, long den) { return rat(mpz_class(num), mpz_class(den)); }

// ---------------------------------------------------------------- QVector

QVector QVector::unit(std::size_t dim, std::size_t i) {
  QVector v(dim);
  v[i] = 1;
  return v;
}

QVector QVector::parse(std::string_view text) {
  std::vector<Rational> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto piece = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    coords.push_back(Rational::parse(piece));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return QVector(std::move(coords));
}

bool QVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_zero(); });
}

Rational QVector::sum() const {
  Rational s;
  for (const auto& c : coords_) s += c;
  return s;
}

std::string QVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].to_string();
  }
  return out + ")";
}

QVector QVector::operator-() const {
  QVector r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

QVector& QVector::operator+=(const QVector& o) {
  if (o.dim() != dim()) throw Error(Errc::DimMismatch, "vector addition");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  if (o.dim() != dim()) throw Error(Errc::DimMismatch, "vector subtraction");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

QVector& QVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Rational dot(const QVector& u, const QVector& v) {
  if (u.dim() != v.dim()) throw Error(Errc::DimMismatch, "dot product");
  mpq_class acc;
  for (std::size_t i = 0; i < u.dim(); ++i) acc += u[i].raw() * v[i].raw();
  return Rational(std::move(acc));
}

QVector primitive_direction(const QVector& v) {
  if (v.is_zero()) throw Error(Errc::ZeroVector, "primitive_direction of zero vector");
  mpz_class lcm_den = 1;
  for (const auto& c : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& c : v) {
    mpz_class n = c.num() * (lcm_den / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  QVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rational(mpz_class(ints[i] / g));
  return out;
}

// ---------------------------------------------------------------- QMatrix

QMatrix::QMatrix(std::vector<QVector> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().dim();
  for (const auto& r : rows_) {
    if (r.dim() != cols_) throw Error(Errc::DimMismatch, "ragged matrix");
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(QVector::unit(n, i));
  return QMatrix(std::move(rows));
}

QMatrix QMatrix::diagonal(const QVector& diag) {
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < diag.dim(); ++i) rows.push_back(QVector::unit(diag.dim(), i) * diag[i]);
  return QMatrix(std::move(rows));
}

QMatrix QMatrix::transpose() const {
  std::vector<QVector> out(cols_, QVector(rows_.size()));
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[j][i] = rows_[i][j];
  return QMatrix(std::move(out));
}

QVector QMatrix::operator*(const QVector& x) const {
  if (x.dim() != cols_) throw Error(Errc::DimMismatch, "matrix-vector product");
  QVector out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = dot(rows_[i], x);
  return out;
}

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Scales each row by the lcm of its denominators.
IntMatrix integer_rows(const std::vector<QVector>& rows, const QVector* rhs) {
  IntMatrix m;
  m.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<const Rational*> entries;
    for (const auto& c : rows[i]) entries.push_back(&c);
    if (rhs) entries.push_back(&(*rhs)[i]);
    mpz_class l = 1;
    for (const auto* e : entries) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e->den().get_mpz_t());
    std::vector<mpz_class> row;
    row.reserve(entries.size());
    for (const auto* e : entries) row.push_back(e->num() * (l / e->den()));
    m.push_back(std::move(row));
  }
  return m;
}

// Fraction-free forward elimination restricted to the first `pivot_cols`
// columns. Returns the pivot column of each echelon row.
std::vector<std::size_t> bareiss(IntMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t width = rows ? m[0].size() : 0;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

LinearSolution solve_linear(const QMatrix& a, const QVector& b) {
  if (b.dim() != a.rows()) throw Error(Errc::DimMismatch, "solve_linear right-hand side");
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  IntMatrix m = integer_rows(rows, &b);
  const std::size_t n = a.cols();
  const auto pivots = bareiss(m, n);

  LinearSolution out;
  out.rank = pivots.size();
  for (std::size_t i = pivots.size(); i < m.size(); ++i) {
    if (m[i][n] != 0) {
      out.status = LinearSolution::Status::NoSolution;
      return out;
    }
  }
  if (pivots.size() < n) {
    out.status = LinearSolution::Status::Underdetermined;
    return out;
  }
  QVector x(n);
  for (std::size_t k = n; k-- > 0;) {
    mpq_class acc(m[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) acc -= m[k][j] * x[j].raw();
    acc /= m[k][k];
    x[k] = Rational(std::move(acc));
  }
  out.status = LinearSolution::Status::Unique;
  out.x = std::move(x);
  return out;
}

std::size_t rank(const std::vector<QVector>& rows) {
  if (rows.empty()) return 0;
  IntMatrix m = integer_rows(rows, nullptr);
  return bareiss(m, rows.front().dim()).size();
}

std::size_t rank(const QMatrix& a) {
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return rank(rows);
}

}  // namespace bisfan
