#include "bisfan/lp.hpp"

#include <stdexcept>

namespace bisfan {

void LinearSystem::add(QVector coeffs, Relation rel, Rational rhs) {
  constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

namespace {

// Dictionary form: every row reads  basic = c + sum_k a[k] * nonbasic[k].
// Variables 0..m-1 are slacks (>= 0), m is the auxiliary x0, and m+1+j is
// the free structural variable x_j.
struct Dictionary {
  std::vector<std::size_t> basic;
  std::vector<std::size_t> nonbasic;
  std::vector<mpq_class> c;
  std::vector<std::vector<mpq_class>> a;

  // Objective row (same shape as a dictionary row).
  mpq_class obj_c;
  std::vector<mpq_class> obj;

  void pivot(std::size_t r, std::size_t e) {
    const std::size_t cols = nonbasic.size();
    auto& row = a[r];
    const mpq_class inv = 1 / row[e];
    // Solve row r for the entering variable.
    c[r] = -c[r] * inv;
    for (std::size_t k = 0; k < cols; ++k) {
      if (k == e) continue;
      if (sgn(row[k]) != 0) row[k] = -row[k] * inv;
    }
    row[e] = inv;
    std::swap(basic[r], nonbasic[e]);

    auto substitute = [&](mpq_class& ci, std::vector<mpq_class>& ai) {
      if (sgn(ai[e]) == 0) return;
      const mpq_class f = ai[e];
      ci += f * c[r];
      for (std::size_t k = 0; k < cols; ++k) {
        if (k == e) continue;
        if (sgn(row[k]) != 0) ai[k] += f * row[k];
      }
      ai[e] = f * inv;
    };
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != r) substitute(c[i], a[i]);
    if (!obj.empty()) substitute(obj_c, obj);
  }

  void remove_row(std::size_t r) {
    basic.erase(basic.begin() + static_cast<std::ptrdiff_t>(r));
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(r));
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(r));
  }
};

struct Row {
  std::vector<mpq_class> coeffs;
  mpq_class rhs;  // coeffs . x <= rhs
};

std::vector<Row> normalize(const LinearSystem& sys) {
  std::vector<Row> rows;
  for (const auto& con : sys.constraints) {
    if (con.coeffs.dim() != sys.dim) throw Error(Errc::DimMismatch, "constraint dimension");
    Row le;
    for (const auto& v : con.coeffs) le.coeffs.push_back(v.raw());
    le.rhs = con.rhs.raw();
    Row ge;
    for (const auto& v : le.coeffs) ge.coeffs.push_back(-v);
    ge.rhs = -le.rhs;
    if (con.relation != Relation::GE) rows.push_back(le);
    if (con.relation != Relation::LE) rows.push_back(ge);
  }
  return rows;
}

bool satisfies(const LinearConstraint& con, const QVector& x) {
  const auto lhs = dot(con.coeffs, x);
  switch (con.relation) {
    case Relation::LE: return lhs <= con.rhs;
    case Relation::EQ: return lhs == con.rhs;
    case Relation::GE: return lhs >= con.rhs;
  }
  return false;
}

std::optional<QVector> solve_rows(const std::vector<Row>& rows, std::size_t n) {
  const std::size_t m = rows.size();
  const std::size_t x0 = m;
  Dictionary d;
  for (std::size_t j = 0; j < n; ++j) d.nonbasic.push_back(m + 1 + j);
  for (std::size_t i = 0; i < m; ++i) {
    d.basic.push_back(i);
    d.c.push_back(rows[i].rhs);
    std::vector<mpq_class> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = -rows[i].coeffs[j];
    d.a.push_back(std::move(r));
  }

  // Pivot every free variable into the basis and set its row aside; the
  // stored rows keep receiving substitutions until they mention slacks only.
  std::vector<std::pair<std::size_t, std::size_t>> free_rows;  // (j, row slot)
  std::vector<mpq_class> free_c;
  std::vector<std::vector<mpq_class>> free_a;
  std::vector<std::size_t> free_idx;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t e = 0;
    while (d.nonbasic[e] != m + 1 + j) ++e;
    std::size_t r = d.a.size();
    for (std::size_t i = 0; i < d.a.size(); ++i)
      if (sgn(d.a[i][e]) != 0) { r = i; break; }
    if (r == d.a.size()) continue;  // x_j appears nowhere: leave it at 0
    // Append stored rows temporarily so the pivot updates them too.
    const std::size_t live = d.a.size();
    for (std::size_t k = 0; k < free_a.size(); ++k) {
      d.basic.push_back(free_idx[k]);
      d.c.push_back(free_c[k]);
      d.a.push_back(free_a[k]);
    }
    d.pivot(r, e);
    for (std::size_t k = 0; k < free_a.size(); ++k) {
      free_c[k] = d.c[live + k];
      free_a[k] = d.a[live + k];
    }
    d.basic.resize(live);
    d.c.resize(live);
    d.a.resize(live);
    free_idx.push_back(d.basic[r]);
    free_c.push_back(d.c[r]);
    free_a.push_back(d.a[r]);
    d.remove_row(r);
  }

  // Stored rows are expressed over the nonbasic set as it stands now.
  const std::vector<std::size_t> free_cols = d.nonbasic;

  auto value_of = [&](std::size_t var) -> mpq_class {
    for (std::size_t i = 0; i < d.basic.size(); ++i)
      if (d.basic[i] == var) return d.c[i];
    return 0;
  };

  // Free structural variables still nonbasic never met a row: drop them at 0.
  // Remaining nonbasic columns are slacks.
  bool need_phase_one = false;
  for (const auto& ci : d.c)
    if (sgn(ci) < 0) need_phase_one = true;

  if (need_phase_one) {
    d.nonbasic.push_back(x0);
    for (auto& row : d.a) row.emplace_back(1);
    const std::size_t cols = d.nonbasic.size();
    d.obj.assign(cols, 0);
    d.obj.back() = -1;
    d.obj_c = 0;
    std::size_t r = 0;
    for (std::size_t i = 1; i < d.c.size(); ++i)
      if (d.c[i] < d.c[r]) r = i;
    d.pivot(r, cols - 1);

    auto is_free_var = [&](std::size_t var) { return var > m; };
    while (sgn(d.obj_c) != 0) {
      // Bland: smallest-index improving nonbasic variable.
      std::size_t e = cols;
      for (std::size_t k = 0; k < cols; ++k) {
        if (is_free_var(d.nonbasic[k]) || sgn(d.obj[k]) <= 0) continue;
        if (e == cols || d.nonbasic[k] < d.nonbasic[e]) e = k;
      }
      if (e == cols) break;  // optimal with w < 0
      std::size_t leave = d.a.size();
      mpq_class best;
      for (std::size_t i = 0; i < d.a.size(); ++i) {
        if (sgn(d.a[i][e]) >= 0) continue;
        mpq_class ratio = d.c[i] / -d.a[i][e];
        if (leave == d.a.size() || ratio < best ||
            (ratio == best && d.basic[i] < d.basic[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == d.a.size()) throw std::logic_error("phase one unbounded");
      d.pivot(leave, e);
    }
    if (sgn(d.obj_c) != 0) return std::nullopt;
  }

  QVector x(n);
  for (std::size_t k = 0; k < free_idx.size(); ++k) {
    mpq_class v = free_c[k];
    for (std::size_t col = 0; col < free_a[k].size(); ++col) {
      if (sgn(free_a[k][col]) == 0) continue;
      const std::size_t var = free_cols[col];
      if (var > m) continue;  // untouched free variable, fixed at 0
      v += free_a[k][col] * value_of(var);
    }
    x[free_idx[k] - m - 1] = Rational(std::move(v));
  }
  return x;
}

}  // namespace

FeasibilityResult feasible(const LinearSystem& sys) {
  const auto rows = normalize(sys);
  FeasibilityResult out;
  auto x = solve_rows(rows, sys.dim);
  if (!x) return out;
  for (const auto& con : sys.constraints)
    if (!satisfies(con, *x)) throw std::logic_error("LP witness fails a constraint");
  out.feasible = true;
  out.witness = std::move(x);
  return out;
}

FeasibilityResult feasible_strict(const LinearSystem& sys, const std::vector<bool>& strict) {
  if (strict.size() != sys.constraints.size())
    throw Error(Errc::DimMismatch, "strict mask length");
  // x = y / tau with  a.y - b tau >= 1 on strict rows and tau >= 1.
  LinearSystem lifted;
  lifted.dim = sys.dim + 1;
  for (std::size_t k = 0; k < sys.constraints.size(); ++k) {
    const auto& con = sys.constraints[k];
    QVector row(lifted.dim);
    for (std::size_t j = 0; j < sys.dim; ++j) row[j] = con.coeffs[j];
    row[sys.dim] = -con.rhs;
    if (strict[k] && con.relation == Relation::EQ)
      throw Error(Errc::Unsupported, "strict equality");
    if (!strict[k]) {
      lifted.add(std::move(row), con.relation, 0);
    } else if (con.relation == Relation::GE) {
      lifted.add(std::move(row), Relation::GE, 1);
    } else {
      lifted.add(std::move(row), Relation::LE, -1);
    }
  }
  lifted.add(QVector::unit(lifted.dim, sys.dim), Relation::GE, 1);
  const auto res = feasible(lifted);
  FeasibilityResult out;
  if (!res.feasible) return out;
  const auto& y = *res.witness;
  const auto tau = y[sys.dim];
  QVector x(sys.dim);
  for (std::size_t j = 0; j < sys.dim; ++j) x[j] = y[j] / tau;
  for (std::size_t k = 0; k < sys.constraints.size(); ++k) {
    const auto& con = sys.constraints[k];
    const auto lhs = dot(con.coeffs, x);
    const bool ok = !strict[k] ? satisfies(con, x)
                               : (con.relation == Relation::GE ? lhs > con.rhs : lhs < con.rhs);
    if (!ok) throw std::logic_error("strict LP witness fails a constraint");
  }
  out.feasible = true;
  out.witness = std::move(x);
  return out;
}

namespace {

// Rows of  x in C_F  as  (z_F/b_F - z_F'/b_F') . x >= 0 for every F' != F.
void add_face_cone_rows(const UnitBall& ball, FacetIndex f, const QVector& shift, LinearSystem& sys,
                        std::vector<bool>* strict) {
  const auto& fc = ball.facet(f);
  const QVector zf = fc.normal * fc.offset.inverse();
  for (FacetIndex h = 0; h < ball.num_facets(); ++h) {
    if (h == f) continue;
    const auto& other = ball.facet(h);
    QVector row = zf - other.normal * other.offset.inverse();
    Rational rhs = dot(row, shift);
    sys.add(std::move(row), Relation::GE, std::move(rhs));
    if (strict) strict->push_back(true);
  }
}

LinearSystem build_cell_system(const UnitBall& ball, FacetIndex f, FacetIndex g, const QVector& a,
                               std::vector<bool>* strict) {
  ball.facet(f);
  ball.facet(g);
  if (a.dim() != ball.dim()) throw Error(Errc::DimMismatch, "site dimension");
  LinearSystem sys;
  sys.dim = ball.dim();
  const QVector zero(ball.dim());
  add_face_cone_rows(ball, f, zero, sys, strict);
  add_face_cone_rows(ball, g, a, sys, strict);
  // lambda_F(x) - lambda_G(x) = -lambda_G(a)
  const auto& ff = ball.facet(f);
  const auto& gg = ball.facet(g);
  QVector zg = gg.normal * gg.offset.inverse();
  sys.add(ff.normal * ff.offset.inverse() - zg, Relation::EQ, -dot(zg, a));
  if (strict) strict->push_back(false);
  if (ball.sum_zero_constraint()) {
    sys.add(QVector(std::vector<Rational>(ball.dim(), Rational(1))), Relation::EQ, 0);
    if (strict) strict->push_back(false);
  }
  return sys;
}

}  // namespace

LinearSystem cell_system(const UnitBall& ball, FacetIndex f, FacetIndex g, const QVector& a) {
  return build_cell_system(ball, f, g, a, nullptr);
}

bool cell_nonempty_oracle(const UnitBall& ball, FacetIndex f, FacetIndex g, const QVector& a) {
  return feasible(cell_system(ball, f, g, a)).feasible;
}

bool cell_interior_oracle(const UnitBall& ball, FacetIndex f, FacetIndex g, const QVector& a) {
  std::vector<bool> strict;
  auto sys = build_cell_system(ball, f, g, a, &strict);
  return feasible_strict(sys, strict).feasible;
}

bool cone_member_oracle(const std::vector<QVector>& generators, const QVector& x) {
  if (generators.empty()) return x.is_zero();
  const std::size_t k = generators.size();
  LinearSystem sys;
  sys.dim = k;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    QVector row(k);
    for (std::size_t g = 0; g < k; ++g) {
      if (generators[g].dim() != x.dim()) throw Error(Errc::DimMismatch, "generator dimension");
      row[g] = generators[g][i];
    }
    sys.add(std::move(row), Relation::EQ, x[i]);
  }
  for (std::size_t g = 0; g < k; ++g) sys.add(QVector::unit(k, g), Relation::GE, 0);
  return feasible(sys).feasible;
}

}  // namespace bisfan
