#include "bisfan/bisector.hpp"

#include <algorithm>
#include <functional>

#include "bisfan/subset_sums.hpp"

namespace bisfan {

CellSet::CellSet(std::vector<FacetPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool CellSet::contains(FacetPair p) const { return std::binary_search(pairs_.begin(), pairs_.end(), p); }

CellSet CellSet::swapped() const {
  std::vector<FacetPair> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back({p.g, p.f});
  return CellSet(std::move(out));
}

std::string pair_label(const UnitBall& ball, FacetPair p) {
  return "(" + ball.facet_label(p.f) + "," + ball.facet_label(p.g) + ")";
}

namespace {

void check_site(const UnitBall& ball, const QVector& a) {
  if (a.dim() != ball.dim()) throw Error(Errc::DimMismatch, "site dimension");
  if (a.is_zero()) throw Error(Errc::ZeroSite, "sites coincide");
  if (ball.sum_zero_constraint() && !a.sum().is_zero())
    throw Error(Errc::NotInHyperplane, "site " + a.to_string() + " does not sum to zero");
  const bool subset_family =
      ball.family() == Family::CrossPolytope || ball.family() == Family::RootPolytopeA;
  if (subset_family && ball.dim() > kMaxPairEnumDim)
    throw Error(Errc::CapExceeded, "pair enumeration is capped at d = " + std::to_string(kMaxPairEnumDim));
}

CellSet merge(std::vector<std::vector<FacetPair>>& slots) {
  std::vector<FacetPair> all;
  for (auto& s : slots) all.insert(all.end(), s.begin(), s.end());
  return CellSet(std::move(all));
}

CellSet cross_kernel(const QVector& a) {
  const SubsetSums s(a);
  const SubsetMask full = s.full();
  const SubsetMask pos = s.positive();
  const SubsetMask neg = s.negative();
  const std::size_t n = std::size_t{full} + 1;
  std::vector<char> light(n);  // a(J) <= a(J^c)
  for (SubsetMask j = 0; j <= full; ++j) light[j] = s.rank(j) <= s.rank(full & ~j);
  std::vector<std::vector<FacetPair>> slots(n);
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long ii = 0; ii < count; ++ii) {
    const auto i = static_cast<SubsetMask>(ii);
    if (s.rank(full & ~i) > s.rank(i)) continue;
    auto& out = slots[ii];
    for (SubsetMask j = 0; j <= full; ++j) {
      if (!light[j]) continue;
      if (i & ~j & neg) continue;
      if (j & ~i & pos) continue;
      out.push_back({i, j});
    }
  }
  return merge(slots);
}

CellSet root_kernel(const QVector& a) {
  const SubsetSums s(a);
  const SubsetMask full = s.full();
  const SubsetMask pos = s.positive();
  const SubsetMask neg = s.negative();
  const auto zero = s.zero_rank();
  const std::size_t n = std::size_t{full} + 1;
  std::vector<std::vector<FacetPair>> slots(n);
  const auto count = static_cast<long>(full);
#pragma omp parallel for schedule(dynamic, 16)
  for (long ii = 1; ii < count; ++ii) {
    const auto i = static_cast<SubsetMask>(ii);
    auto& out = slots[ii];
    for (SubsetMask j = 1; j < full; ++j) {
      if (i & ~j & neg) continue;
      if (j & ~i & pos) continue;
      const SubsetMask both = i & j;
      const SubsetMask neither = full & ~(i | j);
      bool in;
      if (both && neither) {
        in = s.rank(i) >= zero && s.rank(j) <= zero;
      } else if (neither) {
        in = s.rank(j) <= s.rank(neither & neg) && s.rank(neither & pos) <= s.rank(i);
      } else if (both) {
        in = s.rank(both & pos) <= s.rank(full & ~j) && s.rank(full & ~i) <= s.rank(both & neg);
      } else {
        in = true;
      }
      if (in) out.push_back({i - 1, j - 1});
    }
  }
  return merge(slots);
}

template <typename Pred>
CellSet all_pairs(const UnitBall& ball, Pred pred, bool parallel) {
  const std::size_t m = ball.num_facets();
  std::vector<std::vector<FacetPair>> slots(m);
  const auto count = static_cast<long>(m);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long ff = 0; ff < count; ++ff) {
    const auto f = static_cast<FacetIndex>(ff);
    for (FacetIndex g = 0; g < m; ++g)
      if (pred(f, g)) slots[f].push_back({f, g});
  }
  return merge(slots);
}

}  // namespace

CellSet enumerate_cells(const UnitBall& ball, const QVector& a) {
  check_site(ball, a);
  switch (ball.family()) {
    case Family::CrossPolytope: return cross_kernel(a);
    case Family::RootPolytopeA: return root_kernel(a);
    case Family::Polygon:
    case Family::Cube:
    case Family::GeneralVRep:
      break;
  }
  return all_pairs(ball, [&](FacetIndex f, FacetIndex g) { return cone_contains(ball, f, g, a); }, true);
}

CellSet enumerate_cells_reference(const UnitBall& ball, const QVector& a) {
  check_site(ball, a);
  return all_pairs(ball, [&](FacetIndex f, FacetIndex g) { return cone_contains(ball, f, g, a); }, false);
}

CellSet enumerate_cells_lp(const UnitBall& ball, const QVector& a) {
  check_site(ball, a);
  return all_pairs(ball, [&](FacetIndex f, FacetIndex g) { return cell_nonempty_oracle(ball, f, g, a); },
                   true);
}

std::size_t cell_count(const UnitBall& ball, const QVector& a) { return enumerate_cells(ball, a).size(); }

bool equivalent(const UnitBall& ball, const QVector& a, const QVector& b) {
  return enumerate_cells(ball, a) == enumerate_cells(ball, b);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::No: return "false";
    case Verdict::Yes: return "true";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kMaxWitnesses = 8;

struct Violations {
  std::vector<std::string>& out;
  std::size_t total = 0;
  void add(const std::function<std::string()>& text) {
    if (total++ < kMaxWitnesses) out.push_back(text());
  }
};

std::string coord(std::size_t i) { return "a_" + std::to_string(i + 1); }

void polygon_general(const UnitBall& ball, const QVector& a, Violations& v) {
  const auto& verts = ball.vertices();
  const std::size_t m = verts.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto d = verts[i] - verts[j];
      if ((d[0] * a[1] - d[1] * a[0]).is_zero())
        v.add([&] {
          return "a on the line through v_" + std::to_string(i + 1) + " - v_" + std::to_string(j + 1) +
                 " = " + d.to_string();
        });
    }
}

void cube_general(const QVector& a, Violations& v) {
  Rational top;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i].is_zero()) v.add([&] { return coord(i) + " = 0"; });
    top = std::max(top, a[i].abs());
  }
  std::vector<std::size_t> at_top;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i].abs() == top) at_top.push_back(i);
  if (at_top.size() > 1)
    v.add([&] {
      return "|" + coord(at_top[0]) + "| = |" + coord(at_top[1]) + "| = " + top.to_string() + " is maximal";
    });
}

void cross_general(const QVector& a, Violations& v) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i].is_zero()) v.add([&] { return coord(i) + " = 0"; });
  const SubsetSums s(a);
  for (SubsetMask k = 0; k <= s.full(); ++k) {
    if (k & 1U) continue;  // one representative per complementary pair
    const SubsetMask c = s.full() & ~k;
    if (s.rank(k) == s.rank(c))
      v.add([&] {
        return "a(" + subset_to_string(k) + ") = a(" + subset_to_string(c) + ") = " + s.sum(k).to_string();
      });
  }
}

void root_general(const QVector& a, Violations& v) {
  const SubsetSums s(a);
  const SubsetMask full = s.full();
  for (SubsetMask k = 1; k < full; ++k)
    if (s.sign(k) == 0) v.add([&] { return "a(" + subset_to_string(k) + ") = 0"; });
  for (SubsetMask support : {s.positive(), s.negative()}) {
    // Subsets X of the support, enumerated with the standard submask walk.
    for (SubsetMask x = support;; x = (x - 1) & support) {
      const SubsetMask rest = support & ~x;
      if (x < rest && s.rank(x) == s.rank(rest))
        v.add([&] {
          return "a(" + subset_to_string(x) + ") = a(" + subset_to_string(rest) + ") within the " +
                 (support == s.positive() ? "positive" : "negative") + " support";
        });
      if (x == 0) break;
    }
  }
}

}  // namespace

GenericityReport genericity(const UnitBall& ball, const QVector& a) {
  if (a.dim() != ball.dim()) throw Error(Errc::DimMismatch, "site dimension");
  if (a.is_zero()) throw Error(Errc::ZeroSite, "sites coincide");
  if (ball.sum_zero_constraint() && !a.sum().is_zero())
    throw Error(Errc::NotInHyperplane, "site does not sum to zero");
  GenericityReport rep;
  Violations v{rep.violations};
  for (FacetIndex f = 0; f < ball.num_facets(); ++f) {
    if (!dot(ball.facet(f).normal, a).is_zero() || ball.opposite(f) < f) continue;
    v.add([&] { return "z . a = 0 for facet " + ball.facet_label(f); });
  }
  rep.weak_general = v.total == 0;
  const std::size_t before = v.total;
  switch (ball.family()) {
    case Family::Polygon: polygon_general(ball, a, v); break;
    case Family::Cube: cube_general(a, v); break;
    case Family::CrossPolytope: cross_general(a, v); break;
    case Family::RootPolytopeA: root_general(a, v); break;
    case Family::GeneralVRep:
      rep.general = rep.weak_general ? Verdict::Unknown : Verdict::No;
      return rep;
  }
  rep.general = (rep.weak_general && v.total == before) ? Verdict::Yes : Verdict::No;
  if (v.total > kMaxWitnesses)
    rep.violations.push_back("... " + std::to_string(v.total - kMaxWitnesses) + " more");
  return rep;
}

}  // namespace bisfan
