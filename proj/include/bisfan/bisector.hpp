#pragma once

// Cell enumeration, counts, equivalence and genericity of bisectors
// bis(0, a).

#include <string>
#include <vector>

#include "bisfan/biscone.hpp"

namespace bisfan {

/// Largest d for which the cross-polytope and root polytope pair sets are
/// enumerated.
inline constexpr std::size_t kMaxPairEnumDim = 12;

/// Sorted set of facet pairs (F, G) with bis_{F,G}(0, a) nonempty.
class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(std::vector<FacetPair> pairs);

  const std::vector<FacetPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool contains(FacetPair p) const;
  /// {(G, F) : (F, G) in this}, the cell set of -a.
  CellSet swapped() const;

  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  std::vector<FacetPair> pairs_;
};

/// Closed-form enumeration. Subset-indexed families run an integer kernel
/// over a rank table of subset sums, parallel over F.
/// Errors: ZeroSite, DimMismatch, NotInHyperplane, CapExceeded.
CellSet enumerate_cells(const UnitBall& ball, const QVector& a);
/// Serial enumeration that calls the per-pair closed forms directly.
CellSet enumerate_cells_reference(const UnitBall& ball, const QVector& a);
/// Enumeration by the cell LP for every pair.
CellSet enumerate_cells_lp(const UnitBall& ball, const QVector& a);

std::size_t cell_count(const UnitBall& ball, const QVector& a);

/// Same cell set. Errors: ZeroSite.
bool equivalent(const UnitBall& ball, const QVector& a, const QVector& b);

enum class Verdict { No, Yes, Unknown };
std::string_view to_string(Verdict v);

struct GenericityReport {
  bool weak_general = false;
  Verdict general = Verdict::Unknown;
  std::vector<std::string> violations;  // first few exact witnesses
};

/// Weak general position for every family; general position through the
/// family fan description (Unknown for GeneralVRep).
GenericityReport genericity(const UnitBall& ball, const QVector& a);

/// Formatting helper: "(F1+,F2-)".
std::string pair_label(const UnitBall& ball, FacetPair p);

}  // namespace bisfan
