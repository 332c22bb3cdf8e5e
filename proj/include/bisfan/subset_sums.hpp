#pragma once

#include <cstdint>
#include <vector>

#include "bisfan/exact.hpp"
#include "bisfan/polytope.hpp"

namespace bisfan {

/// All 2^d subset sums a(K) of a vector, scaled to integers, together with a
/// dense rank so that a(K) < a(L) iff rank(K) < rank(L).
class SubsetSums {
 public:
  /// Errors: CapExceeded for d > kMaxMaskDim.
  explicit SubsetSums(const QVector& a);

  std::size_t dim() const { return dim_; }
  SubsetMask full() const { return full_; }
  /// a(K) scaled by the common denominator.
  const mpz_class& scaled(SubsetMask k) const { return sums_[k]; }
  Rational sum(SubsetMask k) const;
  const mpz_class& denominator() const { return den_; }
  std::int32_t rank(SubsetMask k) const { return rank_[k]; }
  std::int32_t zero_rank() const { return rank_[0]; }
  int sign(SubsetMask k) const { return sgn(sums_[k]); }

  SubsetMask positive() const { return pos_; }  // {i : a_i > 0}
  SubsetMask negative() const { return neg_; }  // {i : a_i < 0}

 private:
  std::size_t dim_;
  SubsetMask full_;
  SubsetMask pos_ = 0;
  SubsetMask neg_ = 0;
  mpz_class den_;
  std::vector<mpz_class> sums_;
  std::vector<std::int32_t> rank_;
};

}  // namespace bisfan
