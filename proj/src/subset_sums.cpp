#include "bisfan/subset_sums.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace bisfan {

SubsetSums::SubsetSums(const QVector& a) : dim_(a.dim()) {
  if (dim_ > kMaxMaskDim) throw Error(Errc::CapExceeded, "subset sums above dimension cap");
  full_ = static_cast<SubsetMask>((std::uint64_t{1} << dim_) - 1);
  den_ = 1;
  for (const auto& c : a) mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> ints;
  for (std::size_t i = 0; i < dim_; ++i) {
    ints.push_back(a[i].num() * (den_ / a[i].den()));
    if (a[i].sign() > 0) pos_ |= SubsetMask{1} << i;
    if (a[i].sign() < 0) neg_ |= SubsetMask{1} << i;
  }
  const std::size_t n = std::size_t{1} << dim_;
  sums_.resize(n);
  for (std::size_t k = 1; k < n; ++k) {
    const auto low = static_cast<std::size_t>(std::countr_zero(k));
    sums_[k] = sums_[k & (k - 1)] + ints[low];
  }
  std::vector<SubsetMask> order(n);
  std::iota(order.begin(), order.end(), SubsetMask{0});
  std::sort(order.begin(), order.end(), [&](SubsetMask x, SubsetMask y) { return sums_[x] < sums_[y]; });
  rank_.resize(n);
  std::int32_t r = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && sums_[order[k]] != sums_[order[k - 1]]) ++r;
    rank_[order[k]] = r;
  }
}

Rational SubsetSums::sum(SubsetMask k) const { return rat(sums_[k], den_); }

}  // namespace bisfan
