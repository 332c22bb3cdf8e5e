#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bisfan {

enum class Errc {
  ZeroDenominator,
  DimMismatch,
  NotCentrallySymmetric,
  BadOrientation,
  NotInHyperplane,
  ZeroVector,
  BadFacet,
  SingularMap,
  ZeroSite,
  DegeneratePoint,
  CapExceeded,
  Unsupported,
  Parse,
};

std::string_view to_string(Errc code);

/// Domain error raised by every module. Internal invariant breaches use
/// std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bisfan
