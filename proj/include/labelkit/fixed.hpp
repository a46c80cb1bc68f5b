#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace labelkit {

/// Fixed-point decimal with six fractional digits.
///
/// Node and edge features are stored this way so that they compare exactly
/// and serialize to the same bytes on every platform. Canonical codes and WL
/// signatures hash the raw integer, never a floating-point value.
class Fixed {
 public:
  static constexpr std::int64_t kScale = 1'000'000;

  constexpr Fixed() = default;
  static constexpr Fixed from_raw(std::int64_t raw) {
    Fixed f;
    f.raw_ = raw;
    return f;
  }
  static constexpr Fixed from_int(std::int64_t v) { return from_raw(v * kScale); }
  /// Parses "-12", "3.25", "0.000001". More than six fractional digits is an error.
  static Fixed parse(std::string_view text);

  constexpr std::int64_t raw() const { return raw_; }
  double to_double() const { return static_cast<double>(raw_) / kScale; }
  /// Shortest exact decimal form ("3.25", "-1", "0").
  std::string to_string() const;

  friend constexpr auto operator<=>(Fixed, Fixed) = default;

 private:
  std::int64_t raw_ = 0;
};

using FeatureVec = std::vector<Fixed>;

}  // namespace labelkit
