#include "labelkit/fixed.hpp"

#include <cctype>
#include <cstdlib>

#include "labelkit/errors.hpp"

namespace labelkit {

Fixed Fixed::parse(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty feature value");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  int frac_digits = 0;
  bool any_digit = false;
  bool in_frac = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.' && !in_frac) {
      in_frac = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidArgument("malformed feature value '" + std::string(text) + "'");
    }
    any_digit = true;
    if (in_frac) {
      if (++frac_digits > 6) {
        throw InvalidArgument("feature value '" + std::string(text) +
                              "' has more than six decimals");
      }
      frac = frac * 10 + (c - '0');
    } else {
      whole = whole * 10 + (c - '0');
      if (whole > 9'000'000'000'000LL) throw InvalidArgument("feature value out of range");
    }
  }
  if (!any_digit) throw InvalidArgument("malformed feature value '" + std::string(text) + "'");
  for (int i = frac_digits; i < 6; ++i) frac *= 10;
  const std::int64_t raw = whole * kScale + frac;
  return from_raw(negative ? -raw : raw);
}

std::string Fixed::to_string() const {
  const bool negative = raw_ < 0;
  const std::uint64_t mag = negative ? static_cast<std::uint64_t>(-raw_) : raw_;
  std::string out = negative ? "-" : "";
  out += std::to_string(mag / kScale);
  std::uint64_t frac = mag % kScale;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 6 - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

}  // namespace labelkit
