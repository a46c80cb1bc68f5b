#include "labelkit/fixed.hpp"

#include <gtest/gtest.h>

#include "labelkit/errors.hpp"

namespace labelkit {
namespace {

TEST(Fixed, ParsesDecimalForms) {
  EXPECT_EQ(Fixed::parse("3.25").raw(), 3'250'000);
  EXPECT_EQ(Fixed::parse("-12").raw(), -12'000'000);
  EXPECT_EQ(Fixed::parse("0.000001").raw(), 1);
  EXPECT_EQ(Fixed::parse("-0.5").raw(), -500'000);
}

TEST(Fixed, RejectsTooManyDigitsAndJunk) {
  EXPECT_THROW(Fixed::parse("0.0000001"), Error);
  EXPECT_THROW(Fixed::parse("abc"), Error);
  EXPECT_THROW(Fixed::parse(""), Error);
}

TEST(Fixed, ShortestStringRoundTrips) {
  for (const char* s : {"3.25", "-1", "0", "0.000001", "123456.5"}) {
    EXPECT_EQ(Fixed::parse(s).to_string(), s);
  }
}

TEST(Fixed, OrdersByValue) {
  EXPECT_LT(Fixed::parse("-1"), Fixed::parse("0.5"));
  EXPECT_EQ(Fixed::from_int(2), Fixed::parse("2.0"));
}

}  // namespace
}  // namespace labelkit
