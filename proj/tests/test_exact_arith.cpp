#include <gtest/gtest.h>

#include "kbound/errors.hpp"
#include "kbound/exact_arith.hpp"

using namespace kbound;

TEST(Rat, NormalizesSignAndLowestTerms) {
  Rat r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rat(BigInt(0), BigInt(-7)).den(), 1);
  EXPECT_THROW(Rat(BigInt(1), BigInt(0)), InvalidArgument);
}

TEST(Rat, ParseAndPrint) {
  EXPECT_EQ(Rat::parse("-12/8").str(), "-3/2");
  EXPECT_EQ(Rat::parse("42").str(), "42");
  EXPECT_EQ(Rat::parse("10/5").str(), "2");
  EXPECT_THROW(Rat::parse("1/0"), InvalidArgument);
  EXPECT_THROW(Rat::parse("abc"), InvalidArgument);
  EXPECT_THROW(Rat::parse(""), InvalidArgument);
}

TEST(Rat, FloorCeilOnNegatives) {
  EXPECT_EQ(Rat::parse("-7/2").floor(), -4);
  EXPECT_EQ(Rat::parse("-7/2").ceil(), -3);
  EXPECT_EQ(Rat::parse("7/2").floor(), 3);
  EXPECT_EQ(Rat(5).floor(), 5);
  EXPECT_EQ(floor_div(BigInt(-1), BigInt(3)), -1);
}

TEST(Rat, ToIntegerRejectsFractions) {
  EXPECT_EQ(Rat(BigInt(10), BigInt(5)).to_integer(), 2);
  EXPECT_THROW(Rat(BigInt(1), BigInt(3)).to_integer(), InconsistencyError);
}

TEST(Rat, ArithmeticAndOrdering) {
  const Rat a = Rat::parse("1/3"), b = Rat::parse("1/6");
  EXPECT_EQ(a + b, Rat::parse("1/2"));
  EXPECT_EQ(a - b, b);
  EXPECT_EQ(a * b, Rat::parse("1/18"));
  EXPECT_EQ(a / b, Rat(2));
  EXPECT_THROW(a / Rat(0), InvalidArgument);
  EXPECT_LT(b, a);
  EXPECT_GT(Rat(-1), Rat::parse("-3/2"));
  EXPECT_EQ(abs(Rat::parse("-5/7")), Rat::parse("5/7"));
}

TEST(Rat, HugeValuesStayExact) {
  BigInt big = 1;
  for (int i = 0; i < 40; ++i) big *= 1000003;
  const Rat r(big + 1, big);
  EXPECT_EQ(r - Rat(1), Rat(BigInt(1), big));
  EXPECT_THROW(to_int64(big), InvalidArgument);
}

TEST(Euclid, Examples) {
  auto s = euclid_split(17, 4);
  EXPECT_EQ(s.quotient, 4);
  EXPECT_EQ(s.remainder, 1);
  s = euclid_split(35, 5);
  EXPECT_EQ(s.quotient, 7);
  EXPECT_EQ(s.remainder, 0);
  s = euclid_split(17, 3);
  EXPECT_EQ(s.quotient, 5);
  EXPECT_EQ(s.remainder, 2);
  s = euclid_split(-7, 3);
  EXPECT_EQ(s.quotient, -3);
  EXPECT_EQ(s.remainder, 2);
  EXPECT_THROW(euclid_split(5, 0), InvalidArgument);
  EXPECT_THROW(euclid_split(5, -2), InvalidArgument);
}

TEST(Binom, Examples) {
  EXPECT_EQ(binom(9, 3), 84);
  EXPECT_EQ(binom(2, 3), 0);
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(60, 30), BigInt("118264581564861424"));
}

TEST(Poly, BasicsAndTrim) {
  const Poly x = Poly::variable();
  const Poly p = x * x - Poly(1);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_TRUE((p - p).coefficients().empty());
  EXPECT_EQ(p(Rat(3)), Rat(8));
  EXPECT_EQ(p.derivative(), Poly(2) * x);
  EXPECT_EQ(p.str("d"), "d^2 - 1");
  EXPECT_EQ(Poly().str(), "0");
}

TEST(Poly, ComposeAffine) {
  const Poly x = Poly::variable();
  const Poly p = x * x * x - Poly(2) * x + Poly(5);
  const Poly q = p.compose_affine(Rat(20), Rat(19));
  for (int k = -3; k <= 3; ++k) EXPECT_EQ(q(Rat(k)), p(Rat(20 * k + 19)));
}

TEST(Poly, PrimitiveIntegerCoefficients) {
  const Poly p(std::vector<Rat>{Rat::parse("-1/2"), Rat::parse("3/4"), Rat::parse("1/6")});
  const auto c = p.primitive_integer_coefficients();
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], -6);
  EXPECT_EQ(c[1], 9);
  EXPECT_EQ(c[2], 2);
}

TEST(SignCertificate, Examples) {
  const Poly d = Poly::variable();
  auto c = sign_certificate(d * d - Poly(1), BigInt(2), Sign::positive);
  EXPECT_TRUE(c.holds());
  EXPECT_GE(c.tail_bound, 2);

  auto cubic = sign_certificate(d * d * d - Poly(10) * d * d + Poly(27) * d - Poly(23), BigInt(7),
                                Sign::positive, "r");
  EXPECT_TRUE(cubic.holds());
  EXPECT_EQ(cubic.tail_bound, 28);

  const Poly reduce = Poly(3) * d * d - Poly(17) * d -
                      Poly(22) * (Poly(Rat::parse("1/10")) * d * d + Poly(Rat::parse("1/2")) * d);
  EXPECT_EQ(reduce, Poly(Rat::parse("4/5")) * d * d - Poly(28) * d);
  auto r = sign_certificate(reduce, BigInt(36), Sign::positive);
  EXPECT_TRUE(r.holds());
  for (int x = 36; x <= 100; ++x) EXPECT_GT(Rat(x) * Rat(x) * Rat(3) - Rat(17 * x) - Rat(22) *
                                                (Rat(x * x, 1) / Rat(10) + Rat(x) / Rat(2)),
                                            Rat(0));
}

TEST(SignCertificate, FindsLeastCounterexample) {
  const Poly d = Poly::variable();
  auto c = sign_certificate((d - Poly(10)) * (d - Poly(12)), BigInt(0), Sign::positive);
  ASSERT_TRUE(c.counterexample.has_value());
  EXPECT_EQ(*c.counterexample, 10);
  EXPECT_FALSE(c.holds());
  auto nn = sign_certificate((d - Poly(10)) * (d - Poly(10)), BigInt(0), Sign::nonnegative);
  EXPECT_TRUE(nn.holds());
}

TEST(SignCertificate, WrongLeadingSignIsATailFailure) {
  const Poly d = Poly::variable();
  auto c = sign_certificate(Poly(100) - d, BigInt(0), Sign::positive);
  EXPECT_FALSE(c.tail_ok);
  ASSERT_TRUE(c.counterexample.has_value());
  EXPECT_EQ(*c.counterexample, 100);
  // All scanned points positive, but the tail is negative.
  auto t = sign_certificate(Poly(-1) * d * d + Poly(1000), BigInt(0), Sign::positive);
  EXPECT_FALSE(t.holds());
}

TEST(SignCertificate, Errors) {
  EXPECT_THROW(sign_certificate(Poly(), BigInt(0), Sign::positive), InvalidArgument);
  const Poly d = Poly::variable();
  EXPECT_THROW(sign_certificate(d - Poly(BigInt("1000000000000")), BigInt(0), Sign::positive),
               InvalidArgument);
  EXPECT_THROW(parse_sign("sideways"), InvalidArgument);
  EXPECT_EQ(parse_sign(to_string(Sign::nonpositive)), Sign::nonpositive);
}
