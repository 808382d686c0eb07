#include <gtest/gtest.h>

#include <limits>

#include "kbound/errors.hpp"
#include "kbound/scroll_surfaces.hpp"
#include "oracles.hpp"

using namespace kbound;

namespace {

BigInt ref_k2(const DivisorClass& c) { return oracle::k2({c.alpha, c.beta}); }

}  // namespace

TEST(Admissible, Examples) {
  EXPECT_FALSE(is_admissible({1, 0}));
  EXPECT_TRUE(is_admissible({2, -2}));
  EXPECT_TRUE(is_admissible({9, -9}));
  EXPECT_FALSE(is_admissible({0, 5}));
  EXPECT_FALSE(is_admissible({3, -4}));
  EXPECT_EQ(degree({9, -9}), 18);
  EXPECT_EQ(degree({1, 1}), 4);
  EXPECT_EQ(degree({2, -2}), 4);
}

TEST(IntersectionRing, Constants) {
  EXPECT_EQ(IntersectionRing::triple(kHyperplane, kHyperplane, kHyperplane), 3);
  EXPECT_EQ(IntersectionRing::triple(kHyperplane, kHyperplane, kRuling), 1);
  EXPECT_EQ(IntersectionRing::triple(kHyperplane, kRuling, kRuling), 0);
  EXPECT_EQ(IntersectionRing::triple(kRuling, kRuling, kRuling), 0);
}

TEST(Frame, Examples) {
  EXPECT_EQ(class_from_frame(ScrollFrame::make(18, 3)), (DivisorClass{9, -9}));
  // m = 5, eps = 2: alpha = 1, beta = 3 - 3(-4) = 15, degree 18.
  const DivisorClass left = class_from_frame(ScrollFrame::make(18, -5));
  EXPECT_EQ(left, (DivisorClass{1, 15}));
  EXPECT_EQ(degree(left), 18);
  EXPECT_EQ(class_from_frame(ScrollFrame::make(4, -1)), (DivisorClass{1, 1}));
  EXPECT_THROW(ScrollFrame::make(18, 4), RangeError);
  EXPECT_THROW(ScrollFrame::make(18, -6), RangeError);
  EXPECT_THROW(frame_from_class({9, -9}, 19), RangeError);
  EXPECT_THROW(ScrollFrame::make(3, 0), InvalidArgument);
}

TEST(Frame, RoundTripAndDegreeIdentity) {
  for (std::int64_t d = 4; d <= 600; ++d) {
    for (std::int64_t a = ScrollFrame::a_min(d); a <= ScrollFrame::a_max(d); ++a) {
      const ScrollFrame f = ScrollFrame::make(d, a);
      const DivisorClass c = class_from_frame(f);
      ASSERT_EQ(degree(c), d);
      ASSERT_EQ(frame_from_class(c, d), f);
    }
  }
}

// The frame range enumerates exactly the admissible classes of each degree.
TEST(Frame, CoversAdmissibleClassesExactly) {
  for (std::int64_t d = 4; d <= 600; ++d) {
    const auto ref = oracle::classes_of_degree(d);
    const auto lib = admissible_classes(d);
    ASSERT_EQ(lib.size(), ref.size()) << d;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      ASSERT_EQ(lib[i], (DivisorClass{ref[i].h, ref[i].w}));
    }
    ASSERT_EQ(static_cast<std::int64_t>(lib.size()),
              ScrollFrame::a_max(d) - ScrollFrame::a_min(d) + 1);
  }
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(18, -5), 8);
  EXPECT_EQ(phi(18, -3), 0);
  EXPECT_EQ(phi(18, 3), -216);
  EXPECT_THROW(phi(18, 4), RangeError);
  EXPECT_NO_THROW(phi_unchecked(18, 4));
}

TEST(K2, Examples) {
  EXPECT_EQ(k2_intersection({9, -9}), -216);
  EXPECT_EQ(k2_intersection({1, 12}), 8);
  EXPECT_EQ(k2_intersection({2, -2}), ref_k2({2, -2}));
  EXPECT_EQ(k2_intersection({2, -2}), phi(4, 0));
  EXPECT_EQ(k2_intersection({2, -2}), 8);
  EXPECT_THROW(k2_intersection({1, 0}), OutOfDomain);
}

TEST(K2, PhiIntersectionAndOracleAgree) {
  for (std::int64_t d = 4; d <= 300; ++d) {
    for (const auto& c : admissible_classes(d)) {
      const ScrollFrame f = frame_from_class(c, d);
      const BigInt k = k2_intersection(c);
      ASSERT_EQ(k, phi(d, f.a)) << c.alpha << "," << c.beta;
      ASSERT_EQ(k, ref_k2(c));
    }
  }
}

TEST(Genus, Examples) {
  EXPECT_EQ(sectional_genus({9, -9}), 28);
  EXPECT_EQ(sectional_genus({1, 1}), 0);
  // Degree-4 class (2,-2): a scroll needs K^2 = 8(1-g).
  const BigInt g = sectional_genus({2, -2});
  EXPECT_EQ(g, 0);
  EXPECT_EQ(k2_intersection({2, -2}), 8 * (1 - g));
}

TEST(Genus, ParityAndOracle) {
  for (std::int64_t d = 4; d <= 300; ++d) {
    for (const auto& c : admissible_classes(d)) {
      const std::int64_t twice = oracle::genus_times_two_minus_two({c.alpha, c.beta});
      ASSERT_EQ(twice % 2, 0);
      ASSERT_EQ(sectional_genus(c), twice / 2 + 1);
      ASSERT_GE(sectional_genus(c), 0);
    }
  }
}

TEST(Derivative, Examples) {
  EXPECT_EQ(phi_derivative(18, -3), 60);
  EXPECT_EQ(phi_derivative(18, 1), -68);
  // m = 5, eps = 2 in 324 m^2 - 936 m + 216 m eps + 820 - 312 eps + 36 eps^2.
  EXPECT_EQ(phi_discriminant(18), 324 * 25 - 936 * 5 + 216 * 10 + 820 - 624 + 144);
}

TEST(Derivative, DiscriminantMatchesDefinition) {
  for (std::int64_t d = 4; d <= 2000; ++d) {
    const auto s = euclid_split(d - 1, 3);
    const BigInt m = s.quotient, e = s.remainder;
    // phi'(a) = -18 a^2 + B a + C
    const BigInt B = 2 * (-9 * m + 5 + 3 * e);
    const BigInt C = 2 * m * (3 * e - 4) - 6 * e + 10;
    ASSERT_EQ(phi_discriminant(d), B * B + 72 * C) << d;
  }
}

TEST(Derivative, MonotoneShape) {
  for (std::int64_t d = 18; d <= 2000; ++d) {
    const std::int64_t m = euclid_split(d - 1, 3).quotient;
    for (std::int64_t a = -m + 2; a <= -1; ++a) ASSERT_GT(phi_derivative(d, a), 0) << d;
    for (std::int64_t a = 1; a <= ScrollFrame::a_max(d) + 3; ++a) ASSERT_LT(phi_derivative(d, a), 0);
    const CriticalInterval I = critical_interval(d);
    ASSERT_TRUE(I.real_roots);
    ASSERT_LT(I.a1_hi - I.a1_lo, Rat(1));
    ASSERT_LT(I.a2_hi - I.a2_lo, Rat(1));
    for (std::int64_t a = -m; a <= ScrollFrame::a_max(d); ++a) {
      const int sg = phi_derivative(d, a).sign();
      if (I.certainly_inside(Rat(a))) {
        ASSERT_GT(sg, 0);
      }
      if (I.certainly_outside(Rat(a))) {
        ASSERT_LE(sg, 0);
      }
      ASSERT_TRUE(I.certainly_inside(Rat(a)) || I.certainly_outside(Rat(a)))
          << "unclassified a=" << a << " at d=" << d;
    }
  }
}

TEST(Minimize, Examples) {
  const auto r18 = minimize_k2(18);
  EXPECT_EQ(r18.a_min, 3);
  EXPECT_EQ(r18.k2_min, -216);
  EXPECT_TRUE(r18.unique);
  const auto r19 = minimize_k2(19);
  EXPECT_EQ(r19.k2_min, -72);
  EXPECT_EQ(r19.closed_form, Rat(-72));
  EXPECT_GT(r19.k2_min, -19 * 13);
  const auto r20 = minimize_k2(20);
  EXPECT_EQ(r20.k2_min, -280);
  EXPECT_EQ(r20.a_min, ScrollFrame::a_max(20));
}

TEST(Minimize, AgreesWithOracleScan) {
  for (std::int64_t d = 18; d <= 1000; ++d) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    int hits = 0;
    for (const auto& c : oracle::classes_of_degree(d)) {
      const std::int64_t k = oracle::k2(c);
      if (k < best) {
        best = k;
        hits = 1;
      } else if (k == best) {
        ++hits;
      }
    }
    const auto r = minimize_k2(d);
    ASSERT_EQ(r.k2_min, best) << d;
    ASSERT_EQ(r.unique, hits == 1) << d;
    ASSERT_GE(best, -d * (d - 6));
    ASSERT_EQ(best == -d * (d - 6), d % 2 == 0) << d;
  }
}

TEST(Extremal, Examples) {
  const auto e18 = extremal_class(18);
  EXPECT_EQ(e18.cls, (DivisorClass{9, -9}));
  EXPECT_EQ(e18.k2, -216);
  EXPECT_EQ(e18.genus, 28);
  const auto e8 = extremal_class(8);
  EXPECT_EQ(e8.cls, (DivisorClass{4, -4}));
  EXPECT_EQ(e8.k2, -16);
  EXPECT_EQ(e8.genus, 3);
  const auto e36 = extremal_class(36);
  EXPECT_EQ(e36.cls, (DivisorClass{18, -18}));
  EXPECT_EQ(e36.k2, -1080);
  EXPECT_EQ(e36.genus, 136);
  EXPECT_THROW(extremal_class(19), InvalidArgument);
  EXPECT_THROW(extremal_class(6), InvalidArgument);
}

TEST(Scan, RowsForDegree18) {
  const auto rows = scan_scroll(18);
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows.front().a, -5);
  EXPECT_EQ(rows.back().a, 3);
  EXPECT_TRUE(rows.back().extremal);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.admissible);
    EXPECT_EQ(r.degree, 18);
    EXPECT_EQ(r.k2, phi(18, r.a));
  }
  const auto bad = describe_class({1, 0});
  EXPECT_FALSE(bad.admissible);
  EXPECT_EQ(bad.degree, 3);
}
