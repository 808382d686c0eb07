#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "kbound/errors.hpp"
#include "kbound/theorem_verifier.hpp"
#include "oracles.hpp"

using namespace kbound;

namespace {

const Certificate* find(const std::vector<Certificate>& certs, const std::string& id) {
  for (const auto& c : certs) {
    if (c.claim_id == id) return &c;
  }
  return nullptr;
}

// Re-evaluates every issued sign certificate at points past its start, with
// plain rational evaluation rather than the scanning code.
void rescan(const Certificate& c, std::mt19937_64& rng) {
  for (const auto& s : c.sign_certificates) {
    ASSERT_TRUE(s.holds()) << c.claim_id << ": " << s.label;
    const std::int64_t from = to_int64(s.from);
    std::uniform_int_distribution<std::int64_t> pick(from, from + 100000);
    for (int k = 0; k < 200; ++k) {
      const std::int64_t x = k < 50 ? from + k : pick(rng);
      ASSERT_TRUE(sign_allows(s.asserted_sign, s.polynomial(Rat(x)).sign()))
          << c.claim_id << ": " << s.label << " at " << x;
    }
  }
}

}  // namespace

TEST(Verifier, FullRangeVerifiedAndComplete) {
  const CaseVerdict v = verify_theorem(36, 200, {2});
  EXPECT_TRUE(v.overall);
  std::set<std::string> seen;
  for (const auto& c : v.certificates) {
    EXPECT_EQ(c.status, Status::verified) << c.claim_id;
    seen.insert(c.claim_id);
  }
  const auto ids = known_claim_ids();
  EXPECT_EQ(seen, std::set<std::string>(ids.begin(), ids.end()));
  EXPECT_TRUE(std::is_sorted(v.certificates.begin(), v.certificates.end(),
                             [](const Certificate& a, const Certificate& b) {
                               return a.claim_id < b.claim_id;
                             }));
}

TEST(Verifier, SoundnessRescan) {
  std::mt19937_64 rng(11);
  const CaseVerdict v = verify_theorem(36, 120);
  for (const auto& c : v.certificates) rescan(c, rng);
}

TEST(Verifier, BelowThresholdIsReportedNotAsserted) {
  const CaseVerdict v = verify_theorem(20, 30);
  EXPECT_TRUE(v.overall);
  const Certificate* sharp = find(v.certificates, claims::kSharpness);
  ASSERT_NE(sharp, nullptr);
  EXPECT_EQ(sharp->status, Status::out_of_asserted_range);
  EXPECT_FALSE(sharp->below_threshold.empty());
  EXPECT_TRUE(sharp->ranges.empty());
}

TEST(Verifier, R4Examples) {
  const auto certs = verify_r4(36, 300);
  ASSERT_EQ(certs.size(), 5u);
  for (const auto& c : certs) {
    EXPECT_EQ(c.status, Status::verified) << c.claim_id;
    EXPECT_FALSE(c.sign_certificates.empty()) << c.claim_id;
  }
  // (reduce) with the s = 5 Halphen value: p(d) = (4/5)d^2 - 28d.
  for (std::int64_t d = 36; d <= 100; ++d) {
    const Rat g = Rat(d * d, 10) + Rat(d, 2) + Rat(1);
    EXPECT_LT(Rat(22) * (g - Rat(1)), Rat(3 * d * d - 17 * d));
  }
  EXPECT_EQ(find(certs, claims::kR4S2)->params.back().second, 13);
}

TEST(Verifier, SpannedCases) {
  for (std::int64_t r = 5; r <= 12; ++r) {
    const Certificate c = verify_r_ge6_spanned(r);
    EXPECT_EQ(c.status, Status::verified) << r;
  }
  EXPECT_THROW(verify_r_ge6_spanned(4), InvalidArgument);
  EXPECT_GE(Rat(8), Rat(35) / Rat(5));
}

TEST(Verifier, ScrollPsi) {
  for (std::int64_t r = 6; r <= 12; ++r) EXPECT_EQ(verify_r_ge6_scroll(r).status, Status::verified);
  // psi(6, 10): d - 1 = 9 = 5 + 4 so eps = 4.
  const Rat g = castelnuovo_bound(6, 10).bound;
  EXPECT_EQ(Rat(8) * (Rat(1) - g) + Rat(10 * 4), Rat(16));
  EXPECT_EQ(7 * 7 * 7 - 10 * 49 + 27 * 7 - 23, 19);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t r = std::uniform_int_distribution<std::int64_t>(-1000, 1000)(rng);
    const std::int64_t e = std::uniform_int_distribution<std::int64_t>(-1000, 1000)(rng);
    EXPECT_EQ(r * r * r - 9 * r * r + 27 * r - 23 + 4 * e * e - 4 * e * r,
              r * r * r - 10 * r * r + 27 * r - 23 + (r - 2 * e) * (r - 2 * e));
  }
}

TEST(Verifier, RemarkTable) {
  const Certificate c = verify_r5_remark(2000);
  EXPECT_EQ(c.status, Status::verified);
  const std::int64_t table[4] = {3, 0, -1, 0};
  for (std::int64_t d = 6; d <= 400; ++d) {
    const std::int64_t eps = oracle::divide(d - 1, 4).r;
    const std::int64_t psi = 8 * (1 - oracle::castelnuovo(5, d)) + d * (d - 6);
    EXPECT_EQ(psi, table[eps]) << d;
  }
}

TEST(Verifier, R5Exclusion) {
  const auto certs = verify_r5_exclusion(31, 400);
  for (const auto& c : certs) EXPECT_EQ(c.status, Status::verified) << c.claim_id;
  // (abs) at d = 31
  EXPECT_LT(Rat(oracle::pi2(31)), Rat(oracle::castelnuovo(5, 31)));
  // cubic at q = 0, t = 0, d = 25
  const std::int64_t d = 25;
  EXPECT_EQ(-d * d * d + 24 * d * d - 125 * d + 174, -3576);
  const Certificate* cubic = find(certs, claims::kR5Deg4Cubic);
  ASSERT_NE(cubic, nullptr);
  ASSERT_EQ(cubic->sign_certificates.size(), 4u);
  EXPECT_EQ(cubic->sign_certificates[0].polynomial(Rat(25)), Rat(-3576));
  // seed (4,9,16) dominates pi2 pointwise at d = 31
  const auto seed = propagate_profile({4, 9, 16}, 31);
  const auto p2 = pi2_profile(31);
  for (std::int64_t i = 1; i <= 12; ++i) EXPECT_GE(seed.value_at(i), p2.value_at(i)) << i;
}

TEST(Verifier, AppendixAndSharpness) {
  EXPECT_EQ(verify_appendix(18, 400).status, Status::verified);
  EXPECT_EQ(verify_sharpness(36, 400).status, Status::verified);
  // Odd degrees never reach -d(d-6).
  for (std::int64_t d = 37; d <= 200; d += 2) {
    for (const auto& c : oracle::classes_of_degree(d)) EXPECT_GT(oracle::k2(c), -d * (d - 6));
  }
}

TEST(CertificateMechanics, FailuresCarryWitnesses) {
  Certificate c;
  c.claim_id = "demo";
  c.sweep("even", 1, 10, 4, 2, [](std::int64_t d) -> std::optional<std::string> {
    if (d % 7 == 0) return "hit " + std::to_string(d);
    return std::nullopt;
  });
  c.finalize();
  EXPECT_EQ(c.status, Status::counterexample);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_NE(c.witness->find('7'), std::string::npos);

  Certificate low;
  low.sweep("below", 1, 3, 4, 1, [](std::int64_t) { return std::optional<std::string>("x"); });
  low.finalize();
  EXPECT_EQ(low.status, Status::out_of_asserted_range);

  Certificate bad_sign;
  bad_sign.add_sign(sign_certificate(Poly(5) - Poly::variable(), BigInt(0), Sign::positive));
  bad_sign.finalize();
  EXPECT_EQ(bad_sign.status, Status::counterexample);
  EXPECT_TRUE(bad_sign.witness.has_value());

  const CaseVerdict v = make_verdict(1, 10, {c, low});
  EXPECT_FALSE(v.overall);
}

TEST(CertificateMechanics, ParallelSweepIsDeterministic) {
  auto run = [](unsigned jobs) {
    Certificate c;
    c.sweep("mod", 1, 20000, 1, jobs, [](std::int64_t d) -> std::optional<std::string> {
      if (d % 997 == 0) return "d=" + std::to_string(d);
      return std::nullopt;
    });
    return c.ranges.at(0);
  };
  const RangeReport a = run(1), b = run(8);
  EXPECT_EQ(a.failures, b.failures);
  EXPECT_EQ(a.first_failure, b.first_failure);
  EXPECT_EQ(a.first_failure, 997);
  EXPECT_EQ(a.checked, 20000);
}
