#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kbound/certificate.hpp"

namespace kbound {

namespace claims {
inline constexpr const char* kR4Reduce = "R4.reduce";
inline constexpr const char* kR4S2 = "R4.s2";
inline constexpr const char* kR4S3 = "R4.s3";
inline constexpr const char* kR4S4Low = "R4.s4.x<=6";
inline constexpr const char* kR4S4High = "R4.s4.x>6";
inline constexpr const char* kR6Spanned = "R6.spanned.quadratic";
inline constexpr const char* kR6Scroll = "R6.scroll.psi";
inline constexpr const char* kR5Remark = "R5.remark.psi";
inline constexpr const char* kR5Abs = "R5.abs";
inline constexpr const char* kR5Seed4916 = "R5.profile.seed-4-9-16";
inline constexpr const char* kR5Seed41019 = "R5.profile.seed-4-10-19";
inline constexpr const char* kR5G1 = "R5.G1";
inline constexpr const char* kR5Deg4Reduction = "R5.deg4.reduction";
inline constexpr const char* kR5Deg4Cubic = "R5.deg4.cubic";
inline constexpr const char* kAppendixMin = "APPENDIX.min";
inline constexpr const char* kSharpness = "SHARPNESS";
}  // namespace claims

/// Every claim id the aggregate verdict must contain, sorted.
std::vector<std::string> known_claim_ids();

struct VerifyOptions {
  unsigned jobs = 1;
};

/// Degree threshold of the main theorem (d > 35).
inline constexpr std::int64_t kTheoremMinDegree = 36;

// Surfaces in P^4: reduction to genus inequalities under the Halphen bounds.
std::vector<Certificate> verify_r4(std::int64_t d_from, std::int64_t d_to,
                                   const VerifyOptions& opts = {});

// Surfaces in P^r, r >= 5, with K + H spanned. For r >= 9 the certificate also
// covers every larger r.
Certificate verify_r_ge6_spanned(std::int64_t r);
// Scrolls in P^r, r >= 6. For r >= 7 the certificate also covers every larger r.
Certificate verify_r_ge6_scroll(std::int64_t r);
// psi(5, d) = eps^2 - 4 eps + 3, checked symbolically and on [6, d_to].
Certificate verify_r5_remark(std::int64_t d_to = 10000);
// Surfaces in P^5 with g = G(5; d): the exclusion chain down to the cubic scroll.
std::vector<Certificate> verify_r5_exclusion(std::int64_t d_from, std::int64_t d_to,
                                             const VerifyOptions& opts = {});
// Minimization of phi over the admissible range.
Certificate verify_appendix(std::int64_t d_from, std::int64_t d_to,
                            const VerifyOptions& opts = {});
// The extremal class attains -d(d-6) for even d and nothing else does.
Certificate verify_sharpness(std::int64_t d_from, std::int64_t d_to,
                             const VerifyOptions& opts = {});

struct CaseVerdict {
  std::int64_t d_from = 0;
  std::int64_t d_to = 0;
  std::vector<Certificate> certificates;
  /// True iff no certificate carries a counterexample.
  bool overall = false;
};

/// Sorts certificates by claim id, then parameters, and computes `overall`.
CaseVerdict make_verdict(std::int64_t d_from, std::int64_t d_to,
                         std::vector<Certificate> certificates);

CaseVerdict verify_theorem(std::int64_t d_from, std::int64_t d_to, const VerifyOptions& opts = {});

}  // namespace kbound
