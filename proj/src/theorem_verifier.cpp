#include "kbound/theorem_verifier.hpp"

#include <algorithm>

namespace kbound {

std::vector<std::string> known_claim_ids() {
  std::vector<std::string> ids{
      claims::kR4Reduce,   claims::kR4S2,          claims::kR4S3,         claims::kR4S4Low,
      claims::kR4S4High,   claims::kR6Spanned,     claims::kR6Scroll,     claims::kR5Remark,
      claims::kR5Abs,      claims::kR5Seed4916,    claims::kR5Seed41019,  claims::kR5G1,
      claims::kR5Deg4Reduction, claims::kR5Deg4Cubic, claims::kAppendixMin, claims::kSharpness};
  std::sort(ids.begin(), ids.end());
  return ids;
}

CaseVerdict make_verdict(std::int64_t d_from, std::int64_t d_to,
                         std::vector<Certificate> certificates) {
  std::stable_sort(certificates.begin(), certificates.end(),
                   [](const Certificate& a, const Certificate& b) {
                     if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
                     return a.params < b.params;
                   });
  CaseVerdict v{d_from, d_to, std::move(certificates), true};
  for (const auto& c : v.certificates) {
    if (c.status == Status::counterexample) v.overall = false;
  }
  return v;
}

CaseVerdict verify_theorem(std::int64_t d_from, std::int64_t d_to, const VerifyOptions& opts) {
  std::vector<Certificate> all = verify_r4(d_from, d_to, opts);
  for (std::int64_t r = 5; r <= 9; ++r) all.push_back(verify_r_ge6_spanned(r));
  all.push_back(verify_r_ge6_scroll(6));
  all.push_back(verify_r_ge6_scroll(7));
  all.push_back(verify_r5_remark(std::max<std::int64_t>(10000, d_to)));
  for (auto& c : verify_r5_exclusion(d_from, d_to, opts)) all.push_back(std::move(c));
  all.push_back(verify_appendix(d_from, d_to, opts));
  all.push_back(verify_sharpness(d_from, d_to, opts));
  return make_verdict(d_from, d_to, std::move(all));
}

}  // namespace kbound
