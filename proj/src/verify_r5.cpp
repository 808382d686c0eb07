#include <algorithm>
#include <array>

#include "kbound/theorem_verifier.hpp"
#include "verify_internal.hpp"

namespace kbound {

using detail::D;
using detail::fail_unless;
using detail::frac;

namespace {

constexpr std::int64_t kAbsThreshold = 19;
constexpr std::int64_t kProfileThreshold = 31;
constexpr std::int64_t kCubicThreshold = 25;

// d^2/8 - 3d/4 + 1
Poly scroll_genus_floor() {
  return Poly(frac(1, 8)) * D() * D() - Poly(frac(3, 4)) * D() + Poly(1);
}

// -d^3 + 24d^2 + (-9q^2 + 18q - 125 + 72t)d - 2q^3 + 42q^2 - 70q + 174 - 360t + 24tq
Poly deg4_cubic(std::int64_t q) {
  const std::int64_t t = q == 3 ? 1 : 0;
  return Poly(-1) * D() * D() * D() + Poly(24) * D() * D() +
         Poly(-9 * q * q + 18 * q - 125 + 72 * t) * D() +
         Poly(-2 * q * q * q + 42 * q * q - 70 * q + 174 - 360 * t + 24 * t * q);
}

// C(p,2) d - 8 C(p+1,3) + t p with p = (d - 1 - q)/4, as a polynomial in d.
Poly weighted_defect_poly(std::int64_t q) {
  const std::int64_t t = q == 3 ? 1 : 0;
  const Poly p = (D() - Poly(1 + q)) * Poly(frac(1, 4));
  const Poly c2 = p * (p - Poly(1)) * Poly(frac(1, 2));
  const Poly c3 = (p + Poly(1)) * p * (p - Poly(1)) * Poly(frac(1, 6));
  return c2 * D() - Poly(8) * c3 + Poly(t) * p;
}

// -W + (d-4) G(4;d,4) - (d-3)(d^2/8 - 3d/4 + 1): nonnegative iff the scroll fits.
Poly deg4_slack(std::int64_t q) {
  return -weighted_defect_poly(q) + (D() - Poly(4)) * pi1_poly(q) -
         (D() - Poly(3)) * scroll_genus_floor();
}

Certificate abs_certificate(std::int64_t d_from, std::int64_t d_to, const VerifyOptions& opts) {
  Certificate c;
  c.claim_id = claims::kR5Abs;
  c.params = {{"d_from", d_from}, {"d_to", d_to}, {"threshold", kAbsThreshold}};
  c.paper_anchor = "case r=5: inequality (abs)";
  c.hypotheses = {"g = G(5;d)", "g <= G(4;d,5) when S lies on no threefold of degree < 5 (d > 143)"};
  // Both closed forms depend on d mod 5 and d mod 4, so split d by residue mod 20.
  for (std::int64_t j = 0; j < 20; ++j) {
    const std::int64_t base = kAbsThreshold + j;
    const std::int64_t v = (base - 1) % 5, eps = (base - 1) % 4;
    const Poly diff = (pi2_poly(v) - castelnuovo_poly(5, eps)).compose_affine(Rat(20), Rat(base));
    c.add_sign(sign_certificate(diff, BigInt(0), Sign::negative, "k",
                                "G(4;d,5) - G(5;d) < 0 for d = 20k + " + std::to_string(base)));
  }
  c.sweep("G(4;d,5) < G(5;d)", d_from, d_to, kAbsThreshold, opts.jobs,
          [](std::int64_t d) -> std::optional<std::string> {
            const Rat lhs = pi2_bound(d).bound, rhs = castelnuovo_bound(5, d).bound;
            return fail_unless(lhs < rhs, lhs.str() + " >= " + rhs.str());
          });
  const Rat at18 = pi2_bound(18).bound, g18 = castelnuovo_bound(5, 18).bound;
  c.notes = {"d = 18 (not asserted): G(4;18,5) = " + at18.str() + ", G(5;18) = " + g18.str()};
  c.finalize();
  return c;
}

Certificate seed_certificate(const char* id, const std::array<std::int64_t, 3>& seed,
                             std::int64_t d_from, std::int64_t d_to, const VerifyOptions& opts) {
  Certificate c;
  c.claim_id = id;
  c.params = {{"d_from", d_from},  {"d_to", d_to},     {"threshold", kProfileThreshold},
              {"seed1", seed[0]}, {"seed2", seed[1]}, {"seed3", seed[2]}};
  c.paper_anchor = "case r=5: profile propagation (comp)";
  c.hypotheses = {"h_Gamma(1..3) >= seed", "h_Gamma(i) >= min(d, h_Gamma(i-3) + h_Gamma(3) - 1)",
                  "g <= sum (d - h_Gamma(i))"};
  const std::int64_t step = seed[2] - 1;
  c.sweep("propagated profile dominates h and its genus is below G(5;d)", d_from, d_to,
          kProfileThreshold, opts.jobs, [&](std::int64_t d) -> std::optional<std::string> {
            if (seed[2] > d) return "seed exceeds d";
            const HilbertProfile prop = propagate_profile(seed, d);
            const HilbertProfile h = pi2_profile(d);
            const std::int64_t last = std::max(prop.stabilization_index(), h.stabilization_index());
            for (std::int64_t i = 1; i <= last; ++i) {
              if (prop.value_at(i) < h.value_at(i)) return "profile below h at i = " + std::to_string(i);
              if (i >= 4 && std::min(d, h.value_at(i - 3) + step) < h.value_at(i)) {
                return "min(d, h(i-3) + " + std::to_string(step) + ") < h(i) at i = " +
                       std::to_string(i);
              }
            }
            const Rat g = genus_from_profile(prop);
            const Rat pi2 = pi2_bound(d).bound;
            const Rat cast = castelnuovo_bound(5, d).bound;
            if (!(g <= pi2)) return "defect sum " + g.str() + " > G(4;d,5) = " + pi2.str();
            return fail_unless(g < cast, "defect sum " + g.str() + " >= G(5;d) = " + cast.str());
          });
  c.finalize();
  return c;
}

Certificate g1_certificate() {
  Certificate c;
  c.claim_id = claims::kR5G1;
  c.paper_anchor = "case r=5: inequality (G1)";
  c.hypotheses = {"g = G(5;d) with d - 1 = 4m + eps, 0 < eps <= 3"};
  for (std::int64_t eps = 1; eps <= 3; ++eps) {
    detail::add_sign_or_constant(c, castelnuovo_poly(5, eps) - scroll_genus_floor(), 6,
                                 Sign::nonnegative, "d",
                                 "G(5;d) >= d^2/8 - 3d/4 + 1 (eps=" + std::to_string(eps) + ")");
  }
  c.finalize();
  return c;
}

Certificate reduction_certificate(std::int64_t d_from, std::int64_t d_to,
                                  const VerifyOptions& opts) {
  Certificate c;
  c.claim_id = claims::kR5Deg4Reduction;
  c.params = {{"d_from", d_from}, {"d_to", d_to}, {"threshold", kCubicThreshold}};
  c.paper_anchor = "case r=5: S on a threefold of degree 4";
  c.hypotheses = {"S is a scroll with chi(O_S) = 1 - g", "h_Gamma(i) >= k(i)",
                  "1 - g >= 1 + sum (i-1)(d-k(i)) - (d-4)(G(4;d,4) - g)"};
  for (std::int64_t q = 0; q <= 3; ++q) {
    const Poly lhs = Poly(96) * deg4_slack(q);
    const Poly rhs = deg4_cubic(q);
    c.add_check("96 * slack = cubic (q=" + std::to_string(q) + ")", lhs == rhs,
                detail::identity_detail(lhs, rhs));
  }
  c.sweep("weighted defect identity and slack = cubic/96 < 0", d_from, d_to, kCubicThreshold,
          opts.jobs, [](std::int64_t d) -> std::optional<std::string> {
            const BigInt direct = weighted_defect_sum(d);
            if (direct != weighted_defect_closed_form(d)) return "weighted defect sum mismatch";
            const auto pi1 = pi1_bound(d);
            const Rat rd(d);
            const Rat slack = -Rat(direct) + (rd - Rat(4)) * pi1.bound -
                              (rd - Rat(3)) * scroll_genus_floor()(rd);
            const Rat cubic = deg4_cubic(pi1.param("q"))(rd);
            if (Rat(96) * slack != cubic) return "slack " + slack.str() + " vs cubic " + cubic.str();
            return fail_unless(slack < Rat(0), "slack " + slack.str() + " >= 0");
          });
  c.finalize();
  return c;
}

Certificate cubic_certificate(std::int64_t d_from, std::int64_t d_to, const VerifyOptions& opts) {
  Certificate c;
  c.claim_id = claims::kR5Deg4Cubic;
  c.params = {{"d_from", d_from}, {"d_to", d_to}, {"threshold", kCubicThreshold}};
  c.paper_anchor = "case r=5: cubic impossibility for d > 24";
  for (std::int64_t q = 0; q <= 3; ++q) {
    c.add_sign(sign_certificate(deg4_cubic(q), BigInt(kCubicThreshold), Sign::negative, "d",
                                "cubic < 0 for d > 24 (q=" + std::to_string(q) + ")"));
  }
  c.sweep("cubic < 0 at the residue of d", d_from, d_to, kCubicThreshold, opts.jobs,
          [](std::int64_t d) -> std::optional<std::string> {
            const Rat v = deg4_cubic(euclid_split(d - 1, 4).remainder)(Rat(d));
            return fail_unless(v < Rat(0), "cubic = " + v.str());
          });
  c.finalize();
  return c;
}

}  // namespace

std::vector<Certificate> verify_r5_exclusion(std::int64_t d_from, std::int64_t d_to,
                                             const VerifyOptions& opts) {
  std::vector<Certificate> out;
  out.push_back(abs_certificate(d_from, d_to, opts));
  out.push_back(seed_certificate(claims::kR5Seed4916, {4, 9, 16}, d_from, d_to, opts));
  out.push_back(seed_certificate(claims::kR5Seed41019, {4, 10, 19}, d_from, d_to, opts));
  out.push_back(g1_certificate());
  out.push_back(reduction_certificate(d_from, d_to, opts));
  out.push_back(cubic_certificate(d_from, d_to, opts));
  return out;
}

}  // namespace kbound
