#include <random>

#include "kbound/theorem_verifier.hpp"
#include "verify_internal.hpp"

namespace kbound {

using detail::D;
using detail::fail_unless;
using detail::frac;

namespace {

constexpr std::int64_t kR4Threshold = kTheoremMinDegree;

// 3d^2 - 17d, the right-hand side of 22(g-1) < 3d^2 - 17d.
Poly reduce_rhs() { return Poly(3) * D() * D() - Poly(17) * D(); }
// 3d^2 - 17d + 12, the right-hand side when chi >= 1.
Poly reduce2_rhs() { return reduce_rhs() + Poly(12); }

// Genus parametrized by x in [0, 9] on a quartic threefold.
Poly genus_at_x(const Rat& x) {
  return Poly(frac(1, 8)) * D() * D() + Poly((x - Rat(9)) / Rat(8)) * D() + Poly(1);
}

/// Fixed sample of rationals in (lo, hi], reproducible across runs.
std::vector<Rat> sample_x(const Rat& lo, const Rat& hi, int count) {
  std::mt19937_64 rng(0x6b626f756e64ULL);
  std::uniform_int_distribution<std::int64_t> pick(1, 997);
  std::vector<Rat> out;
  for (int i = 0; i < count; ++i) out.push_back(lo + (hi - lo) * Rat(BigInt(pick(rng)), BigInt(997)));
  return out;
}

std::string rat_point(std::int64_t d, const Rat& x) {
  return "d = " + std::to_string(d) + ", x = " + x.str();
}

// Halphen upper bound dominated by the simplified bound for every residue eps.
void add_halphen_simplification(Certificate& c, std::int64_t s, const Poly& simplified) {
  for (std::int64_t eps = 0; eps < s; ++eps) {
    // The difference is the constant (s-1-eps)(eps+1)(s-1)/(2s), zero at eps = s-1.
    const Poly diff = simplified - halphen_poly(s, eps);
    c.add_check("simplified bound >= Halphen s=" + std::to_string(s) + " (eps=" +
                    std::to_string(eps) + ")",
                diff.degree() <= 0 && diff.coefficient(0) >= Rat(0),
                "difference " + diff.str());
  }
}

Certificate halphen_case(const char* id, std::int64_t s, const Poly& simplified, const Poly& rhs,
                         std::int64_t coefficient, std::int64_t threshold, std::int64_t d_from,
                         std::int64_t d_to, const VerifyOptions& opts) {
  Certificate c;
  c.claim_id = id;
  c.params = {{"d_from", d_from}, {"d_to", d_to}, {"s", s}, {"threshold", threshold}};
  add_halphen_simplification(c, s, simplified);
  c.add_sign(sign_certificate(rhs - Poly(coefficient) * (simplified - Poly(1)), BigInt(threshold),
                              Sign::positive, "d",
                              std::to_string(coefficient) + "(g-1) < rhs with simplified bound"));
  c.sweep(std::to_string(coefficient) + "(G(3;d," + std::to_string(s) + ")-1) < rhs", d_from, d_to,
          threshold, opts.jobs, [&](std::int64_t d) -> std::optional<std::string> {
            if (d <= s * s - s) return "Halphen bound undefined for d <= s^2 - s";
            const Rat g = halphen_bound(d, s).bound;
            const Rat lhs = Rat(coefficient) * (g - Rat(1));
            const Rat r = rhs(Rat(d));
            return fail_unless(lhs < r, "lhs " + lhs.str() + " >= " + r.str());
          });
  return c;
}

}  // namespace

std::vector<Certificate> verify_r4(std::int64_t d_from, std::int64_t d_to,
                                   const VerifyOptions& opts) {
  std::vector<Certificate> out;

  // Not on any hypersurface of degree < 5: Halphen with s = 5 and chi >= 1 - g.
  {
    Certificate c = halphen_case(claims::kR4Reduce, 5,
                                 Poly(frac(1, 10)) * D() * D() + Poly(frac(1, 2)) * D() + Poly(1),
                                 reduce_rhs(), 22, kR4Threshold, d_from, d_to, opts);
    c.paper_anchor = "case r=4: no hypersurface of degree < 5, inequality (reduce)";
    c.hypotheses = {"chi(O_S) >= 1 - g",
                    "the hyperplane section H lies on no surface of degree < 5 in P^3 (d > 14)"};
    out.push_back(std::move(c));
  }
  // On a quadric or cubic hypersurface: general type, so chi >= 1.
  {
    Certificate c = halphen_case(claims::kR4S2, 2, Poly(frac(1, 4)) * D() * D() - D() + Poly(1),
                                 reduce2_rhs(), 10, 13, d_from, d_to, opts);
    c.paper_anchor = "case r=4, s=2: inequality (reduce2)";
    c.hypotheses = {"S is of general type for d > 12, hence chi(O_S) >= 1"};
    out.push_back(std::move(c));
  }
  {
    Certificate c = halphen_case(claims::kR4S3, 3,
                                 Poly(frac(1, 6)) * D() * D() - Poly(frac(1, 2)) * D() + Poly(1),
                                 reduce2_rhs(), 10, 8, d_from, d_to, opts);
    c.paper_anchor = "case r=4, s=3: inequality (reduce2)";
    c.hypotheses = {"S is of general type for d > 12, hence chi(O_S) >= 1"};
    c.notes = {"the inequality holds from d = 8; the general-type input needs d > 12"};
    out.push_back(std::move(c));
  }

  // Quartic hypersurface, 0 <= x <= 6.
  {
    Certificate c;
    c.claim_id = claims::kR4S4Low;
    c.params = {{"d_from", d_from}, {"d_to", d_to}, {"s", 4}, {"threshold", kR4Threshold}};
    c.paper_anchor = "case r=4, s=4, 0 <= x <= 6";
    c.hypotheses = {"chi(O_S) >= 1 - g",
                    "d^2/8 - 9d/8 + 1 <= g <= d^2/8 + 1 for surfaces on a quartic threefold"};
    const Poly lower = Poly(frac(1, 8)) * D() * D() - Poly(frac(9, 8)) * D() + Poly(1);
    const Poly upper = Poly(frac(1, 8)) * D() * D() + Poly(1);
    c.add_check("g(x=0) is the lower genus bound", genus_at_x(0) == lower,
                detail::identity_detail(genus_at_x(0), lower));
    c.add_check("g(x=9) is the upper genus bound", genus_at_x(9) == upper,
                detail::identity_detail(genus_at_x(9), upper));
    // g(x) is linear in x with slope d/8, so x <= 6 gives g <= g(6).
    c.add_sign(sign_certificate(Poly(frac(1, 8)) * D(), BigInt(1), Sign::positive, "d",
                                "dg/dx = d/8 > 0"));
    const Poly g6 = genus_at_x(6);
    c.add_check("g(6) = d^2/8 - 3d/8 + 1",
                g6 == Poly(frac(1, 8)) * D() * D() - Poly(frac(3, 8)) * D() + Poly(1));
    c.add_sign(sign_certificate(reduce_rhs() - Poly(22) * (g6 - Poly(1)), BigInt(kR4Threshold),
                                Sign::positive, "d", "22(g(6)-1) < 3d^2 - 17d"));
    std::vector<Rat> xs{Rat(0), Rat(6)};
    for (const Rat& x : sample_x(Rat(0), Rat(6), 6)) xs.push_back(x);
    c.sweep("22(g(x)-1) < 3d^2 - 17d on sampled x in [0,6]", d_from, d_to, kR4Threshold, opts.jobs,
            [&](std::int64_t d) -> std::optional<std::string> {
              const Rat rhs = reduce_rhs()(Rat(d));
              for (const Rat& x : xs) {
                if (!(Rat(22) * (genus_at_x(x)(Rat(d)) - Rat(1)) < rhs)) return rat_point(d, x);
              }
              return std::nullopt;
            });
    out.push_back(std::move(c));
  }

  // Quartic hypersurface, 6 < x <= 9: uses the Euler characteristic bound.
  {
    Certificate c;
    c.claim_id = claims::kR4S4High;
    c.params = {{"d_from", d_from}, {"d_to", d_to}, {"s", 4}, {"threshold", kR4Threshold}};
    c.paper_anchor = "case r=4, s=4, 6 < x <= 9";
    c.hypotheses = {
        "chi(O_S) >= d^3/96 - d^2/16 - 5d/3 - 333/16 - (d-3)d(9-x)/8 (external input; the "
        "constant -333/16 is taken as given)",
        "g <= d^2/8 + 1"};
    c.notes = {"the chain uses the x-free weakening of the chi bound; the x-dependent bound is "
               "checked at x = 9 and sampled x in (6, 9]"};
    const Poly weak = chi_lower_bound_s4_weak_poly();
    c.add_check("chi bound at x = 6 equals the weak bound", chi_lower_bound_s4_poly(6) == weak,
                detail::identity_detail(chi_lower_bound_s4_poly(6), weak));
    std::vector<Rat> xs{Rat(9)};
    for (const Rat& x : sample_x(Rat(6), Rat(9), 6)) xs.push_back(x);
    for (const Rat& x : xs) {
      const Poly diff = chi_lower_bound_s4_poly(x) - weak;
      const Poly expected = D() * (D() - Poly(3)) * Poly((x - Rat(6)) / Rat(8));
      c.add_check("chi(x) - chi_weak = d(d-3)(x-6)/8 at x = " + x.str(), diff == expected,
                  detail::identity_detail(diff, expected));
    }
    c.add_sign(sign_certificate(D() * (D() - Poly(3)), BigInt(4), Sign::positive, "d",
                                "d(d-3) > 0, so chi(x) > chi_weak for x > 6"));
    const Poly target = Poly(frac(1, 8)) * D() * D() * D() - Poly(frac(9, 4)) * D() * D() -
                        Poly(frac(47, 2)) * D() - Poly(frac(999, 4));
    const Poly lhs = reduce_rhs() + Poly(12) * weak;
    c.add_check("3d^2 - 17d + 12 chi_weak = d^3/8 - 9d^2/4 - 47d/2 - 999/4", lhs == target,
                detail::identity_detail(lhs, target));
    add_halphen_simplification(c, 4, Poly(frac(1, 8)) * D() * D() + Poly(1));
    c.add_sign(sign_certificate(target - Poly(10) * Poly(frac(1, 8)) * D() * D(),
                                BigInt(kR4Threshold), Sign::nonnegative, "d",
                                "10(g-1) <= d^3/8 - 9d^2/4 - 47d/2 - 999/4 with g = d^2/8 + 1"));
    c.sweep("K^2 > -d(d-6) from the double point formula at sampled x in (6,9]", d_from, d_to,
            kR4Threshold, opts.jobs, [&](std::int64_t d) -> std::optional<std::string> {
              const Rat rd(d);
              const Rat weak_value = weak(rd);
              for (const Rat& x : xs) {
                const Rat g = genus_at_x(x)(rd);
                const Rat chi = chi_lower_bound_s4_poly(x)(rd);
                if (!(chi > weak_value)) return rat_point(d, x) + ": chi(x) <= chi_weak";
                const Rat k2 = (rd * (rd - Rat(5)) - Rat(10) * (g - Rat(1)) + Rat(12) * chi) / Rat(2);
                if (!(k2 > -rd * (rd - Rat(6)))) return rat_point(d, x) + ": K^2 bound " + k2.str();
                if (!(Rat(10) * (g - Rat(1)) <= target(rd))) {
                  return rat_point(d, x) + ": weak chain fails";
                }
              }
              return std::nullopt;
            });
    out.push_back(std::move(c));
  }

  for (auto& c : out) c.finalize();
  return out;
}

}  // namespace kbound
