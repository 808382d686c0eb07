#include <array>

#include "kbound/theorem_verifier.hpp"
#include "verify_internal.hpp"

namespace kbound {

using detail::D;
using detail::fail_unless;
using detail::frac;

namespace {

std::string eps_tag(std::int64_t eps) { return " (eps=" + std::to_string(eps) + ")"; }

// (r-4)d^2 - (3r-10)d + 2(r + eps^2 - eps r + 2 eps - 3)
Poly spanned_quadratic(std::int64_t r, std::int64_t eps) {
  return Poly(r - 4) * D() * D() - Poly(3 * r - 10) * D() +
         Poly(2 * (r + eps * eps - eps * r + 2 * eps - 3));
}

// 8(1 - G(r;d)) + d(d-6) for fixed residue eps of d - 1 mod r - 1.
Poly psi_poly(std::int64_t r, std::int64_t eps) {
  return Poly(8) * (Poly(1) - castelnuovo_poly(r, eps)) + D() * (D() - Poly(6));
}

}  // namespace

Certificate verify_r_ge6_spanned(std::int64_t r) {
  if (r < 5) throw InvalidArgument("verify_r_ge6_spanned: requires r >= 5");
  Certificate c;
  c.claim_id = claims::kR6Spanned;
  c.params = {{"r", r}};
  c.paper_anchor = "case r>=6 (and r=5): O_S(K+H) spanned";
  c.hypotheses = {"O_S(K_S + H) is spanned, so (K_S + H)^2 >= 0",
                  "g <= G(r-1; d) (Castelnuovo bound for the hyperplane section)"};
  const std::int64_t d0 = r == 5 ? 6 : r - 1;
  for (std::int64_t eps = 0; eps <= r - 3; ++eps) {
    // d - 4(G(r-1;d) - 1) + d(d-6) = Q / (r - 2)
    const Poly lhs = D() - Poly(4) * (castelnuovo_poly(r - 1, eps) - Poly(1)) + D() * (D() - Poly(6));
    const Poly rhs = spanned_quadratic(r, eps) * Poly(frac(1, r - 2));
    c.add_check("d - 4(G(r-1;d)-1) + d(d-6) = Q/(r-2)" + eps_tag(eps), lhs == rhs,
                detail::identity_detail(lhs, rhs));
    c.add_sign(sign_certificate(spanned_quadratic(r, eps), BigInt(d0), Sign::positive, "d",
                                "Q(d) > 0 for d >= " + std::to_string(d0) + eps_tag(eps)));
  }
  if (r >= 9) {
    // Argument valid uniformly in r: drop the eps terms, then d >= r-1 >= (5r-10)/(r-4).
    const Poly R = Poly::variable();
    c.add_sign(sign_certificate(R * R - Poly(10) * R + Poly(14), BigInt(9), Sign::positive, "r",
                                "(r-1)(r-4) - (5r-10) > 0 for all r >= 9"));
    c.add_sign(sign_certificate(R - Poly(3), BigInt(9), Sign::positive, "r",
                                "r + eps^2 + 2eps - 3 >= r - 3 > 0"));
    c.add_check("r - 1 >= (5r - 10)/(r - 4)",
                Rat(r - 1) >= Rat(5 * r - 10) / Rat(r - 4));
    for (std::int64_t eps = 0; eps <= r - 3; ++eps) {
      const Poly dropped = Poly(r - 4) * D() * D() - Poly(3 * r - 10) * D() - Poly(2 * eps * r);
      c.add_check("Q >= (r-4)d^2 - (3r-10)d - 2 eps r" + eps_tag(eps),
                  (spanned_quadratic(r, eps) - dropped).degree() <= 0 &&
                      (spanned_quadratic(r, eps) - dropped).leading().sign() >= 0);
      c.add_check("2rd - 2 eps r > 0 since eps <= r-3 < d" + eps_tag(eps), eps < r - 1);
    }
    c.add_sign(sign_certificate(Poly(r - 4) * D() * D() - Poly(5 * r - 10) * D(), BigInt(r - 1),
                                Sign::nonnegative, "d", "(r-4)d^2 - (5r-10)d >= 0 for d >= r-1"));
    c.notes = {"the r-variable certificates cover every r >= 9"};
  }
  c.finalize();
  return c;
}

Certificate verify_r_ge6_scroll(std::int64_t r) {
  if (r < 6) throw InvalidArgument("verify_r_ge6_scroll: requires r >= 6");
  Certificate c;
  c.claim_id = claims::kR6Scroll;
  c.params = {{"r", r}};
  c.paper_anchor = "case r>=6: O_S(K+H) not spanned, S a scroll";
  c.hypotheses = {"S is a scroll, so K_S^2 = 8(1 - g)", "g <= G(r; d)"};
  for (std::int64_t eps = 0; eps <= r - 2; ++eps) {
    const Poly psi = psi_poly(r, eps);
    const Poly printed = Poly(frac(r - 5, r - 1)) * (D() * D() - Poly(2) * D()) +
                         Poly(Rat(-4 * (-r + 2 - eps - eps * eps + eps * r)) / Rat(r - 1));
    c.add_check("psi(r,d) closed form" + eps_tag(eps), psi == printed,
                detail::identity_detail(psi, printed));
  }
  if (r == 6) {
    for (std::int64_t eps = 0; eps <= 4; ++eps) {
      c.add_sign(sign_certificate(psi_poly(6, eps), BigInt(5), Sign::positive, "d",
                                  "psi(6,d) > 0 for d > 4" + eps_tag(eps)));
    }
  } else {
    const Poly R = Poly::variable();
    const Poly cubic = R * R * R - Poly(10) * R * R + Poly(27) * R - Poly(23);
    c.add_sign(sign_certificate(cubic, BigInt(7), Sign::positive, "r",
                                "r^3 - 10r^2 + 27r - 23 > 0 for all r >= 7"));
    c.add_check("(r-5)/(r-1) > 0", r > 5);
    c.add_sign(sign_certificate(D() * D() - Poly(2) * D() - Poly((r - 1) * (r - 1) - 2 * (r - 1)),
                                BigInt(r - 1), Sign::nonnegative, "d",
                                "d^2 - 2d >= (r-1)^2 - 2(r-1) for d >= r-1"));
    for (std::int64_t eps = 0; eps <= r - 2; ++eps) {
      const Rat at_floor = psi_poly(r, eps)(Rat(r - 1));
      const Rat expected =
          Rat(r * r * r - 9 * r * r + 27 * r - 23 + 4 * eps + 4 * eps * eps - 4 * eps * r) /
          Rat(r - 1);
      c.add_check("psi(r,r-1)" + eps_tag(eps), at_floor == expected,
                  at_floor.str() + " vs " + expected.str());
      // Square completion, symbolically in r.
      const Poly E(eps);
      const Poly left = R * R * R - Poly(9) * R * R + Poly(27) * R - Poly(23) +
                        Poly(4) * E * E - Poly(4) * E * R;
      const Poly right = cubic + (R - Poly(2) * E) * (R - Poly(2) * E);
      c.add_check("square completion" + eps_tag(eps), left == right,
                  detail::identity_detail(left, right, "r"));
      c.add_check("4 eps >= 0" + eps_tag(eps), eps >= 0);
      c.add_sign(sign_certificate(psi_poly(r, eps), BigInt(r - 1), Sign::positive, "d",
                                  "psi(r,d) > 0 for d >= r-1" + eps_tag(eps)));
    }
    c.notes = {"the r-variable certificate covers every r >= 7"};
  }
  c.finalize();
  return c;
}

Certificate verify_r5_remark(std::int64_t d_to) {
  Certificate c;
  c.claim_id = claims::kR5Remark;
  c.params = {{"d_from", 6}, {"d_to", d_to}};
  c.paper_anchor = "remark on psi(5,d)";
  const std::array<std::int64_t, 4> table{3, 0, -1, 0};
  for (std::int64_t eps = 0; eps <= 3; ++eps) {
    const Poly psi = psi_poly(5, eps);
    const Poly expected(Rat(eps * eps - 4 * eps + 3));
    c.add_check("psi(5,d) = eps^2 - 4eps + 3" + eps_tag(eps), psi == expected,
                detail::identity_detail(psi, expected));
    c.add_check("table value" + eps_tag(eps),
                eps * eps - 4 * eps + 3 == table[static_cast<std::size_t>(eps)]);
  }
  c.sweep("psi(5,d) = eps^2 - 4eps + 3", 6, d_to, 6, 1,
          [](std::int64_t d) -> std::optional<std::string> {
            const auto g = castelnuovo_bound(5, d);
            const std::int64_t eps = g.param("eps");
            const Rat psi = Rat(8) * (Rat(1) - g.bound) + Rat(d) * Rat(d - 6);
            return fail_unless(psi == Rat(eps * eps - 4 * eps + 3), "psi = " + psi.str());
          });
  c.finalize();
  return c;
}

}  // namespace kbound
