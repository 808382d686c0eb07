#include "kbound/scroll_surfaces.hpp"
#include "kbound/theorem_verifier.hpp"
#include "verify_internal.hpp"

namespace kbound {

using detail::D;
using detail::fail_unless;
using detail::frac;

namespace {

constexpr std::int64_t kAppendixThreshold = 18;

std::string eps_tag(std::int64_t eps) { return " (eps=" + std::to_string(eps) + ")"; }

void add_identity(Certificate& c, const std::string& name, const Poly& lhs, const Poly& rhs,
                  const char* var) {
  c.add_check(name, lhs == rhs, detail::identity_detail(lhs, rhs, var));
}

// Identities of the Appendix as polynomials in m, one residue eps at a time.
void add_symbolic_table(Certificate& c) {
  const Poly M = Poly::variable();
  for (std::int64_t eps = 0; eps <= 2; ++eps) {
    const Poly E(eps);
    const std::string tag = eps_tag(eps);
    auto phi_at = [&](const Poly& a) { return phi_expr<Poly>(M, E, a); };
    auto dphi_at = [&](const Poly& a) { return phi_derivative_expr<Poly>(M, E, a); };

    add_identity(c, "phi(-m) = 8" + tag, phi_at(-M), Poly(8), "m");
    add_identity(c, "phi(-m+1) = -9m + 17 - 3eps" + tag, phi_at(Poly(1) - M),
                 Poly(-9) * M + Poly(17 - 3 * eps), "m");
    add_identity(c, "phi(-m+2) = 0" + tag, phi_at(Poly(2) - M), Poly(0), "m");
    const Poly f0 = Poly(3) * M * M - Poly(7) * M + Poly(3) * M * E - Poly(4);
    add_identity(c, "phi(0) = (m-2)(3m^2 - 7m + 3m eps - 4)" + tag, phi_at(Poly(0)),
                 (M - Poly(2)) * f0, "m");
    const Poly f1 = Poly(3) * M * M - Poly(10) * M + Poly(3) * M * E + Poly(3) * E - Poly(17);
    add_identity(c, "phi(1) = (m-1)(3m^2 - 10m + 3m eps + 3eps - 17)" + tag, phi_at(Poly(1)),
                 (M - Poly(1)) * f1, "m");

    const Poly dp_left = Poly(18) * M + Poly(6 * eps - 42);
    add_identity(c, "phi'(-m+2) = 18m + 6eps - 42" + tag, dphi_at(Poly(2) - M), dp_left, "m");
    c.add_sign(sign_certificate(dp_left, BigInt(3), Sign::positive, "m", "phi'(-m+2) > 0" + tag));
    const Poly dp_minus1 = Poly(10) * M + Poly(6) * M * E - Poly(12 * eps + 18);
    add_identity(c, "phi'(-1) = 10m + 6m eps - 12eps - 18" + tag, dphi_at(Poly(-1)), dp_minus1, "m");
    c.add_sign(sign_certificate(dp_minus1, BigInt(2), Sign::positive, "m", "phi'(-1) > 0" + tag));
    const Poly dp_one = Poly(2) - Poly(26) * M + Poly(6) * M * E;
    add_identity(c, "phi'(1) = 2 - 26m + 6m eps" + tag, dphi_at(Poly(1)), dp_one, "m");
    c.add_sign(sign_certificate(dp_one, BigInt(1), Sign::negative, "m", "phi'(1) < 0" + tag));

    // phi' = -18a^2 + 2Ba + C; its discriminant (2B)^2 + 72C.
    const Poly B = Poly(-9) * M + Poly(5) + Poly(3) * E;
    const Poly C = dphi_at(Poly(0));
    const Poly disc = Poly(4) * B * B + Poly(72) * C;
    const Poly disc_expanded = Poly(324) * M * M - Poly(936) * M + Poly(216) * M * E +
                               Poly(820 - 312 * eps + 36 * eps * eps);
    add_identity(c, "discriminant of phi'" + tag, disc, disc_expanded, "m");
    c.add_sign(sign_certificate(disc, BigInt(3), Sign::positive, "m", "discriminant > 0" + tag));
    // phi'' = -36a + 2B < 0 for a >= 1, so phi' is decreasing there.
    c.add_sign(sign_certificate(Poly(36) - Poly(2) * B, BigInt(1), Sign::positive, "m",
                                "36 - 2B > 0" + tag));
    c.add_sign(sign_certificate(f0, BigInt(3), Sign::nonnegative, "m", "phi(0) factor >= 0" + tag));
    c.add_sign(sign_certificate(f1, BigInt(5), Sign::nonnegative, "m", "phi(1) factor >= 0" + tag));

    // phi at a* = p, where m + eps - 1 = 2p + q.
    for (std::int64_t q = 0; q <= 1; ++q) {
      const Poly P = Poly::variable();
      const Poly m_of_p = Poly(2) * P + Poly(q + 1 - eps);
      const Poly d_of_p = Poly(3) * m_of_p + Poly(eps + 1);
      const Poly value = phi_expr<Poly>(m_of_p, E, P);
      const Poly expected =
          q == 0 ? -d_of_p * (d_of_p - Poly(6))
                 : Poly(frac(-1, 4)) * d_of_p * d_of_p + Poly(frac(1, 2)) * d_of_p + Poly(frac(35, 4));
      add_identity(c, "phi(a*) closed form (q=" + std::to_string(q) + ")" + tag, value, expected, "p");
    }
  }
  c.add_sign(sign_certificate(D() * D() - Poly(9) * D() + Poly(14), BigInt(8), Sign::positive, "d",
                              "-3(d-1) + 11 > -d(d-6) for d > 7"));
  c.add_sign(sign_certificate(Poly(frac(-1, 4)) * D() * D() + Poly(frac(1, 2)) * D() +
                                  Poly(frac(35, 4)) + D() * (D() - Poly(6)),
                              BigInt(6), Sign::positive, "d",
                              "-d^2/4 + d/2 + 35/4 > -d(d-6) for d > 5"));
}

std::optional<std::string> check_degree(std::int64_t d) {
  const auto split = euclid_split(d - 1, 3);
  const std::int64_t m = split.quotient, eps = split.remainder;
  const std::int64_t a_star = ScrollFrame::a_max(d);
  const BigInt bound = -BigInt(d) * (d - 6);

  const MinimizeResult r = minimize_k2(d);
  if (r.k2_min < bound) return "minimum " + r.k2_min.str() + " below -d(d-6)";
  const bool even = d % 2 == 0;
  if ((r.k2_min == bound) != even) return "equality with -d(d-6) does not match parity";
  if (r.a_min != a_star || !r.unique) return "minimum not uniquely at a*";
  if (Rat(r.k2_min) != r.closed_form) {
    return "minimum " + r.k2_min.str() + " differs from closed form " + r.closed_form.str();
  }
  if (phi(d, -m) != 8 || phi(d, -m + 1) != -9 * m + 17 - 3 * eps || phi(d, -m + 2) != 0) {
    return "value table at a = -m, -m+1, -m+2";
  }
  if (phi(d, 0) != BigInt(m - 2) * (3 * m * m - 7 * m + 3 * m * eps - 4)) return "phi(0)";
  if (a_star >= 1 && phi(d, 1) != BigInt(m - 1) * (3 * m * m - 10 * m + 3 * m * eps + 3 * eps - 17)) {
    return "phi(1)";
  }
  const CriticalInterval ci = critical_interval(d);
  if (!ci.real_roots) return "phi' has no real roots";
  for (std::int64_t a = -m + 2; a <= -1; ++a) {
    if (phi_derivative(d, a).sign() <= 0) return "phi'(" + std::to_string(a) + ") <= 0";
    if (ci.certainly_outside(Rat(a))) return "a = " + std::to_string(a) + " classified outside I";
  }
  for (std::int64_t a = 1; a <= a_star; ++a) {
    if (phi_derivative(d, a).sign() >= 0) return "phi'(" + std::to_string(a) + ") >= 0";
    if (ci.certainly_inside(Rat(a))) return "a = " + std::to_string(a) + " classified inside I";
  }
  return std::nullopt;
}

std::optional<std::string> check_sharpness(std::int64_t d) {
  const BigInt bound = -BigInt(d) * (d - 6);
  std::int64_t attained = 0;
  DivisorClass where{};
  for (const DivisorClass& c : admissible_classes(d)) {
    const BigInt k2 = k2_intersection(c);
    if (k2 < bound) return "class (" + std::to_string(c.alpha) + ", " + std::to_string(c.beta) + ") below bound";
    if (k2 == bound) {
      ++attained;
      where = c;
    }
  }
  if (d % 2 != 0) return fail_unless(attained == 0, "odd degree attains -d(d-6)");
  if (attained != 1) return "bound attained by " + std::to_string(attained) + " classes";
  const ExtremalSurface ex = extremal_class(d);
  if (!(where == ex.cls)) return "bound attained away from (d/2, -d/2)";
  if (ex.k2 != bound) return "extremal K^2 " + ex.k2.str();
  const Rat genus_closed = Rat(d) * Rat(d) / Rat(8) - Rat(3 * d) / Rat(4) + Rat(1);
  if (Rat(ex.genus) != genus_closed) return "extremal genus " + ex.genus.str();
  if (phi(d, ScrollFrame::a_max(d)) != bound) return "phi(a*) differs from the intersection value";
  if (!(class_from_frame(ScrollFrame::make(d, ScrollFrame::a_max(d))) == ex.cls)) {
    return "a* does not index the extremal class";
  }
  return std::nullopt;
}

}  // namespace

Certificate verify_appendix(std::int64_t d_from, std::int64_t d_to, const VerifyOptions& opts) {
  Certificate c;
  c.claim_id = claims::kAppendixMin;
  c.params = {{"d_from", d_from}, {"d_to", d_to}, {"threshold", kAppendixThreshold}};
  c.paper_anchor = "Appendix: minimum of phi on [-m, (m+eps-1)/2]";
  c.hypotheses = {"S lies in the class indexed by a with -m <= a <= (m+eps-1)/2"};
  add_symbolic_table(c);
  c.sweep("exhaustive minimization and value table", std::max<std::int64_t>(d_from, 4), d_to,
          kAppendixThreshold, opts.jobs, check_degree);
  c.finalize();
  return c;
}

Certificate verify_sharpness(std::int64_t d_from, std::int64_t d_to, const VerifyOptions& opts) {
  Certificate c;
  c.claim_id = claims::kSharpness;
  c.params = {{"d_from", d_from}, {"d_to", d_to}, {"threshold", kTheoremMinDegree}};
  c.paper_anchor = "main theorem: sharpness and the extremal class";
  c.hypotheses = {"a surface of degree d in the class (d/2)(H - W) exists and is smooth"};
  // K^2 and 2g-2 on (x, -x) are polynomials of degree <= 3 in x, so agreement
  // at four points is agreement everywhere.
  bool k2_ok = true, genus_ok = true;
  for (std::int64_t x = 4; x <= 7; ++x) {
    const DivisorClass cls{x, -x};
    k2_ok = k2_ok && k2_intersection(cls) == -BigInt(2 * x) * (2 * x - 6);
    genus_ok = genus_ok && Rat(sectional_genus(cls)) == Rat(x * x - 3 * x + 2) / Rat(2);
  }
  c.add_check("K^2 of (d/2)(H - W) is -d(d-6) for all even d", k2_ok);
  c.add_check("genus of (d/2)(H - W) is d^2/8 - 3d/4 + 1 for all even d", genus_ok);
  c.sweep("only (d/2, -d/2) attains -d(d-6)", std::max<std::int64_t>(d_from, 4), d_to,
          kTheoremMinDegree, opts.jobs, check_sharpness);
  c.finalize();
  return c;
}

}  // namespace kbound
