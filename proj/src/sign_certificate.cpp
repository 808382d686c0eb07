#include "kbound/sign_certificate.hpp"

#include "kbound/errors.hpp"

namespace kbound {

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::positive: return "positive";
    case Sign::nonnegative: return "nonnegative";
    case Sign::negative: return "negative";
    case Sign::nonpositive: return "nonpositive";
  }
  return "?";
}

Sign parse_sign(std::string_view s) {
  if (s == "positive") return Sign::positive;
  if (s == "nonnegative") return Sign::nonnegative;
  if (s == "negative") return Sign::negative;
  if (s == "nonpositive") return Sign::nonpositive;
  throw InvalidArgument("unknown sign '" + std::string(s) + "'");
}

bool sign_allows(Sign s, int sgn) {
  switch (s) {
    case Sign::positive: return sgn > 0;
    case Sign::nonnegative: return sgn >= 0;
    case Sign::negative: return sgn < 0;
    case Sign::nonpositive: return sgn <= 0;
  }
  return false;
}

BigInt cauchy_bound(const Poly& p) {
  if (p.is_zero()) throw InvalidArgument("cauchy_bound: zero polynomial");
  Rat lead = abs(p.leading());
  Rat worst = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rat r = abs(p.coefficient(i)) / lead;
    if (r > worst) worst = r;
  }
  return (Rat(1) + worst).ceil();
}

namespace {

int eval_sign(const std::vector<BigInt>& coeffs, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc.sign();
}

}  // namespace

SignCertificate sign_certificate(const Poly& p, const BigInt& from, Sign asserted,
                                 std::string variable, std::string label) {
  if (p.is_zero()) throw InvalidArgument("sign_certificate: zero polynomial");
  SignCertificate cert;
  cert.polynomial = p;
  cert.variable = std::move(variable);
  cert.label = std::move(label);
  cert.from = from;
  cert.asserted_sign = asserted;
  cert.tail_bound = cauchy_bound(p);
  cert.scan_to = cert.tail_bound > from ? cert.tail_bound : from;
  // No root exceeds tail_bound, so the tail is nonzero and strict claims are fine too.
  cert.tail_ok = sign_allows(asserted, p.leading().sign());

  if (cert.scan_to - from > kMaxSignScan) {
    throw InvalidArgument("sign_certificate: scan range too large (" +
                          BigInt(cert.scan_to - from).str() + " points)");
  }
  // Positive multiples preserve the sign, so scan with integer arithmetic.
  const auto coeffs = p.primitive_integer_coefficients();
  for (BigInt x = from; x <= cert.scan_to; ++x) {
    if (!sign_allows(asserted, eval_sign(coeffs, x))) {
      cert.counterexample = x;
      return cert;
    }
  }
  if (!cert.tail_ok) {
    // Past the root bound the sign is strictly that of the leading coefficient.
    cert.counterexample = cert.scan_to + 1;
  }
  return cert;
}

}  // namespace kbound
