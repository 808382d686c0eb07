#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "kbound/polynomial.hpp"

namespace kbound {

enum class Sign { positive, nonnegative, negative, nonpositive };

std::string_view to_string(Sign s);
Sign parse_sign(std::string_view s);

/// True when a value of sign `sgn` (-1, 0, +1) is allowed by `s`.
bool sign_allows(Sign s, int sgn);

/// Proof that a polynomial keeps a sign on every integer x >= from.
///
/// The claim splits into a finite exact scan of [from, scan_to] and a tail:
/// every real root lies strictly below tail_bound (Cauchy), so for x > tail_bound
/// the polynomial has the sign of its leading coefficient. scan_to is
/// max(from, tail_bound).
struct SignCertificate {
  Poly polynomial;
  std::string variable = "d";
  std::string label;
  BigInt from;
  Sign asserted_sign = Sign::positive;
  BigInt tail_bound;
  BigInt scan_to;
  /// Least integer >= from violating the asserted sign, if any.
  std::optional<BigInt> counterexample;
  /// Leading coefficient is compatible with the asserted sign.
  bool tail_ok = false;

  bool holds() const { return tail_ok && !counterexample.has_value(); }
};

/// ceil(1 + max_i |c_i / c_deg|). Every real root r satisfies |r| < this value.
BigInt cauchy_bound(const Poly& p);

/// Largest scan the certificate will perform before refusing.
inline constexpr std::int64_t kMaxSignScan = 50'000'000;

/// Issues a tail-bounded sign certificate for p over all integers >= from.
/// Throws InvalidArgument for the zero polynomial or an oversized scan.
SignCertificate sign_certificate(const Poly& p, const BigInt& from, Sign asserted,
                                 std::string variable = "d", std::string label = {});

}  // namespace kbound
