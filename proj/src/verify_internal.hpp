#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kbound/certificate.hpp"
#include "kbound/polynomial.hpp"
#include "kbound/rational.hpp"

namespace kbound::detail {

inline const Poly& D() {
  static const Poly x = Poly::variable();
  return x;
}

inline Rat frac(std::int64_t n, std::int64_t d) { return Rat(BigInt(n), BigInt(d)); }

inline std::optional<std::string> fail_unless(bool ok, const std::string& detail) {
  if (ok) return std::nullopt;
  return detail;
}

inline std::string identity_detail(const Poly& lhs, const Poly& rhs, const char* var = "d") {
  return lhs.str(var) + " vs " + rhs.str(var);
}

// Constant differences (possibly zero) get an exact check; anything else a sign certificate.
inline void add_sign_or_constant(Certificate& c, const Poly& p, std::int64_t from, Sign sign,
                                 const std::string& variable, const std::string& label) {
  if (p.degree() <= 0) {
    c.add_check(label, sign_allows(sign, p.coefficient(0).sign()), "constant " + p.str());
    return;
  }
  c.add_sign(sign_certificate(p, BigInt(from), sign, variable, label));
}

}  // namespace kbound::detail
