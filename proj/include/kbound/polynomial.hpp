#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kbound/rational.hpp"

namespace kbound {

/// Univariate polynomial with exact rational coefficients.
/// coefficients()[i] multiplies x^i; trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor): constant polynomial
  Poly(std::int64_t c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rat(c)) {}           // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rat> coeffs);

  /// The polynomial x.
  static Poly variable();
  static Poly monomial(const Rat& c, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  Rat coefficient(int i) const;
  Rat leading() const;

  Rat operator()(const Rat& x) const;

  Poly derivative() const;
  /// p(scale * x + shift).
  Poly compose_affine(const Rat& scale, const Rat& shift) const;
  /// The unique positive rational multiple with coprime integer coefficients.
  std::vector<BigInt> primitive_integer_coefficients() const;

  std::string str(std::string_view var = "x") const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

}  // namespace kbound
