#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kbound {

using BigInt = boost::multiprecision::cpp_int;

/// Floor of a/b for b != 0 (cpp_int division truncates toward zero).
BigInt floor_div(const BigInt& a, const BigInt& b);

/// Converts to int64, throwing InvalidArgument when the value does not fit.
std::int64_t to_int64(const BigInt& v);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(int n) : num_(n), den_(1) {}           // NOLINT(google-explicit-constructor)
  Rat(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(BigInt num, BigInt den);

  /// Parses "n" or "n/d" (optional leading minus on the numerator).
  static Rat parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }

  BigInt floor() const { return floor_div(num_, den_); }
  BigInt ceil() const { return -floor_div(-num_, den_); }

  /// The integer value; throws InconsistencyError if the value is fractional.
  BigInt to_integer() const;

  /// "num/den", with "/den" omitted when the denominator is 1.
  std::string str() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

Rat abs(const Rat& r);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace kbound
