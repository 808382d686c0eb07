#include "kbound/rational.hpp"

#include <limits>
#include <ostream>

#include "kbound/errors.hpp"

namespace kbound {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw InvalidArgument("floor_div: division by zero");
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) --q;
  return q;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw InvalidArgument("integer does not fit in 64 bits: " + v.str());
  }
  return v.convert_to<std::int64_t>();
}

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidArgument("Rat: zero denominator");
  normalize();
}

void Rat::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  const auto digits = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    return !t.empty() && t.find_first_not_of("0123456789") == std::string_view::npos;
  };
  if (!digits(text.substr(0, slash)) ||
      (slash != std::string_view::npos && !digits(text.substr(slash + 1)))) {
    throw InvalidArgument("Rat::parse: malformed rational '" + std::string(text) + "'");
  }
  try {
    if (slash == std::string_view::npos) return Rat(BigInt(std::string(text)));
    return Rat(BigInt(std::string(text.substr(0, slash))),
               BigInt(std::string(text.substr(slash + 1))));
  } catch (const std::runtime_error&) {
    throw InvalidArgument("Rat::parse: malformed rational '" + std::string(text) + "'");
  }
}

BigInt Rat::to_integer() const {
  if (!is_integer()) throw InconsistencyError("expected an integer, got " + str());
  return num_;
}

std::string Rat::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.num_ = -r.num_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw InvalidArgument("Rat: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace kbound
