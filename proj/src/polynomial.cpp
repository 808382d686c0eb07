#include "kbound/polynomial.hpp"

#include <sstream>

#include "kbound/errors.hpp"

namespace kbound {

Poly::Poly(const Rat& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

Poly Poly::monomial(const Rat& c, int power) {
  if (power < 0) throw InvalidArgument("Poly::monomial: negative power");
  std::vector<Rat> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat Poly::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rat Poly::leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

Rat Poly::operator()(const Rat& x) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rat> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * Rat(static_cast<std::int64_t>(i)));
  }
  return Poly(std::move(out));
}

Poly Poly::compose_affine(const Rat& scale, const Rat& shift) const {
  Poly inner(std::vector<Rat>{shift, scale});
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += Poly(*it);
  }
  return acc;
}

std::vector<BigInt> Poly::primitive_integer_coefficients() const {
  BigInt lcm = 1;
  for (const auto& c : coeffs_) lcm = boost::multiprecision::lcm(lcm, c.den());
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    out.push_back(c.num() * (lcm / c.den()));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g > 1) {
    for (auto& v : out) v /= g;
  }
  return out;
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rat mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rat(1);
    if (i == 0 || !unit) os << mag.str();
    if (i > 0) {
      if (!unit) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

}  // namespace kbound
