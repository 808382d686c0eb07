#include "kbound/classical_bounds.hpp"

#include <algorithm>

namespace kbound {

namespace {

std::string num(std::int64_t v) { return std::to_string(v); }

Rat frac(std::int64_t n, std::int64_t d) { return Rat(BigInt(n), BigInt(d)); }

const Poly& var_d() {
  static const Poly x = Poly::variable();
  return x;
}

}  // namespace

std::int64_t HilbertProfile::value_at(std::int64_t i) const {
  if (i < 1) throw InvalidArgument("HilbertProfile::value_at: index must be >= 1");
  if (i <= static_cast<std::int64_t>(values.size())) return values[static_cast<std::size_t>(i - 1)];
  return d;
}

std::int64_t HilbertProfile::stabilization_index() const {
  std::int64_t i = static_cast<std::int64_t>(values.size());
  while (i >= 1 && values[static_cast<std::size_t>(i - 1)] == d) --i;
  return i + 1;
}

void HilbertProfile::validate() const {
  if (d < 1) throw InvalidArgument("profile '" + label + "': d must be positive");
  std::int64_t prev = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::int64_t v = values[i];
    if (v < 1 || v > d) {
      throw InvalidArgument("profile '" + label + "': h(" + num(static_cast<std::int64_t>(i) + 1) +
                            ") = " + num(v) + " outside [1, d]");
    }
    if (v < prev) {
      throw InvalidArgument("profile '" + label + "': decreasing at i = " +
                            num(static_cast<std::int64_t>(i) + 1));
    }
    prev = v;
  }
}

std::int64_t GenusBoundResult::param(const std::string& name) const {
  for (const auto& [k, v] : parameters) {
    if (k == name) return v;
  }
  throw InvalidArgument("GenusBoundResult: no parameter '" + name + "'");
}

GenusBoundResult castelnuovo_bound(std::int64_t r, std::int64_t d) {
  if (r < 3) throw InvalidArgument("castelnuovo_bound: r must be >= 3");
  if (d < r) {
    throw OutOfDomain("castelnuovo_bound: no nondegenerate curve of degree " + num(d) + " in P^" +
                      num(r));
  }
  const auto split = euclid_split(d - 1, r - 1);
  const std::int64_t eps = split.remainder;
  const Rat den(2 * (r - 1));
  Rat g = Rat(d) * Rat(d) / den - Rat(r + 1) * Rat(d) / den + Rat((r - eps) * (1 + eps)) / den;
  if (!g.is_integer()) throw InconsistencyError("castelnuovo_bound: non-integral value " + g.str());
  return {"castelnuovo", g, {{"r", r}, {"d", d}, {"m", split.quotient}, {"eps", eps}}, "d >= r",
          true};
}

HilbertProfile castelnuovo_profile(std::int64_t r, std::int64_t d) {
  if (r < 3) throw InvalidArgument("castelnuovo_profile: r must be >= 3");
  if (d < r) throw OutOfDomain("castelnuovo_profile: d < r");
  HilbertProfile p{"castelnuovo", d, {}};
  for (std::int64_t i = 1;; ++i) {
    std::int64_t v = std::min(d, 1 + i * (r - 1));
    if (v == d) break;
    p.values.push_back(v);
  }
  return p;
}

GenusBoundResult halphen_bound(std::int64_t d, std::int64_t s) {
  if (s < 2) throw InvalidArgument("halphen_bound: s must be >= 2");
  if (d <= s * s - s) {
    throw OutOfDomain("halphen_bound: requires d > s^2 - s = " + num(s * s - s) + ", got d = " +
                      num(d));
  }
  const auto split = euclid_split(d - 1, s);
  const std::int64_t eps = split.remainder;
  Rat g = Rat(d) * Rat(d) / Rat(2 * s) + Rat(d) * Rat(s - 4) / Rat(2) + Rat(1) -
          Rat((s - 1 - eps) * (eps + 1) * (s - 1)) / Rat(2 * s);
  return {"halphen", g, {{"d", d}, {"s", s}, {"m", split.quotient}, {"eps", eps}},
          "d > s^2 - s", true};
}

HilbertProfile pi2_profile(std::int64_t d) {
  if (d < 6) throw InvalidArgument("pi2_profile: requires d >= 6");
  const auto split = euclid_split(d - 1, 5);
  const std::int64_t n = split.quotient;
  const std::int64_t w = std::max<std::int64_t>(0, split.remainder / 2);
  HilbertProfile p{"pi2", d, {}};
  for (std::int64_t i = 1; i <= n; ++i) p.values.push_back(5 * i - 1);
  if (w > 0) p.values.push_back(d - w);
  return p;
}

GenusBoundResult pi2_bound(std::int64_t d) {
  if (d < 6) throw InvalidArgument("pi2_bound: requires d >= 6");
  const auto split = euclid_split(d - 1, 5);
  const std::int64_t v = split.remainder;
  const std::int64_t w = std::max<std::int64_t>(0, v / 2);
  Rat g = frac(d * d, 10) - frac(3 * d, 10) + frac(1, 5) + frac(v, 10) - frac(v * v, 10) + Rat(w);
  return {"pi2", g, {{"d", d}, {"n", split.quotient}, {"v", v}, {"w", w}}, "d > 143", d > 143};
}

HilbertProfile pi1_profile(std::int64_t d) {
  if (d < 5) throw InvalidArgument("pi1_profile: requires d >= 5");
  const auto split = euclid_split(d - 1, 4);
  HilbertProfile p{"pi1", d, {}};
  for (std::int64_t i = 1; i <= split.quotient; ++i) p.values.push_back(4 * i);
  if (split.remainder == 3) p.values.push_back(d - 1);
  return p;
}

GenusBoundResult pi1_bound(std::int64_t d) {
  if (d < 5) throw InvalidArgument("pi1_bound: requires d >= 5");
  const auto split = euclid_split(d - 1, 4);
  const std::int64_t q = split.remainder;
  const std::int64_t t = q == 3 ? 1 : 0;
  Rat g = frac(d * d, 8) - frac(d, 2) + frac(3, 8) + frac(q, 4) - frac(q * q, 8) + Rat(t);
  return {"pi1", g, {{"d", d}, {"p", split.quotient}, {"q", q}, {"t", t}}, "d >= 5", true};
}

Rat genus_from_profile(const HilbertProfile& profile) {
  profile.validate();
  BigInt sum = 0;
  for (std::int64_t v : profile.values) sum += profile.d - v;
  return Rat(sum);
}

HilbertProfile propagate_profile(const std::array<std::int64_t, 3>& seed, std::int64_t d) {
  if (d < 1) throw InvalidArgument("propagate_profile: d must be positive");
  for (std::size_t i = 0; i < 3; ++i) {
    if (seed[i] < 1 || seed[i] > d || (i > 0 && seed[i] < seed[i - 1])) {
      throw InvalidArgument("propagate_profile: seed must be positive, nondecreasing and <= d");
    }
  }
  if (seed[2] == 1 && d > 1) {
    throw InvalidArgument("propagate_profile: seed h(3) = 1 never reaches d");
  }
  const std::int64_t step = seed[2] - 1;
  std::vector<std::int64_t> h(seed.begin(), seed.end());
  while (h.back() < d) {
    const std::size_t i = h.size();  // 0-based index of h(i+1)
    std::int64_t next = std::min(d, h[i - 3] + step);
    h.push_back(std::max(next, h.back()));
  }
  while (!h.empty() && h.back() == d) h.pop_back();
  std::string label = "propagated(" + num(seed[0]) + "," + num(seed[1]) + "," + num(seed[2]) + ")";
  return {std::move(label), d, std::move(h)};
}

BigInt weighted_defect_sum(std::int64_t d) {
  const HilbertProfile k = pi1_profile(d);
  BigInt sum = 0;
  for (std::int64_t i = 1; i <= d - 4; ++i) {
    const std::int64_t defect = d - k.value_at(i);
    if (defect != 0) sum += BigInt(i - 1) * defect;
  }
  return sum;
}

BigInt weighted_defect_closed_form(std::int64_t d) {
  if (d < 5) throw InvalidArgument("weighted_defect_closed_form: requires d >= 5");
  const auto split = euclid_split(d - 1, 4);
  const std::int64_t p = split.quotient;
  const std::int64_t t = split.remainder == 3 ? 1 : 0;
  return binom(p, 2) * d - 8 * binom(p + 1, 3) + BigInt(t * p);
}

BigInt double_point_k2(std::int64_t d, std::int64_t g, std::int64_t chi) {
  BigInt twice = BigInt(d) * (d - 5) - BigInt(10) * (g - 1) + BigInt(12) * chi;
  if (twice % 2 != 0) {
    throw InconsistencyError("double_point_k2: odd numerator " + twice.str() +
                             "; no smooth surface in P^4 has these invariants");
  }
  return twice / 2;
}

Rat chi_lower_bound_s4(std::int64_t d, const Rat& x) {
  if (x < Rat(0) || x > Rat(9)) throw InvalidArgument("chi_lower_bound_s4: x must lie in [0, 9]");
  if (d < 4) throw InvalidArgument("chi_lower_bound_s4: requires d >= 4");
  return chi_lower_bound_s4_poly(x)(Rat(d));
}

Rat chi_lower_bound_s4_weak(std::int64_t d) {
  if (d < 4) throw InvalidArgument("chi_lower_bound_s4_weak: requires d >= 4");
  return chi_lower_bound_s4_weak_poly()(Rat(d));
}

Poly castelnuovo_poly(std::int64_t r, std::int64_t eps) {
  const Rat den(2 * (r - 1));
  const Poly& x = var_d();
  return Poly(Rat(1) / den) * x * x - Poly(Rat(r + 1) / den) * x +
         Poly(Rat((r - eps) * (1 + eps)) / den);
}

Poly halphen_poly(std::int64_t s, std::int64_t eps) {
  const Poly& x = var_d();
  return Poly(frac(1, 2 * s)) * x * x + Poly(frac(s - 4, 2)) * x + Poly(1) -
         Poly(frac((s - 1 - eps) * (eps + 1) * (s - 1), 2 * s));
}

Poly pi2_poly(std::int64_t v) {
  const Poly& x = var_d();
  const std::int64_t w = std::max<std::int64_t>(0, v / 2);
  return Poly(frac(1, 10)) * x * x - Poly(frac(3, 10)) * x + Poly(frac(1, 5) + frac(v, 10) -
                                                                 frac(v * v, 10) + Rat(w));
}

Poly pi1_poly(std::int64_t q) {
  const Poly& x = var_d();
  const std::int64_t t = q == 3 ? 1 : 0;
  return Poly(frac(1, 8)) * x * x - Poly(frac(1, 2)) * x +
         Poly(frac(3, 8) + frac(q, 4) - frac(q * q, 8) + Rat(t));
}

Poly chi_lower_bound_s4_poly(const Rat& x) {
  const Poly& d = var_d();
  return Poly(frac(1, 96)) * d * d * d - Poly(frac(1, 16)) * d * d - Poly(frac(5, 3)) * d -
         Poly(frac(333, 16)) - (d - Poly(3)) * d * Poly((Rat(9) - x) / Rat(8));
}

Poly chi_lower_bound_s4_weak_poly() {
  const Poly& d = var_d();
  return Poly(frac(1, 96)) * d * d * d - Poly(frac(7, 16)) * d * d - Poly(frac(13, 24)) * d -
         Poly(frac(333, 16));
}

}  // namespace kbound
