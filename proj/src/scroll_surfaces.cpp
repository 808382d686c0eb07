#include "kbound/scroll_surfaces.hpp"

#include <string>

#include <boost/multiprecision/integer.hpp>

namespace kbound {

namespace {

std::string show(const DivisorClass& c) {
  return "(" + std::to_string(c.alpha) + ", " + std::to_string(c.beta) + ")";
}

void require_frame_degree(std::int64_t d) {
  if (d < 4) throw InvalidArgument("scroll frame requires d >= 4, got " + std::to_string(d));
}

}  // namespace

BigInt IntersectionRing::triple(const DivisorClass& x, const DivisorClass& y,
                                const DivisorClass& z) {
  // Expand the trilinear form; each monomial picks H or W from every factor.
  const std::int64_t hx = x.alpha, wx = x.beta;
  const std::int64_t hy = y.alpha, wy = y.beta;
  const std::int64_t hz = z.alpha, wz = z.beta;
  BigInt hhh_part = BigInt(hx) * hy * hz;
  BigInt hhw_part = BigInt(hx) * hy * wz + BigInt(hx) * wy * hz + BigInt(wx) * hy * hz;
  BigInt hww_part = BigInt(hx) * wy * wz + BigInt(wx) * hy * wz + BigInt(wx) * wy * hz;
  BigInt www_part = BigInt(wx) * wy * wz;
  return hhh * hhh_part + hhw * hhw_part + hww * hww_part + www * www_part;
}

ScrollFrame ScrollFrame::make(std::int64_t d, std::int64_t a) {
  require_frame_degree(d);
  const auto split = euclid_split(d - 1, 3);
  ScrollFrame f{d, split.quotient, split.remainder, a};
  if (a < a_min(d) || a > a_max(d)) {
    throw RangeError("scroll index a = " + std::to_string(a) + " outside [" +
                     std::to_string(a_min(d)) + ", " + std::to_string(a_max(d)) +
                     "] for d = " + std::to_string(d));
  }
  return f;
}

std::int64_t ScrollFrame::a_min(std::int64_t d) {
  require_frame_degree(d);
  return -euclid_split(d - 1, 3).quotient;
}

std::int64_t ScrollFrame::a_max(std::int64_t d) {
  require_frame_degree(d);
  const auto split = euclid_split(d - 1, 3);
  return euclid_split(split.quotient + split.remainder - 1, 2).quotient;
}

bool is_admissible(const DivisorClass& c) {
  return c.alpha > 0 && c.alpha + c.beta >= 0 && 3 * c.alpha + c.beta >= 4;
}

std::int64_t degree(const DivisorClass& c) { return 3 * c.alpha + c.beta; }

DivisorClass class_from_frame(const ScrollFrame& f) {
  return {f.m + 1 + f.a, f.eps + 1 - 3 * (f.a + 1)};
}

ScrollFrame frame_from_class(const DivisorClass& c, std::int64_t expected_d) {
  if (degree(c) != expected_d) {
    throw RangeError("class " + show(c) + " has degree " + std::to_string(degree(c)) +
                     ", expected " + std::to_string(expected_d));
  }
  require_frame_degree(expected_d);
  const auto split = euclid_split(expected_d - 1, 3);
  return ScrollFrame::make(expected_d, c.alpha - split.quotient - 1);
}

std::vector<DivisorClass> admissible_classes(std::int64_t d) {
  std::vector<DivisorClass> out;
  if (d < 4) return out;
  // alpha + beta = d - 2 alpha >= 0 bounds alpha by d/2.
  for (std::int64_t alpha = 1; 2 * alpha <= d; ++alpha) {
    DivisorClass c{alpha, d - 3 * alpha};
    if (is_admissible(c)) out.push_back(c);
  }
  return out;
}

BigInt phi_unchecked(std::int64_t d, std::int64_t a) {
  require_frame_degree(d);
  const auto split = euclid_split(d - 1, 3);
  return phi_expr<BigInt>(split.quotient, split.remainder, a);
}

BigInt phi(std::int64_t d, std::int64_t a) {
  const ScrollFrame f = ScrollFrame::make(d, a);
  return phi_expr<BigInt>(f.m, f.eps, f.a);
}

BigInt phi_derivative(std::int64_t d, std::int64_t a) {
  require_frame_degree(d);
  const auto split = euclid_split(d - 1, 3);
  return phi_derivative_expr<BigInt>(split.quotient, split.remainder, a);
}

BigInt phi_discriminant(std::int64_t d) {
  require_frame_degree(d);
  const auto split = euclid_split(d - 1, 3);
  // phi'(a) = -18 a^2 + 2B a + C, discriminant (2B)^2 + 72 C.
  const BigInt m = split.quotient, eps = split.remainder;
  const BigInt b2 = 2 * (-9 * m + 5 + 3 * eps);
  const BigInt c = 2 * m * (3 * eps - 4) - 6 * eps + 10;
  return b2 * b2 + 72 * c;
}

BigInt k2_intersection_unchecked(const DivisorClass& c) {
  const DivisorClass adj = kCanonicalT + c;
  return IntersectionRing::triple(adj, adj, c);
}

BigInt k2_intersection(const DivisorClass& c) {
  if (!is_admissible(c)) throw OutOfDomain("k2_intersection: class " + show(c) + " is not admissible");
  return k2_intersection_unchecked(c);
}

BigInt sectional_genus_unchecked(const DivisorClass& c) {
  const BigInt twice = IntersectionRing::triple(kCanonicalT + c + kHyperplane, c, kHyperplane);
  if (twice % 2 != 0) {
    throw InconsistencyError("sectional_genus: odd value of (K_T+S+H).S.H = " + twice.str());
  }
  return twice / 2 + 1;
}

BigInt sectional_genus(const DivisorClass& c) {
  if (!is_admissible(c)) throw OutOfDomain("sectional_genus: class " + show(c) + " is not admissible");
  return sectional_genus_unchecked(c);
}

CriticalInterval critical_interval(std::int64_t d) {
  require_frame_degree(d);
  const auto split = euclid_split(d - 1, 3);
  CriticalInterval out;
  out.discriminant = phi_discriminant(d);
  if (out.discriminant.sign() <= 0) return out;
  out.real_roots = true;
  const BigInt two_b = 2 * (-9 * BigInt(split.quotient) + 5 + 3 * BigInt(split.remainder));
  // Roots are (2B -+ sqrt(disc)) / 36. Refine sqrt(disc) by a power-of-two
  // scale until no integer sits ambiguously at an interval endpoint.
  for (BigInt scale = 1;; scale *= 2) {
    const BigInt scaled = out.discriminant * scale * scale;
    const BigInt s = boost::multiprecision::sqrt(scaled);
    const bool exact = s * s == scaled;
    const BigInt s_hi = exact ? s : s + 1;
    out.a1_lo = Rat(two_b * scale - s_hi, 36 * scale);
    out.a1_hi = Rat(two_b * scale - s, 36 * scale);
    out.a2_lo = Rat(two_b * scale + s, 36 * scale);
    out.a2_hi = Rat(two_b * scale + s_hi, 36 * scale);
    if (exact) break;
    const bool a1_clear = out.a1_lo.floor() == out.a1_hi.floor() && !out.a1_hi.is_integer();
    const bool a2_clear = out.a2_lo.ceil() == out.a2_hi.ceil() && !out.a2_lo.is_integer();
    if (a1_clear && a2_clear) break;
  }
  return out;
}

MinimizeResult minimize_k2(std::int64_t d) {
  require_frame_degree(d);
  const auto split = euclid_split(d - 1, 3);
  MinimizeResult r;
  r.d = d;
  r.in_theorem_range = d >= 18;
  const std::int64_t lo = ScrollFrame::a_min(d), hi = ScrollFrame::a_max(d);
  bool first = true;
  for (std::int64_t a = lo; a <= hi; ++a) {
    BigInt v = phi_expr<BigInt>(split.quotient, split.remainder, a);
    if (first || v < r.k2_min) {
      r.k2_min = v;
      r.a_min = a;
      r.unique = true;
      first = false;
    } else if (v == r.k2_min) {
      r.unique = false;
    }
  }
  const auto parity = euclid_split(split.quotient + split.remainder - 1, 2);
  if (parity.remainder == 0) {
    r.closed_form = Rat(-d) * Rat(d - 6);
  } else {
    r.closed_form = Rat(-d) * Rat(d) / Rat(4) + Rat(d) / Rat(2) + Rat(35) / Rat(4);
  }
  return r;
}

ExtremalSurface extremal_class(std::int64_t d) {
  if (d % 2 != 0) throw InvalidArgument("extremal_class: d must be even, got " + std::to_string(d));
  if (d < 8) throw InvalidArgument("extremal_class: requires d >= 8, got " + std::to_string(d));
  DivisorClass c{d / 2, -d / 2};
  return {c, k2_intersection(c), sectional_genus(c)};
}

ScanRecord describe_class(const DivisorClass& c) {
  ScanRecord r;
  r.d = degree(c);
  r.cls = c;
  r.degree = r.d;
  r.k2 = k2_intersection_unchecked(c);
  r.genus = sectional_genus_unchecked(c);
  r.admissible = is_admissible(c);
  r.extremal = r.d % 2 == 0 && c.alpha == r.d / 2 && c.beta == -r.d / 2;
  r.a = 0;
  if (r.d >= 4) r.a = c.alpha - euclid_split(r.d - 1, 3).quotient - 1;
  return r;
}

std::vector<ScanRecord> scan_scroll(std::int64_t d) {
  std::vector<ScanRecord> out;
  for (std::int64_t a = ScrollFrame::a_min(d); a <= ScrollFrame::a_max(d); ++a) {
    ScanRecord r = describe_class(class_from_frame(ScrollFrame::make(d, a)));
    r.a = a;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace kbound
