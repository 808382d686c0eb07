#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kbound/exact_arith.hpp"

namespace kbound {

/// The class alpha*H + beta*W on the smooth rational normal 3-fold scroll T in P^5,
/// H the hyperplane class and W a plane of the ruling.
struct DivisorClass {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
    return {a.alpha + b.alpha, a.beta + b.beta};
  }
};

inline constexpr DivisorClass kHyperplane{1, 0};
inline constexpr DivisorClass kRuling{0, 1};
inline constexpr DivisorClass kCanonicalT{-3, 1};

/// Triple intersection numbers on T.
///
/// H^3 = deg T = 3. A ruling plane meets a general codimension-2 linear section in
/// one point, so H^2 W = 1. Two ruling planes are disjoint, so W^2 = 0 as a cycle
/// and H W^2 = W^3 = 0. Any slip here shows up as a mismatch between
/// k2_intersection and phi.
struct IntersectionRing {
  static constexpr std::int64_t hhh = 3;
  static constexpr std::int64_t hhw = 1;
  static constexpr std::int64_t hww = 0;
  static constexpr std::int64_t www = 0;

  static BigInt triple(const DivisorClass& x, const DivisorClass& y, const DivisorClass& z);
};

/// Degree d together with the split d - 1 = 3m + eps and the index a, which
/// picks the class (m+1+a) H + (eps+1-3(a+1)) W of degree d.
struct ScrollFrame {
  std::int64_t d = 0;
  std::int64_t m = 0;
  std::int64_t eps = 0;
  std::int64_t a = 0;

  /// Builds the frame, throwing RangeError if a lies outside [a_min(d), a_max(d)].
  static ScrollFrame make(std::int64_t d, std::int64_t a);
  /// -m
  static std::int64_t a_min(std::int64_t d);
  /// floor((m + eps - 1) / 2)
  static std::int64_t a_max(std::int64_t d);

  friend bool operator==(const ScrollFrame&, const ScrollFrame&) = default;
};

bool is_admissible(const DivisorClass& c);
std::int64_t degree(const DivisorClass& c);

DivisorClass class_from_frame(const ScrollFrame& f);
/// Inverse of class_from_frame. Throws RangeError when c does not have degree
/// expected_d or its index falls outside the frame range.
ScrollFrame frame_from_class(const DivisorClass& c, std::int64_t expected_d);

/// All admissible classes of degree d, ordered by alpha.
std::vector<DivisorClass> admissible_classes(std::int64_t d);

/// K^2 of the surface in the class indexed by a, as the closed-form cubic in a.
/// Throws RangeError for a outside the frame range; phi_unchecked evaluates anyway.
BigInt phi(std::int64_t d, std::int64_t a);
BigInt phi_unchecked(std::int64_t d, std::int64_t a);
/// phi'(a).
BigInt phi_derivative(std::int64_t d, std::int64_t a);
/// Discriminant of phi' as a quadratic in a.
BigInt phi_discriminant(std::int64_t d);

/// The cubic phi and its derivative written over any commutative ring T that
/// accepts integer constants. Lets the same formula run over BigInt and over Poly.
template <class T>
T phi_expr(const T& m, const T& eps, const T& a) {
  return T(-6) * a * a * a + a * a * (T(-9) * m + T(5) + T(3) * eps) +
         a * (T(2) * m * (T(3) * eps - T(4)) - T(6) * eps + T(10)) + T(3) * m * m * m +
         m * m * (T(3) * eps - T(13)) + m * (T(10) - T(6) * eps) + T(8);
}

template <class T>
T phi_derivative_expr(const T& m, const T& eps, const T& a) {
  return T(-18) * a * a + T(2) * a * (T(-9) * m + T(5) + T(3) * eps) +
         T(2) * m * (T(3) * eps - T(4)) - T(6) * eps + T(10);
}

/// K_S^2 = (K_T + S)^2 S via the intersection ring. Throws OutOfDomain for
/// inadmissible classes.
BigInt k2_intersection(const DivisorClass& c);
/// Same product without the admissibility check.
BigInt k2_intersection_unchecked(const DivisorClass& c);

/// Sectional genus from 2g - 2 = (K_T + S + H) S H. Throws OutOfDomain for
/// inadmissible classes and InconsistencyError on an odd intersection number.
BigInt sectional_genus(const DivisorClass& c);
BigInt sectional_genus_unchecked(const DivisorClass& c);

/// Roots a1 < a2 of phi' isolated in [lo, hi] with hi - lo < 1, tight enough
/// that every integer is classified by one of the two predicates.
struct CriticalInterval {
  BigInt discriminant;
  bool real_roots = false;
  Rat a1_lo, a1_hi;
  Rat a2_lo, a2_hi;

  /// True when phi'(a) > 0 is guaranteed (a strictly between the isolating intervals).
  bool certainly_inside(const Rat& a) const { return real_roots && a > a1_hi && a < a2_lo; }
  bool certainly_outside(const Rat& a) const {
    return !real_roots || a <= a1_lo || a >= a2_hi;
  }
};

CriticalInterval critical_interval(std::int64_t d);

struct MinimizeResult {
  std::int64_t d = 0;
  std::int64_t a_min = 0;
  BigInt k2_min;
  bool unique = false;
  /// phi(a*) from the parity-split closed form: -d(d-6) for even d,
  /// -d^2/4 + d/2 + 35/4 for odd d.
  Rat closed_form;
  /// d >= 18.
  bool in_theorem_range = false;
};

/// Exhaustive minimization of phi over every integer a in [-m, a*].
MinimizeResult minimize_k2(std::int64_t d);

struct ExtremalSurface {
  DivisorClass cls;
  BigInt k2;
  BigInt genus;
};

/// The class (d/2)(H - W). Throws InvalidArgument for odd d or d < 8.
ExtremalSurface extremal_class(std::int64_t d);

/// One row of a scroll scan.
struct ScanRecord {
  std::int64_t d = 0;
  std::int64_t a = 0;
  DivisorClass cls;
  std::int64_t degree = 0;
  BigInt k2;
  BigInt genus;
  bool admissible = false;
  bool extremal = false;
};

/// Every index a in [-m, a*] for degree d.
std::vector<ScanRecord> scan_scroll(std::int64_t d);
/// A record for one class, independent of any frame.
ScanRecord describe_class(const DivisorClass& c);

}  // namespace kbound
