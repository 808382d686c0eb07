#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kbound/exact_arith.hpp"

namespace kbound {

/// Lower bound i -> h(i) for a Hilbert function that stabilizes at d.
///
/// values[i-1] is h(i) for 1 <= i <= values.size(); h(i) = d for every larger i.
/// Only the prefix is stored, so the stabilization index is values.size() + 1
/// at the latest.
struct HilbertProfile {
  std::string label;
  std::int64_t d = 0;
  std::vector<std::int64_t> values;

  std::int64_t value_at(std::int64_t i) const;
  /// Smallest i with h(j) = d for all j >= i.
  std::int64_t stabilization_index() const;
  /// Throws InvalidArgument unless nondecreasing, bounded by d and positive.
  void validate() const;
};

using Params = std::vector<std::pair<std::string, std::int64_t>>;

struct GenusBoundResult {
  std::string formula_id;
  Rat bound;
  Params parameters;
  /// Threshold on d above which the value is an established genus bound.
  std::string validity;
  bool within_validity = true;

  bool integral() const { return bound.is_integer(); }
  std::int64_t param(const std::string& name) const;
};

// Castelnuovo bound in P^r, split d - 1 = m(r - 1) + eps.
GenusBoundResult castelnuovo_bound(std::int64_t r, std::int64_t d);
HilbertProfile castelnuovo_profile(std::int64_t r, std::int64_t d);

// Halphen bound for space curves not on surfaces of degree < s, split d - 1 = ms + eps.
// Throws OutOfDomain for d <= s^2 - s. Non-integral values are returned exactly.
GenusBoundResult halphen_bound(std::int64_t d, std::int64_t s);

// Curves in P^4 not on surfaces of degree < 5: split d - 1 = 5n + v, w = floor(v/2).
HilbertProfile pi2_profile(std::int64_t d);
GenusBoundResult pi2_bound(std::int64_t d);

// Curves in P^4 on a threefold of degree 4: split d - 1 = 4p + q, t = [q == 3].
HilbertProfile pi1_profile(std::int64_t d);
GenusBoundResult pi1_bound(std::int64_t d);

/// Defect sum sum_{i>=1} (d - h(i)).
Rat genus_from_profile(const HilbertProfile& profile);

/// Minimal profile with h(1..3) = seed and h(i) >= min(d, h(i-3) + h(3) - 1) for i >= 4.
HilbertProfile propagate_profile(const std::array<std::int64_t, 3>& seed, std::int64_t d);

/// sum_{i=1}^{d-4} (i-1)(d - k(i)) with k the pi1 profile, by direct summation.
BigInt weighted_defect_sum(std::int64_t d);
/// C(p,2) d - 8 C(p+1,3) + t p.
BigInt weighted_defect_closed_form(std::int64_t d);

/// K^2 from the double point formula d(d-5) - 10(g-1) + 12 chi - 2K^2 = 0.
BigInt double_point_k2(std::int64_t d, std::int64_t g, std::int64_t chi);

/// Euler characteristic lower bound on a quartic threefold, g = d^2/8 + d(x-9)/8 + 1.
Rat chi_lower_bound_s4(std::int64_t d, const Rat& x);
/// The x-free weakening used for 6 < x <= 9.
Rat chi_lower_bound_s4_weak(std::int64_t d);

// The closed forms as polynomials in d with the residue held fixed. For a d in
// the matching residue class these agree with the functions above.
Poly castelnuovo_poly(std::int64_t r, std::int64_t eps);
Poly halphen_poly(std::int64_t s, std::int64_t eps);
Poly pi2_poly(std::int64_t v);
Poly pi1_poly(std::int64_t q);
Poly chi_lower_bound_s4_poly(const Rat& x);
Poly chi_lower_bound_s4_weak_poly();

}  // namespace kbound
