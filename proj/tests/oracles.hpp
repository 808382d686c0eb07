// Reference computations for the tests. Everything here is written from the
// definitions in plain int64 arithmetic and shares no code with the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

struct Split {
  i64 q, r;
};

inline Split divide(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  if (r < 0) {
    r += b;
    --q;
  }
  return {q, r};
}

// ---- Intersection theory on the cubic 3-fold scroll -------------------------

struct Cls {
  i64 h, w;  // h*H + w*W
};

// H^3 = 3, H^2 W = 1, H W^2 = W^3 = 0; multilinear expansion.
inline i64 triple(Cls x, Cls y, Cls z) {
  const i64 t[2][2][2] = {{{3, 1}, {1, 0}}, {{1, 0}, {0, 0}}};
  const i64 cx[2] = {x.h, x.w}, cy[2] = {y.h, y.w}, cz[2] = {z.h, z.w};
  i64 s = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) s += cx[i] * cy[j] * cz[k] * t[i][j][k];
  return s;
}

inline Cls plus(Cls a, Cls b) { return {a.h + b.h, a.w + b.w}; }

inline bool admissible(Cls c) { return c.h > 0 && c.h + c.w >= 0 && 3 * c.h + c.w >= 4; }

// K_S = (K_T + S)|_S with K_T = -3H + W.
inline i64 k2(Cls s) {
  const Cls ks = plus({-3, 1}, s);
  return triple(ks, ks, s);
}

// 2g - 2 = (K_T + S + H) . S . H
inline i64 genus_times_two_minus_two(Cls s) {
  return triple(plus(plus({-3, 1}, s), {1, 0}), s, {1, 0});
}

inline std::vector<Cls> classes_of_degree(i64 d) {
  std::vector<Cls> out;
  for (i64 a = 1; 3 * a <= d + 2 * a; ++a) {  // alpha + beta >= 0 with beta = d - 3 alpha
    Cls c{a, d - 3 * a};
    if (admissible(c)) out.push_back(c);
  }
  return out;
}

// ---- Genus bounds from Hilbert function profiles ----------------------------

// Sum over i >= 1 of (d - h(i)) for a profile given as a function of i that
// reaches d eventually.
template <class H>
i64 defect_sum(i64 d, H h) {
  i64 s = 0;
  for (i64 i = 1;; ++i) {
    const i64 v = h(i);
    if (v >= d) break;
    s += d - v;
  }
  return s;
}

inline i64 castelnuovo(i64 r, i64 d) {
  return defect_sum(d, [&](i64 i) { return std::min(d, 1 + i * (r - 1)); });
}

// Profile for G(4;d,5).
inline i64 pi2(i64 d) {
  const auto [n, v] = divide(d - 1, 5);
  const i64 w = std::max<i64>(0, v / 2);
  return defect_sum(d, [&](i64 i) { return i <= n ? 5 * i - 1 : (i == n + 1 ? d - w : d); });
}

inline i64 k_profile(i64 d, i64 i) {
  const auto [p, q] = divide(d - 1, 4);
  if (i <= p) return 4 * i;
  if (i == p + 1 && q == 3) return d - 1;
  return d;
}

inline i64 pi1(i64 d) {
  return defect_sum(d, [&](i64 i) { return k_profile(d, i); });
}

inline i64 weighted_defect(i64 d) {
  i64 s = 0;
  for (i64 i = 1; i <= d - 4; ++i) s += (i - 1) * (d - k_profile(d, i));
  return s;
}

// Largest defect sum over Hilbert functions of d points in the plane that lie
// on no curve of degree < s and satisfy the uniform position shape: the first
// difference grows as i+1 up to degree s-1, then never exceeds s and is
// strictly decreasing once it falls below s.
class Halphen {
 public:
  explicit Halphen(i64 s) : s_(s) {}

  // Returns min() when no admissible profile of total mass d exists.
  i64 operator()(i64 d) {
    i64 mass = 0, value = 0;
    for (i64 j = 0; j < s_; ++j) {
      mass += j + 1;
      value += (j - 1) * (j + 1);  // contribution of Delta(j) = j+1 at position j
    }
    value += 1;  // j = 0 contributes (0-1)*1, undo it
    if (mass > d) return kNone;
    const i64 rest = best(s_, d - mass, s_);
    return rest == kNone ? kNone : value + rest;
  }

 private:
  static constexpr i64 kNone = std::numeric_limits<i64>::min();

  // Position i, remaining mass, previous difference. Defect = sum (i-1) Delta(i).
  i64 best(i64 i, i64 rem, i64 prev) {
    if (rem == 0) return 0;
    if (prev <= 0) return kNone;
    const auto key = std::make_tuple(i, rem, prev);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    i64 out = kNone;
    for (i64 v = 1; v <= std::min(prev, rem); ++v) {
      const i64 next_prev = v == s_ ? s_ : v - 1;
      const i64 tail = best(i + 1, rem - v, next_prev);
      if (tail != kNone) out = std::max(out, (i - 1) * v + tail);
    }
    memo_[key] = out;
    return out;
  }

  i64 s_;
  std::map<std::tuple<i64, i64, i64>, i64> memo_;
};

}  // namespace oracle
