#pragma once

#include <cstdint>

#include "kbound/rational.hpp"

namespace kbound {

/// dividend = quotient * modulus + remainder, 0 <= remainder <= modulus - 1.
struct EuclidSplit {
  std::int64_t dividend;
  std::int64_t modulus;
  std::int64_t quotient;
  std::int64_t remainder;

  friend bool operator==(const EuclidSplit&, const EuclidSplit&) = default;
};

/// Division with the least nonnegative remainder. Throws InvalidArgument for modulus < 1.
EuclidSplit euclid_split(std::int64_t dividend, std::int64_t modulus);

/// n choose k; zero when k > n.
BigInt binom(std::int64_t n, std::int64_t k);

}  // namespace kbound
