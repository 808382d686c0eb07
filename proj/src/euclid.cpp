#include "kbound/euclid.hpp"

#include <string>

#include "kbound/errors.hpp"

namespace kbound {

EuclidSplit euclid_split(std::int64_t dividend, std::int64_t modulus) {
  if (modulus < 1) {
    throw InvalidArgument("euclid_split: modulus must be positive, got " + std::to_string(modulus));
  }
  std::int64_t q = dividend / modulus;
  std::int64_t r = dividend % modulus;
  if (r < 0) {
    r += modulus;
    --q;
  }
  return {dividend, modulus, q, r};
}

BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw InvalidArgument("binom: arguments must be nonnegative");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

}  // namespace kbound
