#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace campana {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Deterministic primality test for the full signed 64-bit range.
bool is_prime(i64 n);

/// All primes p <= limit in increasing order.
std::vector<i64> primes_up_to(i64 limit);

/// p-adic valuation of a nonzero integer.
int valuation(i64 n, i64 p);

/// (prime, exponent) pairs of |n| by trial division; n != 0.
std::vector<std::pair<i64, int>> factorize(i64 n);

bool is_squarefree(i64 n);

/// Integer gcd that is always non-negative.
i64 gcd(i64 a, i64 b);

/// a*b, throwing std::overflow_error when the product leaves the i64 range.
i64 checked_mul(i64 a, i64 b);
i64 checked_add(i64 a, i64 b);

/// Base raised to a non-negative exponent, overflow-checked.
i64 ipow(i64 base, int exponent);

/// Smallest-prime-factor sieve for repeated factorization of small values.
class SmallestPrimeFactorTable {
 public:
  explicit SmallestPrimeFactorTable(i64 limit);

  i64 limit() const { return static_cast<i64>(spf_.size()) - 1; }

  /// Distinct primes dividing |n|, increasing. Requires 0 < |n| <= limit().
  std::vector<i64> prime_support(i64 n) const;
  std::vector<std::pair<i64, int>> factorize(i64 n) const;

 private:
  std::vector<std::uint32_t> spf_;
};

}  // namespace campana
