#include "campana/arith.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace campana {

namespace {

__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

u64 magnitude(i64 n) {
  return n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
}

}  // namespace

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  const u64 un = static_cast<u64>(n);
  u64 d = un - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  // This base set is exact for all n < 3.3 * 10^24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(un, a, d, r)) return false;
  }
  return true;
}

std::vector<i64> primes_up_to(i64 limit) {
  std::vector<i64> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (i64 i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (i64 j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

int valuation(i64 n, i64 p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n == 0) throw std::domain_error("factorize(0)");
  u64 m = magnitude(n);
  std::vector<std::pair<i64, int>> factors;
  for (u64 p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    factors.emplace_back(static_cast<i64>(p), e);
  }
  if (m > 1) factors.emplace_back(static_cast<i64>(m), 1);
  return factors;
}

bool is_squarefree(i64 n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

i64 gcd(i64 a, i64 b) {
  u64 x = magnitude(a);
  u64 y = magnitude(b);
  while (y != 0) {
    u64 t = x % y;
    x = y;
    y = t;
  }
  return static_cast<i64>(x);
}

i64 checked_mul(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

i64 checked_add(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("64-bit overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

i64 ipow(i64 base, int exponent) {
  if (exponent < 0) throw std::domain_error("ipow with negative exponent");
  i64 result = 1;
  for (int i = 0; i < exponent; ++i) result = checked_mul(result, base);
  return result;
}

SmallestPrimeFactorTable::SmallestPrimeFactorTable(i64 limit) {
  if (limit < 1) limit = 1;
  if (limit > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("smallest-prime-factor table too large");
  }
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (i64 i = 2; i <= limit; ++i) {
    if (spf_[static_cast<std::size_t>(i)] != 0) continue;
    for (i64 j = i; j <= limit; j += i) {
      if (spf_[static_cast<std::size_t>(j)] == 0) spf_[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(i);
    }
  }
}

std::vector<std::pair<i64, int>> SmallestPrimeFactorTable::factorize(i64 n) const {
  u64 m = magnitude(n);
  if (m == 0 || m > static_cast<u64>(limit())) {
    throw std::out_of_range("value outside smallest-prime-factor table: " + std::to_string(n));
  }
  std::vector<std::pair<i64, int>> factors;
  while (m > 1) {
    const u64 p = spf_[m];
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    factors.emplace_back(static_cast<i64>(p), e);
  }
  return factors;
}

std::vector<i64> SmallestPrimeFactorTable::prime_support(i64 n) const {
  std::vector<i64> primes;
  for (const auto& [p, e] : factorize(n)) primes.push_back(p);
  return primes;
}

}  // namespace campana
