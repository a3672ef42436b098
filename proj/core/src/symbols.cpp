#include "campana/symbols.hpp"

#include <stdexcept>
#include <string>

namespace campana {

namespace {

// (2/n) for odd n, indexed by n mod 8.
constexpr int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1};

// Jacobi symbol with a >= 0, n odd and positive; k is the running sign.
int jacobi_loop(u64 a, u64 n, int k) {
  a %= n;
  while (a != 0) {
    int v = 0;
    while ((a & 1U) == 0) {
      a >>= 1U;
      ++v;
    }
    if (v & 1) k *= kTwoTable[n & 7U];
    if ((a & n & 2U) != 0) k = -k;
    const u64 r = n % a;
    n = a;
    a = r;
  }
  return n == 1 ? k : 0;
}

u64 residue(i64 a, u64 n) {
  const i64 m = static_cast<i64>(n);
  i64 r = a % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

void require_odd_prime(i64 p) {
  if (p == 2) throw std::invalid_argument("2-adic Hilbert symbols are not supported");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

struct UnitPart {
  int valuation;
  SymbolValue residue_symbol;  // (u/p) of the unit part u
};

UnitPart split(i64 a, i64 p) {
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return {v, legendre(a, p)};
}

UnitPart split(const Rational& a, i64 p) {
  BigInt num = boost::multiprecision::numerator(a);
  BigInt den = boost::multiprecision::denominator(a);
  int v = 0;
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  BigInt nr = num % p;
  BigInt dr = den % p;
  const i64 nu = static_cast<i64>(nr);
  const i64 du = static_cast<i64>(dr);
  return {v, legendre(nu, p) * legendre(du, p)};
}

SymbolValue tame(UnitPart a, UnitPart b, i64 p) {
  int s = 1;
  if ((static_cast<i64>(a.valuation) * b.valuation) % 2 != 0 && ((p - 1) / 2) % 2 != 0) s = -s;
  if (b.valuation % 2 != 0) s *= a.residue_symbol;
  if (a.valuation % 2 != 0) s *= b.residue_symbol;
  return s;
}

}  // namespace

SymbolValue jacobi(i64 a, i64 n) {
  if (n <= 0 || n % 2 == 0) throw std::invalid_argument("Jacobi symbol needs an odd positive modulus");
  const u64 un = static_cast<u64>(n);
  return jacobi_loop(residue(a, un), un, 1);
}

SymbolValue kronecker(i64 a, i64 n) {
  if (n == 0) {
    if (a == 0) throw std::invalid_argument("Kronecker symbol (0/0) is undefined");
    return (a == 1 || a == -1) ? 1 : 0;
  }
  if (a % 2 == 0 && n % 2 == 0) return 0;
  int k = 1;
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v & 1) k = kTwoTable[static_cast<u64>(a) & 7U];
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  const u64 un = static_cast<u64>(n);
  return jacobi_loop(residue(a, un), un, k);
}

SymbolValue hilbert_odd(const Rational& a, const Rational& b, i64 p) {
  if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
  require_odd_prime(p);
  return tame(split(a, p), split(b, p), p);
}

SymbolValue hilbert_odd(i64 a, i64 b, i64 p) {
  if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
  require_odd_prime(p);
  return tame(split(a, p), split(b, p), p);
}

OddPrimeHilbert::OddPrimeHilbert(i64 p) : p_(p) { require_odd_prime(p); }

SymbolValue OddPrimeHilbert::operator()(i64 a, i64 b) const {
  if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
  return tame(split(a, p_), split(b, p_), p_);
}

i64 legendre_sum(i64 p) {
  require_odd_prime(p);
  i64 total = 0;
  for (i64 a = 0; a < p; ++a) total += legendre(a * ((a + 1) % p) % p, p);
  return total;
}

}  // namespace campana
