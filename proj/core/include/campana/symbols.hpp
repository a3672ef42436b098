#pragma once

#include "campana/arith.hpp"
#include "campana/rational.hpp"

namespace campana {

/// Value of a quadratic symbol: -1, 0 or +1.
using SymbolValue = int;

/// Kronecker symbol (a/n): the completely multiplicative extension of the
/// Legendre symbol to every integer n, with (a/-1) = sign(a) and
/// (a/2) = 0, 1, -1 as a is even, +-1 mod 8, +-3 mod 8.
/// Throws std::invalid_argument for (0/0).
SymbolValue kronecker(i64 a, i64 n);

/// Jacobi symbol for odd positive n.
SymbolValue jacobi(i64 a, i64 n);

/// Legendre symbol for an odd prime p (not checked here).
inline SymbolValue legendre(i64 a, i64 p) { return jacobi(a, p); }

/// Hilbert symbol (a,b)_p over Q_p for an odd prime p via the tame formula
/// (-1)^{v(a)v(b)(p-1)/2} (u/p)^{v(b)} (w/p)^{v(a)}, a = u p^{v(a)}, b = w p^{v(b)}.
/// Throws std::invalid_argument if a or b is zero, p == 2 or p is not prime.
SymbolValue hilbert_odd(const Rational& a, const Rational& b, i64 p);
SymbolValue hilbert_odd(i64 a, i64 b, i64 p);

/// Hilbert symbol at one fixed odd prime, validated once on construction.
class OddPrimeHilbert {
 public:
  /// Throws std::invalid_argument if p == 2 or p is not prime.
  explicit OddPrimeHilbert(i64 p);

  i64 prime() const { return p_; }
  /// (a,b)_p for nonzero integers.
  SymbolValue operator()(i64 a, i64 b) const;

 private:
  i64 p_;
};

/// sum over a in F_p of ((a(1+a))/p), by direct evaluation. Requires an odd
/// prime p.
i64 legendre_sum(i64 p);

}  // namespace campana
