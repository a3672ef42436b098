#pragma once

#include <string>

#include "campana/arith.hpp"
#include "campana/rational.hpp"

namespace campana {

/// Exact element r0 + r1 * p^{-1/2} of Q(sqrt(p)) for a fixed prime p.
/// Mixing values with different p throws std::invalid_argument.
class QuadExtValue {
 public:
  explicit QuadExtValue(i64 p, Rational r0 = 0, Rational r1 = 0);

  /// p^{k/2} for any integer k.
  static QuadExtValue half_power(i64 p, int k);

  i64 prime() const { return p_; }
  const Rational& r0() const { return r0_; }
  const Rational& r1() const { return r1_; }

  double to_double() const;
  /// "r0 + r1*p^(-1/2)" with both rationals as "p/q".
  std::string to_string() const;

  QuadExtValue& operator+=(const QuadExtValue& o);
  QuadExtValue& operator-=(const QuadExtValue& o);
  QuadExtValue& operator*=(const QuadExtValue& o);
  QuadExtValue& operator*=(const Rational& c);

  friend QuadExtValue operator+(QuadExtValue a, const QuadExtValue& b) { return a += b; }
  friend QuadExtValue operator-(QuadExtValue a, const QuadExtValue& b) { return a -= b; }
  friend QuadExtValue operator*(QuadExtValue a, const QuadExtValue& b) { return a *= b; }
  friend QuadExtValue operator*(QuadExtValue a, const Rational& c) { return a *= c; }
  friend QuadExtValue operator*(const Rational& c, QuadExtValue a) { return a *= c; }

  friend bool operator==(const QuadExtValue& a, const QuadExtValue& b) {
    return a.p_ == b.p_ && a.r0_ == b.r0_ && a.r1_ == b.r1_;
  }

 private:
  void require_same_prime(const QuadExtValue& o) const;

  i64 p_;
  Rational r0_;
  Rational r1_;
};

}  // namespace campana
