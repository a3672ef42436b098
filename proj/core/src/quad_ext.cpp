#include "campana/quad_ext.hpp"

#include <cmath>
#include <stdexcept>

namespace campana {

QuadExtValue::QuadExtValue(i64 p, Rational r0, Rational r1) : p_(p), r0_(std::move(r0)), r1_(std::move(r1)) {
  if (p < 2) throw std::invalid_argument("QuadExtValue needs a prime context");
}

QuadExtValue QuadExtValue::half_power(i64 p, int k) {
  // p^{k/2} = p^{(k+1)/2} * p^{-1/2} for odd k.
  if (k % 2 == 0) return QuadExtValue(p, pow(Rational(p), k / 2), 0);
  const int whole = (k + 1) / 2;  // k odd, so k + 1 is even for either sign
  return QuadExtValue(p, 0, pow(Rational(p), whole));
}

double QuadExtValue::to_double() const {
  return static_cast<double>(r0_) + static_cast<double>(r1_) / std::sqrt(static_cast<double>(p_));
}

std::string QuadExtValue::to_string() const {
  return campana::to_string(r0_) + " + " + campana::to_string(r1_) + "*" + std::to_string(p_) + "^(-1/2)";
}

void QuadExtValue::require_same_prime(const QuadExtValue& o) const {
  if (o.p_ != p_) throw std::invalid_argument("QuadExtValue arithmetic across different primes");
}

QuadExtValue& QuadExtValue::operator+=(const QuadExtValue& o) {
  require_same_prime(o);
  r0_ += o.r0_;
  r1_ += o.r1_;
  return *this;
}

QuadExtValue& QuadExtValue::operator-=(const QuadExtValue& o) {
  require_same_prime(o);
  r0_ -= o.r0_;
  r1_ -= o.r1_;
  return *this;
}

QuadExtValue& QuadExtValue::operator*=(const QuadExtValue& o) {
  require_same_prime(o);
  // (a0 + a1 x)(b0 + b1 x) with x^2 = 1/p.
  Rational c0 = r0_ * o.r0_ + r1_ * o.r1_ / Rational(p_);
  Rational c1 = r0_ * o.r1_ + r1_ * o.r0_;
  r0_ = std::move(c0);
  r1_ = std::move(c1);
  return *this;
}

QuadExtValue& QuadExtValue::operator*=(const Rational& c) {
  r0_ *= c;
  r1_ *= c;
  return *this;
}

}  // namespace campana
