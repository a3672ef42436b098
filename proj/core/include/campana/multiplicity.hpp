#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace campana {

/// Campana multiplicity m_alpha attached to a boundary divisor: a positive
/// integer, or infinity for a divisor of weight 1 (the point must avoid it).
class Multiplicity {
 public:
  static Multiplicity finite(int m);
  static Multiplicity infinite() { return Multiplicity(0); }

  bool is_infinite() const { return value_ == 0; }
  /// Requires !is_infinite().
  int value() const;

  /// True when a local intersection number n is allowed: n == 0, or
  /// n >= m for finite m.
  bool admits(int intersection) const {
    return intersection == 0 || (!is_infinite() && intersection >= value_);
  }

  /// "inf" for infinity, otherwise the decimal value.
  std::string to_string() const;
  /// Accepts a positive integer, "inf", "infinity" or "oo".
  static Multiplicity parse(std::string_view text);

  friend bool operator==(Multiplicity, Multiplicity) = default;

 private:
  explicit Multiplicity(int v) : value_(v) {}
  int value_;
};

std::vector<Multiplicity> parse_multiplicities(std::string_view comma_separated);
std::string to_string(std::span<const Multiplicity> ms);

}  // namespace campana
