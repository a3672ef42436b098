#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "campana/arith.hpp"

namespace campana::cli {

struct LemmaCheck {
  std::string name;
  u64 cases = 0;
  bool passed = true;
  std::string detail;  ///< first mismatch, empty on success
  bool exact = true;   ///< false for checks against a truncation bound
};

/// Runs every oracle-versus-closed-form comparison. Legendre sums use all odd
/// primes <= p_max; the p-adic integral checks use odd primes <= min(p_max, 13).
std::vector<LemmaCheck> verify_lemmas(i64 p_max);

nlohmann::json to_json(const std::vector<LemmaCheck>& checks);

}  // namespace campana::cli
