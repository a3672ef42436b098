#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "campana/arith.hpp"
#include "campana/invariants.hpp"
#include "campana/multiplicity.hpp"
#include "campana/squareful_count.hpp"

namespace campana {

/// Result of counting Campana points of PGL_n(Q) of naive height <= B.
///
/// Points are primitive integer matrices modulo +-1 with max |entry| <= B
/// and nonzero determinant. `scanned` counts those classes; a rejected class
/// is charged to the smallest prime at which the local test fails, so the
/// rejection histogram sums to scanned - count.
struct CountRun {
  int n = 0;
  i64 bound = 0;
  std::vector<Multiplicity> m;
  u64 count = 0;
  u64 scanned = 0;
  std::map<i64, u64> rejections_by_prime;
  /// accepted_by_height[h]: accepted classes of height exactly h.
  std::vector<u64> accepted_by_height;
  double elapsed_ms = 0;
};

/// Exhaustive count. Local data comes from Smith normal form (row and column
/// reduction) at the primes dividing the determinant. Work is split over the
/// first row; results do not depend on `threads`.
/// Throws std::invalid_argument for n outside {2,3}, B < 1, or |m| != n-1.
CountRun count_pgl_campana(int n, i64 bound, std::span<const Multiplicity> m, int threads = 1);

/// One scan, several multiplicity vectors: result[k][h] is the number of
/// accepted classes of height exactly h for ms[k].
std::vector<std::vector<u64>> count_pgl_campana_by_height(int n, i64 bound,
                                                          std::span<const std::vector<Multiplicity>> ms,
                                                          int threads = 1);

struct GrowthReport {
  int n = 0;
  std::vector<Multiplicity> m;
  std::vector<std::pair<i64, u64>> rows;  ///< (B, N(B))
  GrowthFit fit{};
  InvariantReport predicted;
  std::vector<Rational> lambda;
  double relative_gap = 0;  ///< |a_hat - a| / a
  std::vector<std::string> notes;
};

/// Counts at each B in b_list (one scan at the largest B), fits the
/// log-log slope and compares with the a-invariant of PGL_n for the
/// max-entry height. Needs >= 4 strictly increasing bounds.
GrowthReport growth_report(int n, std::span<const Multiplicity> m, std::span<const i64> b_list, int threads = 1);

nlohmann::json to_json(const CountRun& run, bool include_timing);
nlohmann::json to_json(const GrowthReport& report);

}  // namespace campana
