#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "campana/arith.hpp"

namespace campana {

/// True iff every prime dividing |n| does so at least twice (|n| = 1 counts).
/// Throws std::invalid_argument for n == 0.
bool is_squareful(i64 n);

/// All squareful 1 <= k <= B, sorted, generated as a^2 b^3 with b squarefree.
std::vector<i64> squareful_up_to(i64 bound);

/// A primitive Campana point of z0 + z1 + z2 = 0. Every coordinate is nonzero
/// and squareful; the sign is fixed by z0 > 0.
struct CampanaTriple {
  i64 z0, z1, z2;

  i64 height() const;
  friend bool operator==(const CampanaTriple&, const CampanaTriple&) = default;
  friend auto operator<=>(const CampanaTriple&, const CampanaTriple&) = default;
};

/// Sign-normalizes (z0,z1,z2) so that the first coordinate is positive.
CampanaTriple normalize_triple(i64 z0, i64 z1, i64 z2);

/// Largest supported bound; 64-bit arithmetic is exact well past it.
inline constexpr i64 kMaxTripleBound = 1'000'000'000;

/// Number of Campana triples with max |z_i| <= B. The enumeration runs over
/// squareful pairs (z0, z1) and looks up |z0 + z1| in a membership table; work
/// is split over `threads` ranges of z0 and merged exactly.
u64 count_campana_triples(i64 bound, int threads = 1);

/// Calls visit for every Campana triple of height <= B. The order is fixed:
/// increasing z0, then negative z1 before positive, then increasing |z1|.
void for_each_campana_triple(i64 bound, const std::function<void(const CampanaTriple&)>& visit);

/// result[h] = number of triples of height exactly h, 0 <= h <= B.
std::vector<u64> campana_triples_by_height(i64 bound, int threads = 1);

struct GrowthFit {
  double exponent;      ///< least-squares slope of log count against log B
  double log_constant;  ///< intercept
  double constant() const;
};

/// Log-log least squares. Needs >= 4 samples, strictly increasing B > 0 and
/// positive counts; throws std::invalid_argument otherwise.
GrowthFit fit_growth(std::span<const std::pair<double, double>> samples);

}  // namespace campana
