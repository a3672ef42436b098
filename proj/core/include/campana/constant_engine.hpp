#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "campana/arith.hpp"
#include "campana/brauer_class.hpp"
#include "campana/quad_ext.hpp"
#include "campana/rational.hpp"

namespace campana {

/// All admissible classes with |d0 d1 d2| <= D_max, ordered by |d0 d1 d2|
/// and then lexicographically.
std::vector<BrauerClass> enumerate_brauer_classes(i64 d_max);

/// Closed form of int_{v_p(t) = n} (d,t)_p dt for an odd prime p and
/// v_p(d) <= 1: zero when p | d, else (1 - 1/p) p^{-n} (d/p)^n.
Rational hilbert_annulus_integral(i64 d, i64 p, int n);

/// Closed form of the local Brauer integral at an odd prime:
///   p | d0d1d2:  ((-d0d1/p) + (-d0d2/p) + (-d1d2/p)) p^{-3/2}
///   otherwise:   1 + 1/p + ((d0d1/p) + (d0d2/p) + (d1d2/p)) p^{-3/2}
/// Throws std::invalid_argument for p == 2 or a non-prime p.
QuadExtValue brauer_local_factor(const BrauerClass& d, i64 p);

/// A truncated Euler product and a rigorous bound on |full - truncated|.
struct TruncatedProduct {
  double value = 0;
  double tail_bound = 0;
  i64 p_max = 0;
};

/// prod_{p | d, p odd} (1 - 1/p) (bad factor) * prod_{p odd, p not | d, p <= p_max} (1 - 1/p) (good factor),
/// multiplied in increasing order of p. The tail bound uses
/// |(1 - 1/p) L_p - 1| <= p^{-2} + 3 p^{-3/2} for good primes beyond p_max.
TruncatedProduct brauer_euler_product(const BrauerClass& d, i64 p_max);

/// Same, reusing a precomputed list of the primes <= p_max.
TruncatedProduct brauer_euler_product(const BrauerClass& d, i64 p_max, std::span<const i64> primes);

/// |sum_{p > p_max good} ...| style bound multiplier: exp(L) - 1 with
/// L >= sum over odd n > p_max of (n^{-2} + 3 n^{-3/2}).
double euler_tail_factor(i64 p_max);

struct ClassContribution {
  BrauerClass d;
  TruncatedProduct product;
};

struct BrauerSumReport {
  i64 d_max = 0;
  i64 p_max = 0;
  double sum = 0;
  /// Sum of the per-class tail bounds (Euler-product truncation only).
  double euler_tail_bound = 0;
  /// Heuristic size of the omitted classes |d0d1d2| > D_max; not a bound.
  double class_tail_estimate = 0;
  std::vector<ClassContribution> per_class;
};

/// Sum of brauer_euler_product over enumerate_brauer_classes(D_max). Classes
/// are evaluated on `threads` workers and summed in the canonical class order,
/// so the result does not depend on the thread count.
BrauerSumReport brauer_sum(i64 d_max, i64 p_max, int threads = 1);

/// {D_max, p_max, sum, euler_tail_bound, class_tail_estimate,
///  per_class:[{d:[..], value, tail_bound}], omitted_places:["2","infinity"]}
nlohmann::json to_json(const BrauerSumReport& report);

struct IdentityCheckResult {
  bool holds = true;
  u64 samples = 0;
  /// Samples where the two products agree without the 2-adic sign.
  u64 exact_agreements = 0;
  std::optional<std::array<i64, 3>> witness;
};

/// Reciprocity identity behind the Euler product over y:
///   (y1y2/d0)(y0y2/d1)(y0y1/d2) = eps * (d1d2/y0)(d0d2/y1)(d0d1/y2),
/// where eps = prod_{i != j} (-1)^{(d_i-1)/2 * (y_j-1)/2} is the 2-adic factor.
/// Checks one tuple; d and y must be odd and positive, y coprime to d0d1d2.
bool reciprocity_identity_holds(const BrauerClass& d, const std::array<i64, 3>& y);
/// The left and right symbol products without the 2-adic factor.
std::array<int, 2> reciprocity_sides(const BrauerClass& d, const std::array<i64, 3>& y);

/// Checks `samples` random tuples of odd y_i <= y_max, pairwise coprime and
/// coprime to d0d1d2, drawn from a fixed-seed generator. The first failing
/// tuple, if any, is returned as the witness.
IdentityCheckResult invariant_sum_identity_check(const BrauerClass& d, i64 y_max, u64 samples = 1000,
                                                 u64 seed = 0x5eed);

}  // namespace campana
