#pragma once

#include <complex>
#include <span>
#include <vector>

#include "campana/arith.hpp"
#include "campana/brauer_class.hpp"
#include "campana/multiplicity.hpp"
#include "campana/quad_ext.hpp"
#include "campana/rational.hpp"

/// Brute-force reference computations. Everything here is an exact finite
/// computation over residue classes; nothing calls the closed forms that
/// these routines are used to check.
namespace campana::oracle {

/// Integral of (d,t)_p over {t in Q_p : v_p(t) = n} with vol(Z_p) = 1, as
/// p^{-n} (1 - 1/p) times the mean of (d, u p^n)_p over u in (Z/p^depth)^x.
/// Requires d != 0 with v_p(d) <= 1. The prime p must be odd and depth >= 2.
Rational hilbert_annulus_integral_oracle(i64 d, i64 p, int n, int depth);

/// The local Brauer integral of a class at an odd prime, split by the region
/// of t in the parametrisation t -> (t : 1 : -1 - t).
struct BrauerFactorBreakdown {
  QuadExtValue middle;          ///< v(t) = v(1+t) = 0
  QuadExtValue near_zero;       ///< v(t) >= 2
  QuadExtValue near_minus_one;  ///< v(1+t) >= 2
  QuadExtValue near_infinity;   ///< v(t) <= -2

  QuadExtValue total() const { return middle + near_zero + near_minus_one + near_infinity; }
};

/// Integrates
///   (d0,-(1+t))_p (d1,-t(1+t))_p (d2,t)_p / (|t(1+t)|^{1/2} max(|t|,1,|1+t|)^{1/2})
/// over v(t), v(1+t) != +-1. Annuli with |valuation| < depth are summed cell
/// by cell over residues mod p^depth; the three deeper tails are summed as
/// geometric series of annulus integrals evaluated from residues mod p.
/// Throws std::invalid_argument for p == 2, a non-prime p or depth < 2.
BrauerFactorBreakdown brauer_factor_breakdown(const BrauerClass& d, i64 p, int depth);
QuadExtValue brauer_factor_oracle(const BrauerClass& d, i64 p, int depth);

/// Exponents of the primitive normalization of M at p from determinantal
/// divisors: D_k = gcd of k x k minors, d_k = D_k / D_{k-1}, e_i = v_p(d_{n+1-i}).
std::vector<int> snf_via_minors(int n, std::span<const i64> row_major, i64 p);

/// Invariant factors d_1 | ... | d_n of the primitive normalization of M,
/// from determinantal divisors.
std::vector<i64> invariant_factors_via_minors(int n, std::span<const i64> row_major);

/// Number of primitive triples z0 + z1 + z2 = 0, all z_i nonzero and
/// squareful (checked by trial division), z0 > 0, with max |z_i| <= B.
u64 triple_count_oracle(i64 bound);

/// Same scan, histogrammed: result[h] counts triples of height exactly h.
std::vector<u64> triple_count_oracle_by_height(i64 bound);

/// Direct lattice sum of prod_i chi_i^{a_i} q^{-(s_i - kappa_i) a_i} over
/// a in N^k with every a_i in {0} u [m_i, cutoff] (a_i = 0 when m_i is
/// infinite). (cutoff + 1)^k terms; intended for k <= 3.
std::complex<double> good_prime_series_direct(std::span<const double> s, std::span<const int> kappa,
                                              std::span<const Multiplicity> m,
                                              std::span<const std::complex<double>> chi, double q, int cutoff);

/// Exhaustive PGL_n(Q) Campana count that uses determinantal divisors only:
/// every n x n integer matrix with entries in [-B, B] is visited, primitive
/// nonsingular ones with positive leading entry are kept, and the gap test
/// a_i = 0 or a_i >= m_i is applied at each prime of d_n.
/// result[k][h] counts accepted classes of height exactly h for ms[k].
std::vector<std::vector<u64>> pgl_campana_count_oracle_by_height(int n, i64 bound,
                                                                 std::span<const std::vector<Multiplicity>> ms);

}  // namespace campana::oracle
