#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "campana/arith.hpp"
#include "campana/multiplicity.hpp"

namespace campana {

/// A point of PGL_n(Q), n in {2,3}, represented by a primitive integer matrix
/// whose first nonzero entry (row-major) is positive.
class IntegerMatrixPoint {
 public:
  /// Divides out the content and fixes the sign. Throws std::invalid_argument
  /// for n outside {2,3}, a wrong entry count, or a singular matrix.
  static IntegerMatrixPoint from_entries(int n, std::span<const i64> row_major);

  int size() const { return n_; }
  i64 at(int row, int col) const { return entries_[static_cast<std::size_t>(row * n_ + col)]; }
  std::span<const i64> entries() const { return {entries_.data(), static_cast<std::size_t>(n_ * n_)}; }
  i64 determinant() const;

  friend bool operator==(const IntegerMatrixPoint&, const IntegerMatrixPoint&) = default;

 private:
  IntegerMatrixPoint() = default;
  int n_ = 0;
  std::array<i64, 9> entries_{};
};

/// Local Cartan data of a matrix at a prime p.
///
/// exponents e_1 >= ... >= e_n = 0 are the p-adic valuations of the
/// elementary divisors in decreasing order; gaps a_i = e_i - e_{i+1}
/// (i = 1..n-1) pair with the simple roots alpha_1..alpha_{n-1} of A_{n-1}.
struct CartanProfile {
  i64 p = 0;
  std::vector<int> exponents;
  std::vector<int> gaps;
};

/// Invariant factors d_1 | d_2 | ... | d_n (all positive) of a nonsingular
/// integer n x n matrix (n <= 4), by row and column reduction over Z.
/// Throws std::invalid_argument if the matrix is singular.
std::vector<i64> elementary_divisors(int n, std::span<const i64> row_major);

/// Profile at p from a chain of invariant factors with d_1 = 1.
CartanProfile profile_from_divisors(std::span<const i64> divisors, i64 p);

/// Cartan profile of M at p. Throws std::invalid_argument if p is not prime.
CartanProfile smith_exponents(const IntegerMatrixPoint& m, i64 p);

/// Intersection numbers n_p(D_alpha, M), one per simple root. Every Galois
/// orbit of simple roots is a singleton in the split case, so these are the
/// gaps themselves.
std::vector<int> local_multiplicities(const CartanProfile& profile);

/// True iff each gap is 0 or at least the multiplicity of its divisor (an
/// infinite multiplicity only admits 0).
bool local_campana_indicator(const CartanProfile& profile, std::span<const Multiplicity> m);

/// prod over theta of (1 + chi^m x^m / (1 - chi x)) with x = q^{-(s - kappa)}:
/// the sum of chi^{a} q^{-(s-kappa) a} over a in {0} u [m, inf), per theta.
/// Requires s_theta > kappa_theta and |chi_theta| = 1 for every theta.
std::complex<double> good_prime_series(std::span<const double> s, std::span<const int> kappa,
                                       std::span<const Multiplicity> m,
                                       std::span<const std::complex<double>> chi, double q);

nlohmann::json to_json(const CartanProfile& profile);

}  // namespace campana
