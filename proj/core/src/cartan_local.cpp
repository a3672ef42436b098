#include "campana/cartan_local.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "snf_impl.hpp"

namespace campana {

namespace {

i64 det2(i64 a, i64 b, i64 c, i64 d) { return checked_add(checked_mul(a, d), -checked_mul(b, c)); }

i64 determinant_of(int n, std::span<const i64> m) {
  if (n == 2) return det2(m[0], m[1], m[2], m[3]);
  if (n == 3) {
    i64 d = checked_mul(m[0], det2(m[4], m[5], m[7], m[8]));
    d = checked_add(d, -checked_mul(m[1], det2(m[3], m[5], m[6], m[8])));
    d = checked_add(d, checked_mul(m[2], det2(m[3], m[4], m[6], m[7])));
    return d;
  }
  throw std::invalid_argument("determinant only implemented for n in {2,3}");
}

}  // namespace

template <int N>
std::vector<i64> fixed_divisors(std::span<const i64> row_major) {
  std::array<i64, N * N> a{};
  std::copy(row_major.begin(), row_major.end(), a.begin());
  std::array<i64, N> d{};
  if (!detail::invariant_factors<N>(a, d)) {
    throw std::invalid_argument("singular matrix has no Smith form of full rank");
  }
  return {d.begin(), d.end()};
}

std::vector<i64> elementary_divisors(int n, std::span<const i64> row_major) {
  if (n < 1 || row_major.size() != static_cast<std::size_t>(n * n)) {
    throw std::invalid_argument("matrix entry count does not match n");
  }
  switch (n) {
    case 1: return fixed_divisors<1>(row_major);
    case 2: return fixed_divisors<2>(row_major);
    case 3: return fixed_divisors<3>(row_major);
    case 4: return fixed_divisors<4>(row_major);
    default: throw std::invalid_argument("elementary_divisors supports n <= 4");
  }
}

IntegerMatrixPoint IntegerMatrixPoint::from_entries(int n, std::span<const i64> row_major) {
  if (n != 2 && n != 3) throw std::invalid_argument("matrix points are supported for n in {2,3}");
  if (row_major.size() != static_cast<std::size_t>(n * n)) {
    throw std::invalid_argument("expected " + std::to_string(n * n) + " entries");
  }
  IntegerMatrixPoint m;
  m.n_ = n;
  i64 content = 0;
  for (i64 x : row_major) content = gcd(content, x);
  if (content == 0) throw std::invalid_argument("zero matrix");
  i64 sign = 0;
  for (i64 x : row_major) {
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  }
  for (std::size_t i = 0; i < row_major.size(); ++i) m.entries_[i] = sign * (row_major[i] / content);
  if (m.determinant() == 0) throw std::invalid_argument("singular matrix is not a point of PGL_n");
  return m;
}

i64 IntegerMatrixPoint::determinant() const { return determinant_of(n_, entries()); }

CartanProfile profile_from_divisors(std::span<const i64> divisors, i64 p) {
  const std::size_t n = divisors.size();
  CartanProfile profile;
  profile.p = p;
  profile.exponents.resize(n);
  for (std::size_t i = 0; i < n; ++i) profile.exponents[i] = valuation(divisors[n - 1 - i], p);
  if (profile.exponents.back() != 0) {
    throw std::invalid_argument("divisor chain is not primitive (d_1 divisible by p)");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) profile.gaps.push_back(profile.exponents[i] - profile.exponents[i + 1]);
  return profile;
}

CartanProfile smith_exponents(const IntegerMatrixPoint& m, i64 p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const auto d = elementary_divisors(m.size(), m.entries());
  return profile_from_divisors(d, p);
}

std::vector<int> local_multiplicities(const CartanProfile& profile) { return profile.gaps; }

bool local_campana_indicator(const CartanProfile& profile, std::span<const Multiplicity> m) {
  if (m.size() != profile.gaps.size()) {
    throw std::invalid_argument("need one multiplicity per simple root (" + std::to_string(profile.gaps.size()) + ")");
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].admits(profile.gaps[i])) return false;
  }
  return true;
}

std::complex<double> good_prime_series(std::span<const double> s, std::span<const int> kappa,
                                       std::span<const Multiplicity> m,
                                       std::span<const std::complex<double>> chi, double q) {
  if (s.size() != kappa.size() || s.size() != m.size() || s.size() != chi.size()) {
    throw std::invalid_argument("good_prime_series: argument lengths differ");
  }
  if (!(q >= 2)) throw std::invalid_argument("good_prime_series: q must be a prime power >= 2");
  std::complex<double> product(1.0, 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double shift = s[i] - kappa[i];
    if (!(shift > 0)) {
      throw std::domain_error("good_prime_series diverges: s_" + std::to_string(i + 1) + " <= kappa");
    }
    if (std::abs(std::abs(chi[i]) - 1.0) > 1e-12) throw std::invalid_argument("character values must have modulus 1");
    if (m[i].is_infinite()) continue;
    const std::complex<double> z = chi[i] * std::pow(q, -shift);
    std::complex<double> zm(1.0, 0.0);
    for (int k = 0; k < m[i].value(); ++k) zm *= z;
    product *= 1.0 + zm / (1.0 - z);
  }
  return product;
}

nlohmann::json to_json(const CartanProfile& profile) {
  return {{"p", profile.p}, {"e", profile.exponents}, {"a", profile.gaps}};
}

}  // namespace campana
