#include "campana/constant_engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "campana/symbols.hpp"

namespace campana {

namespace {

void require_odd_prime(i64 p) {
  if (p == 2) throw std::invalid_argument("the 2-adic factor is not implemented");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

std::vector<i64> odd_prime_divisors(i64 n) {
  std::vector<i64> out;
  for (const auto& [p, e] : factorize(n)) {
    if (p != 2) out.push_back(p);
  }
  return out;
}

// Product over odd p | N of (1 - 1/p) p^{-3/2}: the size of the bad factors.
double bad_part_size(i64 n) {
  double s = 1;
  for (i64 p : odd_prime_divisors(n)) s *= (1.0 - 1.0 / static_cast<double>(p)) * std::pow(static_cast<double>(p), -1.5);
  return s;
}

}  // namespace

std::vector<BrauerClass> enumerate_brauer_classes(i64 d_max) {
  if (d_max < 1) throw std::invalid_argument("D_max must be >= 1");
  constexpr std::array<std::array<i64, 3>, 4> kSigns{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  std::vector<BrauerClass> classes;
  for (i64 n = 1; n <= d_max; ++n) {
    if (!is_squarefree(n)) continue;
    std::vector<i64> primes;
    for (const auto& [p, e] : factorize(n)) primes.push_back(p);
    std::size_t placements = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) placements *= 3;
    for (std::size_t code = 0; code < placements; ++code) {
      std::array<i64, 3> mag{1, 1, 1};
      std::size_t c = code;
      for (i64 p : primes) {
        mag[c % 3] *= p;
        c /= 3;
      }
      for (const auto& sg : kSigns) classes.push_back(BrauerClass{sg[0] * mag[0], sg[1] * mag[1], sg[2] * mag[2]});
    }
  }
  std::sort(classes.begin(), classes.end(), [](const BrauerClass& a, const BrauerClass& b) {
    const i64 pa = a.product(), pb = b.product();
    return pa != pb ? pa < pb : a < b;
  });
  return classes;
}

Rational hilbert_annulus_integral(i64 d, i64 p, int n) {
  require_odd_prime(p);
  if (d == 0) throw std::invalid_argument("d must be nonzero");
  if (valuation(d, p) >= 2) throw std::invalid_argument("v_p(d) >= 2 is outside the formula's range");
  if (d % p == 0) return Rational(0);
  Rational value = (Rational(1) - Rational(BigInt(1), BigInt(p))) * pow(Rational(p), -n);
  if (n % 2 != 0 && legendre(d, p) == -1) value = -value;
  return value;
}

QuadExtValue brauer_local_factor(const BrauerClass& d, i64 p) {
  require_odd_prime(p);
  const Rational p_inv(BigInt(1), BigInt(p));
  if (d.product() % p == 0) {
    const int s = legendre(-d.d0 * d.d1, p) + legendre(-d.d0 * d.d2, p) + legendre(-d.d1 * d.d2, p);
    return QuadExtValue(p, 0, Rational(s) * p_inv);
  }
  const int s = legendre(d.d0 * d.d1, p) + legendre(d.d0 * d.d2, p) + legendre(d.d1 * d.d2, p);
  return QuadExtValue(p, Rational(1) + p_inv, Rational(s) * p_inv);
}

double euler_tail_factor(i64 p_max) {
  if (p_max < 3) throw std::invalid_argument("p_max must be >= 3");
  // For odd n > P: f(n) <= (1/2) int_{n-2}^{n} f, so the sum over odd n > P
  // is at most (1/2) int_{P-1}^inf (x^-2 + 3 x^-3/2) dx.
  const double x = static_cast<double>(p_max - 1);
  const double log_bound = 0.5 * (1.0 / x + 6.0 / std::sqrt(x));
  return std::expm1(log_bound);
}

TruncatedProduct brauer_euler_product(const BrauerClass& d, i64 p_max, std::span<const i64> primes) {
  if (p_max < 3) throw std::invalid_argument("p_max must be >= 3");
  const i64 prod = d.product();
  std::vector<i64> bad = odd_prime_divisors(prod);
  std::vector<i64> order;
  for (i64 p : primes) {
    if (p > p_max) break;
    if (p != 2) order.push_back(p);
  }
  for (i64 p : bad) {
    if (p > p_max) order.push_back(p);
  }
  std::sort(order.begin(), order.end());

  double value = 1;
  for (i64 p : order) {
    const double pd = static_cast<double>(p);
    const double conv = 1.0 - 1.0 / pd;
    double local;
    if (prod % p == 0) {
      const int s = legendre(-d.d0 * d.d1, p) + legendre(-d.d0 * d.d2, p) + legendre(-d.d1 * d.d2, p);
      local = s * std::pow(pd, -1.5);
    } else {
      const int s = legendre(d.d0 * d.d1, p) + legendre(d.d0 * d.d2, p) + legendre(d.d1 * d.d2, p);
      local = 1.0 + 1.0 / pd + s * std::pow(pd, -1.5);
    }
    value *= conv * local;
  }
  return {value, std::abs(value) * euler_tail_factor(p_max), p_max};
}

TruncatedProduct brauer_euler_product(const BrauerClass& d, i64 p_max) {
  const auto primes = primes_up_to(p_max);
  return brauer_euler_product(d, p_max, primes);
}

BrauerSumReport brauer_sum(i64 d_max, i64 p_max, int threads) {
  if (p_max < 3) throw std::invalid_argument("p_max must be >= 3");
  BrauerSumReport report;
  report.d_max = d_max;
  report.p_max = p_max;
  const auto classes = enumerate_brauer_classes(d_max);
  const auto primes = primes_up_to(p_max);

  std::vector<TruncatedProduct> products(classes.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < classes.size(); i += workers) {
      products[i] = brauer_euler_product(classes[i], p_max, primes);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  // Canonical class order for the floating-point sums.
  double largest_good_part = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    report.sum += products[i].value;
    report.euler_tail_bound += products[i].tail_bound;
    report.per_class.push_back({classes[i], products[i]});
    largest_good_part = std::max(largest_good_part, std::abs(products[i].value) / bad_part_size(classes[i].product()));
  }

  // Heuristic: classes of size N > D_max contribute about
  // 4 * 3^omega(N) * (largest observed good part) * bad_part_size(N) each, taken
  // in absolute value and summed out to 64 * D_max.
  const i64 horizon = 64 * d_max;
  for (i64 n = d_max + 1; n <= horizon; ++n) {
    if (!is_squarefree(n)) continue;
    double placements = 4;
    for (std::size_t k = 0; k < factorize(n).size(); ++k) placements *= 3;
    report.class_tail_estimate += placements * largest_good_part * bad_part_size(n);
  }
  return report;
}

nlohmann::json to_json(const BrauerSumReport& report) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : report.per_class) {
    classes.push_back({{"d", {c.d.d0, c.d.d1, c.d.d2}}, {"value", c.product.value}, {"tail_bound", c.product.tail_bound}});
  }
  return {{"D_max", report.d_max},
          {"p_max", report.p_max},
          {"sum", report.sum},
          {"euler_tail_bound", report.euler_tail_bound},
          {"class_tail_estimate", report.class_tail_estimate},
          {"per_class", classes},
          {"omitted_places", {"2", "infinity"}}};
}

std::array<int, 2> reciprocity_sides(const BrauerClass& d, const std::array<i64, 3>& y) {
  for (i64 v : {d.d0, d.d1, d.d2, y[0], y[1], y[2]}) {
    if (v <= 0 || v % 2 == 0) throw std::invalid_argument("reciprocity check needs odd positive entries");
  }
  const int lhs = jacobi(y[1] * y[2], d.d0) * jacobi(y[0] * y[2], d.d1) * jacobi(y[0] * y[1], d.d2);
  const int rhs = jacobi(d.d1 * d.d2, y[0]) * jacobi(d.d0 * d.d2, y[1]) * jacobi(d.d0 * d.d1, y[2]);
  return {lhs, rhs};
}

bool reciprocity_identity_holds(const BrauerClass& d, const std::array<i64, 3>& y) {
  const auto [lhs, rhs] = reciprocity_sides(d, y);
  const auto dv = d.slots();
  int eps = 1;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      if (((dv[i] - 1) / 2) % 2 != 0 && ((y[j] - 1) / 2) % 2 != 0) eps = -eps;
    }
  }
  return lhs == eps * rhs;
}

IdentityCheckResult invariant_sum_identity_check(const BrauerClass& d, i64 y_max, u64 samples, u64 seed) {
  if (y_max < 3) throw std::invalid_argument("y_max must be >= 3");
  const i64 prod = d.product();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<i64> pick(0, (y_max - 1) / 2);
  IdentityCheckResult result;
  while (result.samples < samples) {
    std::array<i64, 3> y{2 * pick(rng) + 1, 2 * pick(rng) + 1, 2 * pick(rng) + 1};
    if (gcd(y[0], y[1]) != 1 || gcd(y[0], y[2]) != 1 || gcd(y[1], y[2]) != 1) continue;
    if (gcd(y[0] * y[1] * y[2], prod) != 1) continue;
    ++result.samples;
    const auto [lhs, rhs] = reciprocity_sides(d, y);
    if (lhs == rhs) ++result.exact_agreements;
    if (!reciprocity_identity_holds(d, y) && result.holds) {
      result.holds = false;
      result.witness = y;
    }
  }
  return result;
}

}  // namespace campana
