#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "campana/cartan_local.hpp"
#include "campana/constant_engine.hpp"
#include "campana/padic_oracle.hpp"
#include "campana/symbols.hpp"

namespace campana::cli {

namespace {

void fail(LemmaCheck& check, const std::string& detail) {
  if (check.passed) check.detail = detail;
  check.passed = false;
}

std::vector<i64> odd_primes(i64 limit) {
  std::vector<i64> out;
  for (i64 p : primes_up_to(limit)) {
    if (p != 2) out.push_back(p);
  }
  return out;
}

LemmaCheck legendre_sums(i64 p_max) {
  LemmaCheck c{"legendre-sum", 0, true, {}};
  for (i64 p : odd_primes(p_max)) {
    ++c.cases;
    if (const i64 s = legendre_sum(p); s != -1) fail(c, "p=" + std::to_string(p) + " sum=" + std::to_string(s));
  }
  return c;
}

LemmaCheck conic_counts(i64 p_max) {
  LemmaCheck c{"conic-point-count", 0, true, {}};
  for (i64 p : odd_primes(std::min<i64>(p_max, 200))) {
    ++c.cases;
    i64 points = 0;
    for (i64 a = 0; a < p; ++a) {
      for (i64 y = 0; y < p; ++y) {
        if ((a * a + a - y * y) % p == 0) ++points;
      }
    }
    if (points != p - 1) fail(c, "p=" + std::to_string(p) + " points=" + std::to_string(points));
  }
  return c;
}

LemmaCheck hilbert_annulus(const std::vector<i64>& primes) {
  LemmaCheck c{"hilbert-annulus-integral", 0, true, {}};
  for (i64 p : primes) {
    for (i64 d = -30; d <= 30; ++d) {
      if (d == 0 || !is_squarefree(d)) continue;
      for (i64 scale : {i64{1}, p}) {
        const i64 dd = d * scale;
        if (valuation(dd, p) > 1) continue;
        for (int n = 0; n <= 4; ++n) {
          ++c.cases;
          if (oracle::hilbert_annulus_integral_oracle(dd, p, n, 2) != hilbert_annulus_integral(dd, p, n)) {
            fail(c, "d=" + std::to_string(dd) + " p=" + std::to_string(p) + " n=" + std::to_string(n));
          }
        }
      }
    }
  }
  return c;
}

LemmaCheck brauer_factors(const std::vector<i64>& primes) {
  LemmaCheck c{"brauer-local-factor", 0, true, {}};
  for (const auto& d : enumerate_brauer_classes(30)) {
    for (i64 p : primes) {
      ++c.cases;
      const QuadExtValue oracle_value = oracle::brauer_factor_oracle(d, p, 2);
      if (!(oracle_value == brauer_local_factor(d, p))) {
        fail(c, d.to_string() + " p=" + std::to_string(p) + " oracle=" + oracle_value.to_string());
      }
    }
  }
  return c;
}

LemmaCheck middle_shell(const std::vector<i64>& primes) {
  LemmaCheck c{"middle-shell", 0, true, {}};
  for (const auto& d : enumerate_brauer_classes(30)) {
    for (i64 p : primes) {
      if (d.product() % p == 0) continue;
      ++c.cases;
      const QuadExtValue middle = oracle::brauer_factor_breakdown(d, p, 2).middle;
      const QuadExtValue expected(p, Rational(1) - Rational(BigInt(2), BigInt(p)), 0);
      if (!(middle == expected)) fail(c, d.to_string() + " p=" + std::to_string(p) + " middle=" + middle.to_string());
    }
  }
  return c;
}

LemmaCheck class_bijection() {
  LemmaCheck c{"brauer-class-injectivity", 0, true, {}};
  for (const auto& d : enumerate_brauer_classes(30)) {
    ++c.cases;
    const auto r = d.residues();
    const bool trivial = std::all_of(r.begin(), r.end(), [](i64 x) { return x == 1; });
    if (trivial != (d == BrauerClass{1, 1, 1})) fail(c, d.to_string());
  }
  return c;
}

LemmaCheck reciprocity() {
  LemmaCheck c{"reciprocity-identity", 0, true, {}};
  for (const auto& d : enumerate_brauer_classes(105)) {
    if (d.d0 < 0 || d.d1 < 0 || d.d2 < 0 || d.product() % 2 == 0) continue;
    const auto r = invariant_sum_identity_check(d, 999, 100);
    c.cases += r.samples;
    if (!r.holds) {
      const auto& y = *r.witness;
      fail(c, d.to_string() + " y=(" + std::to_string(y[0]) + "," + std::to_string(y[1]) + "," + std::to_string(y[2]) + ")");
    }
  }
  return c;
}

LemmaCheck smith_dual() {
  LemmaCheck c{"smith-normal-form-dual", 0, true, {}};
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<i64> entry(-50, 50);
  for (int n : {2, 3}) {
    int done = 0;
    while (done < 200) {
      std::vector<i64> raw(static_cast<std::size_t>(n * n));
      for (auto& x : raw) x = entry(rng);
      std::optional<IntegerMatrixPoint> point;
      try {
        point = IntegerMatrixPoint::from_entries(n, raw);
      } catch (const std::invalid_argument&) {
        continue;  // singular draw
      }
      const IntegerMatrixPoint& m = *point;
      ++done;
      for (const auto& [p, e] : factorize(m.determinant())) {
        ++c.cases;
        if (smith_exponents(m, p).exponents != oracle::snf_via_minors(n, m.entries(), p)) {
          fail(c, "n=" + std::to_string(n) + " p=" + std::to_string(p));
        }
      }
    }
  }
  return c;
}

LemmaCheck geometric_series() {
  LemmaCheck c{"good-prime-series", 0, true, {}, false};
  const int cutoff = 60;
  for (double q : {2.0, 3.0, 5.0}) {
    for (double shift : {0.6, 1.0, 2.0}) {
      for (const Multiplicity m : {Multiplicity::finite(1), Multiplicity::finite(2), Multiplicity::finite(3),
                                   Multiplicity::infinite()}) {
        for (double sign : {1.0, -1.0}) {
          ++c.cases;
          const double s[] = {shift};
          const int kappa[] = {0};
          const Multiplicity ms[] = {m};
          const std::complex<double> chi[] = {{sign, 0.0}};
          const auto closed = good_prime_series(s, kappa, ms, chi, q);
          const auto direct = oracle::good_prime_series_direct(s, kappa, ms, chi, q, cutoff);
          const double x = std::pow(q, -shift);
          const double bound = std::pow(x, cutoff) / (1 - x) + 1e-12;
          if (std::abs(closed - direct) > bound) fail(c, "q=" + std::to_string(q) + " s-kappa=" + std::to_string(shift));
        }
      }
    }
  }
  return c;
}

}  // namespace

std::vector<LemmaCheck> verify_lemmas(i64 p_max) {
  const auto small_primes = odd_primes(std::min<i64>(p_max, 13));
  return {legendre_sums(p_max),        conic_counts(p_max),   hilbert_annulus(small_primes),
          brauer_factors(small_primes), middle_shell(small_primes), class_bijection(),
          reciprocity(),               smith_dual(),          geometric_series()};
}

nlohmann::json to_json(const std::vector<LemmaCheck>& checks) {
  nlohmann::json lemmas = nlohmann::json::array();
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.passed;
    nlohmann::json j = {{"name", c.name}, {"cases", c.cases}, {"status", !c.passed ? "MISMATCH" : (c.exact ? "exact match" : "within tail bound")}};
    if (!c.passed) j["witness"] = c.detail;
    lemmas.push_back(j);
  }
  return {{"lemmas", lemmas}, {"all_passed", all}};
}

}  // namespace campana::cli
