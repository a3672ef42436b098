#include "campana/padic_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "campana/symbols.hpp"

namespace campana::oracle {

namespace {

void require_depth(int depth) {
  if (depth < 2) throw std::invalid_argument("oracle depth must be >= 2");
}

// Value of (d, x/p^k)_p for an integer x != 0, k >= 0.
SymbolValue symbol_over_power(const OddPrimeHilbert& h, i64 d, i64 x, int k) {
  SymbolValue s = h(d, x);
  if (k % 2 != 0) s *= h(d, h.prime());
  return s;
}

// A point of Q_p written as num / p^shift with num an integer.
struct Point {
  i64 num;
  int shift;
};

struct Evaluation {
  SymbolValue sign;
  int vt;  // v(t)
  int vs;  // v(1 + t)
};

Evaluation evaluate(const OddPrimeHilbert& h, const BrauerClass& d, Point t) {
  const i64 p = h.prime();
  const i64 scale = ipow(p, t.shift);
  const i64 one_plus = checked_add(scale, t.num);  // (1 + t) * p^shift
  const i64 neg_t_one_plus = -checked_mul(t.num, one_plus);  // -t(1+t) * p^{2 shift}
  Evaluation e{};
  e.sign = symbol_over_power(h, d.d0, -one_plus, t.shift) * symbol_over_power(h, d.d1, neg_t_one_plus, 2 * t.shift) *
           symbol_over_power(h, d.d2, t.num, t.shift);
  e.vt = valuation(t.num, p) - t.shift;
  e.vs = valuation(one_plus, p) - t.shift;
  return e;
}

bool in_campana_region(int vt, int vs) { return vt != 1 && vt != -1 && vs != 1 && vs != -1; }

// |t(1+t)|^{-1/2} max(|t|,1,|1+t|)^{-1/2} = p^{weight_exponent/2}.
int weight_exponent(int vt, int vs) { return vt + vs + std::min({vt, 0, vs}); }

enum class Region { middle, near_zero, near_minus_one, near_infinity };

Region classify(int vt, int vs) {
  if (vt >= 2) return Region::near_zero;
  if (vs >= 2) return Region::near_minus_one;
  if (vt <= -2) return Region::near_infinity;
  return Region::middle;
}

// Accumulates integer sign sums per (weight exponent, cell measure exponent),
// so the rational arithmetic happens once per key instead of once per cell.
class Accumulator {
 public:
  explicit Accumulator(i64 p) : p_(p) {}

  void add(Region r, int weight_exp, int measure_exp, i64 signs) {
    cells_[{static_cast<int>(r), weight_exp, measure_exp}] += signs;
  }

  BrauerFactorBreakdown finish() const {
    BrauerFactorBreakdown out{QuadExtValue(p_), QuadExtValue(p_), QuadExtValue(p_), QuadExtValue(p_)};
    for (const auto& [key, signs] : cells_) {
      const auto [region, weight_exp, measure_exp] = key;
      if (signs == 0) continue;
      // measure p^{measure_exp}; weight p^{weight_exp/2}
      QuadExtValue term = QuadExtValue::half_power(p_, weight_exp + 2 * measure_exp) * Rational(signs);
      switch (static_cast<Region>(region)) {
        case Region::middle: out.middle += term; break;
        case Region::near_zero: out.near_zero += term; break;
        case Region::near_minus_one: out.near_minus_one += term; break;
        case Region::near_infinity: out.near_infinity += term; break;
      }
    }
    return out;
  }

 private:
  i64 p_;
  std::map<std::tuple<int, int, int>, i64> cells_;
};

// Integral over one annulus-type set {t = base(a, j)} with a running over
// units mod p, each cell of measure p^{measure_exp(j)}. Returns the exact
// value as a QuadExtValue.
template <class PointOf, class MeasureOf>
QuadExtValue annulus_integral(const OddPrimeHilbert& h, const BrauerClass& d, int j, PointOf point_of,
                              MeasureOf measure_exp_of) {
  const i64 p = h.prime();
  Accumulator acc(p);
  for (i64 a = 1; a < p; ++a) {
    const Point t = point_of(a, j);
    const Evaluation e = evaluate(h, d, t);
    if (!in_campana_region(e.vt, e.vs)) throw std::logic_error("tail annulus left the Campana region");
    acc.add(Region::middle, weight_exponent(e.vt, e.vs), measure_exp_of(j), e.sign);
  }
  return acc.finish().middle;
}

// Sum of annulus integrals I_j over j >= start, where I_{j+2} = I_j / p.
// Evaluates four consecutive annuli and checks the period-two ratio before
// summing the two geometric series.
template <class PointOf, class MeasureOf>
QuadExtValue geometric_tail(const OddPrimeHilbert& h, const BrauerClass& d, int start, PointOf point_of,
                            MeasureOf measure_exp_of) {
  const i64 p = h.prime();
  QuadExtValue i0 = annulus_integral(h, d, start, point_of, measure_exp_of);
  QuadExtValue i1 = annulus_integral(h, d, start + 1, point_of, measure_exp_of);
  QuadExtValue i2 = annulus_integral(h, d, start + 2, point_of, measure_exp_of);
  QuadExtValue i3 = annulus_integral(h, d, start + 3, point_of, measure_exp_of);
  const Rational inv_p(BigInt(1), BigInt(p));
  if (!(i2 == i0 * inv_p) || !(i3 == i1 * inv_p)) {
    throw std::logic_error("tail annuli are not geometric with ratio 1/p");
  }
  return (i0 + i1) * (Rational(1) / (Rational(1) - inv_p));
}

bool powerful_by_trial_division(i64 n) {
  if (n < 0) n = -n;
  for (i64 q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    n /= q;
    if (n % q != 0) return false;
    while (n % q == 0) n /= q;
  }
  return n == 1;
}

i64 determinant(const std::vector<i64>& m, int k) {
  if (k == 1) return m[0];
  i64 det = 0;
  for (int c = 0; c < k; ++c) {
    std::vector<i64> sub;
    sub.reserve(static_cast<std::size_t>((k - 1) * (k - 1)));
    for (int r = 1; r < k; ++r) {
      for (int cc = 0; cc < k; ++cc) {
        if (cc != c) sub.push_back(m[static_cast<std::size_t>(r * k + cc)]);
      }
    }
    const i64 term = checked_mul(m[static_cast<std::size_t>(c)], determinant(sub, k - 1));
    det = checked_add(det, (c % 2 == 0) ? term : -term);
  }
  return det;
}

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

Rational hilbert_annulus_integral_oracle(i64 d, i64 p, int n, int depth) {
  require_depth(depth);
  if (d == 0) throw std::invalid_argument("d must be nonzero");
  const OddPrimeHilbert h(p);
  if (valuation(d, p) >= 2) throw std::invalid_argument("v_p(d) >= 2 is outside the annulus formula's range");

  const i64 modulus = ipow(p, depth);
  const SymbolValue at_p = h(d, p);
  i64 signs = 0;
  i64 units = 0;
  for (i64 u = 1; u < modulus; ++u) {
    if (u % p == 0) continue;
    ++units;
    SymbolValue s = h(d, u);
    if (n % 2 != 0) s *= at_p;  // (d, u p^n) = (d,u)(d,p)^n
    signs += s;
  }
  return pow(Rational(p), -n) * (Rational(1) - Rational(BigInt(1), BigInt(p))) * Rational(BigInt(signs), BigInt(units));
}

BrauerFactorBreakdown brauer_factor_breakdown(const BrauerClass& d, i64 p, int depth) {
  require_depth(depth);
  const OddPrimeHilbert h(p);
  const i64 modulus = ipow(p, depth);
  Accumulator acc(p);

  // t in Z_p away from 0 and -1 to depth `depth`: cells r + p^depth Z_p.
  for (i64 r = 1; r + 1 < modulus; ++r) {
    const Evaluation e = evaluate(h, d, {r, 0});
    if (!in_campana_region(e.vt, e.vs)) continue;
    acc.add(classify(e.vt, e.vs), weight_exponent(e.vt, e.vs), -depth, e.sign);
  }
  // v(t) = -k for 2 <= k < depth: t = w / p^k, cells w + p^depth Z_p.
  for (int k = 2; k < depth; ++k) {
    for (i64 w = 1; w < modulus; ++w) {
      if (w % p == 0) continue;
      const Evaluation e = evaluate(h, d, {w, k});
      acc.add(classify(e.vt, e.vs), weight_exponent(e.vt, e.vs), k - depth, e.sign);
    }
  }
  BrauerFactorBreakdown out = acc.finish();

  // Deeper annuli: cells {v = j, unit part = a mod p} of measure p^{-j-1}.
  out.near_zero += geometric_tail(
      h, d, depth, [p](i64 a, int j) { return Point{checked_mul(a, ipow(p, j)), 0}; },
      [](int j) { return -j - 1; });
  out.near_minus_one += geometric_tail(
      h, d, depth, [p](i64 a, int j) { return Point{checked_add(-1, checked_mul(a, ipow(p, j))), 0}; },
      [](int j) { return -j - 1; });
  out.near_infinity += geometric_tail(
      h, d, std::max(depth, 2), [](i64 a, int k) { return Point{a, k}; }, [](int k) { return k - 1; });
  return out;
}

QuadExtValue brauer_factor_oracle(const BrauerClass& d, i64 p, int depth) {
  return brauer_factor_breakdown(d, p, depth).total();
}

std::vector<i64> invariant_factors_via_minors(int n, std::span<const i64> row_major) {
  if (n < 1 || row_major.size() != static_cast<std::size_t>(n * n)) {
    throw std::invalid_argument("matrix entry count does not match n");
  }
  i64 content = 0;
  for (i64 x : row_major) content = gcd(content, x);
  if (content == 0) throw std::invalid_argument("singular matrix");

  std::vector<i64> m(row_major.begin(), row_major.end());
  for (i64& x : m) x /= content;

  std::vector<i64> determinantal(static_cast<std::size_t>(n) + 1, 1);
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<int>> subsets;
    combinations(n, k, subsets);
    i64 g = 0;
    for (const auto& rows : subsets) {
      for (const auto& cols : subsets) {
        std::vector<i64> sub;
        for (int r : rows) {
          for (int c : cols) sub.push_back(m[static_cast<std::size_t>(r * n + c)]);
        }
        g = gcd(g, determinant(sub, k));
      }
    }
    if (g == 0) throw std::invalid_argument("singular matrix");
    determinantal[static_cast<std::size_t>(k)] = g;
  }
  std::vector<i64> factors;
  for (int k = 1; k <= n; ++k) {
    factors.push_back(determinantal[static_cast<std::size_t>(k)] / determinantal[static_cast<std::size_t>(k - 1)]);
  }
  return factors;
}

std::vector<int> snf_via_minors(int n, std::span<const i64> row_major, i64 p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const auto d = invariant_factors_via_minors(n, row_major);
  std::vector<int> e;
  for (int i = n - 1; i >= 0; --i) e.push_back(valuation(d[static_cast<std::size_t>(i)], p));
  return e;
}

std::vector<u64> triple_count_oracle_by_height(i64 bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  std::vector<u64> by_height(static_cast<std::size_t>(bound) + 1, 0);
  for (i64 z0 = 1; z0 <= bound; ++z0) {
    if (!powerful_by_trial_division(z0)) continue;
    for (i64 z1 = -bound; z1 <= bound; ++z1) {
      const i64 z2 = -(z0 + z1);
      if (z1 == 0 || z2 == 0 || z2 > bound || z2 < -bound) continue;
      if (gcd(z0, z1) != 1) continue;
      if (!powerful_by_trial_division(z1) || !powerful_by_trial_division(z2)) continue;
      const i64 h = std::max({z0, z1 < 0 ? -z1 : z1, z2 < 0 ? -z2 : z2});
      ++by_height[static_cast<std::size_t>(h)];
    }
  }
  return by_height;
}

u64 triple_count_oracle(i64 bound) {
  const auto h = triple_count_oracle_by_height(bound);
  return std::accumulate(h.begin(), h.end(), u64{0});
}

std::complex<double> good_prime_series_direct(std::span<const double> s, std::span<const int> kappa,
                                              std::span<const Multiplicity> m,
                                              std::span<const std::complex<double>> chi, double q, int cutoff) {
  const std::size_t k = s.size();
  if (kappa.size() != k || m.size() != k || chi.size() != k) throw std::invalid_argument("argument lengths differ");
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  std::vector<int> a(k, 0);
  std::complex<double> total(0.0, 0.0);
  auto allowed = [&](std::size_t i, int v) {
    if (v == 0) return true;
    return !m[i].is_infinite() && v >= m[i].value();
  };
  while (true) {
    bool ok = true;
    std::complex<double> term(1.0, 0.0);
    for (std::size_t i = 0; i < k && ok; ++i) {
      ok = allowed(i, a[i]);
      term *= std::pow(chi[i], a[i]) * std::pow(q, -(s[i] - kappa[i]) * a[i]);
    }
    if (ok) total += term;
    std::size_t i = k;
    while (i > 0 && a[i - 1] == cutoff) {
      a[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    ++a[i - 1];
  }
  return total;
}

std::vector<std::vector<u64>> pgl_campana_count_oracle_by_height(int n, i64 bound,
                                                                 std::span<const std::vector<Multiplicity>> ms) {
  if (n < 2 || n > 3) throw std::invalid_argument("oracle supports n in {2,3}");
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  std::vector<std::vector<u64>> by_height(ms.size(), std::vector<u64>(static_cast<std::size_t>(bound) + 1, 0));
  const std::size_t cells = static_cast<std::size_t>(n * n);
  std::vector<i64> m(cells, -bound);
  while (true) {
    i64 content = 0, lead = 0, height = 0;
    for (i64 x : m) {
      content = gcd(content, x);
      if (lead == 0) lead = x;
      height = std::max(height, x < 0 ? -x : x);
    }
    if (content == 1 && lead > 0 && determinant(m, n) != 0) {
      const auto d = invariant_factors_via_minors(n, m);
      for (std::size_t k = 0; k < ms.size(); ++k) {
        bool accepted = true;
        for (const auto& [p, unused] : factorize(d.back())) {
          std::vector<int> e;
          for (int i = n - 1; i >= 0; --i) e.push_back(valuation(d[static_cast<std::size_t>(i)], p));
          for (int i = 0; i + 1 < n; ++i) {
            const int gap = e[static_cast<std::size_t>(i)] - e[static_cast<std::size_t>(i + 1)];
            const Multiplicity mult = ms[k][static_cast<std::size_t>(i)];
            if (gap != 0 && (mult.is_infinite() || gap < mult.value())) accepted = false;
          }
        }
        if (accepted) ++by_height[k][static_cast<std::size_t>(height)];
      }
    }
    std::size_t i = cells;
    while (i > 0 && m[i - 1] == bound) {
      m[i - 1] = -bound;
      --i;
    }
    if (i == 0) break;
    ++m[i - 1];
  }
  return by_height;
}

}  // namespace campana::oracle
