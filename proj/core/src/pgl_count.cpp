#include "campana/pgl_count.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "campana/cartan_local.hpp"
#include "snf_impl.hpp"

namespace campana {

namespace {

constexpr i64 kMaxBound2 = 400;
constexpr i64 kMaxBound3 = 40;

void validate(int n, i64 bound, std::span<const std::vector<Multiplicity>> ms) {
  if (n != 2 && n != 3) throw std::invalid_argument("PGL_n counting supports n in {2,3}");
  if (bound < 1) throw std::invalid_argument("height bound must be >= 1");
  if (bound > (n == 2 ? kMaxBound2 : kMaxBound3)) throw std::invalid_argument("height bound too large for exhaustive count");
  for (const auto& m : ms) {
    if (m.size() != static_cast<std::size_t>(n - 1)) {
      throw std::invalid_argument("need " + std::to_string(n - 1) + " multiplicities for PGL_" + std::to_string(n));
    }
  }
}

// For each multiplicity vector: 0 if the point passes at every prime, else the
// smallest prime where it fails.
using Verdict = std::vector<i64>;

Verdict judge(std::span<const i64> d, std::span<const std::vector<Multiplicity>> ms,
              const SmallestPrimeFactorTable& spf) {
  Verdict v(ms.size(), 0);
  const i64 top = d.back();
  if (top > 1) {
    for (i64 p : spf.prime_support(top)) {
      const CartanProfile profile = profile_from_divisors(d, p);
      for (std::size_t k = 0; k < ms.size(); ++k) {
        if (v[k] == 0 && !local_campana_indicator(profile, ms[k])) v[k] = p;
      }
    }
  }
  return v;
}

// Verdicts keyed by the divisor chain. A primitive 2x2 matrix always has
// chain (1, |det|), and so does any primitive matrix with squarefree det.
template <int N>
class VerdictCache {
 public:
  VerdictCache(std::span<const std::vector<Multiplicity>> ms, const SmallestPrimeFactorTable& spf, i64 det_bound)
      : ms_(ms), spf_(spf), dense_(static_cast<std::size_t>(det_bound) + 1) {}

  // Chain (1, ..., 1, det): the common case, stored densely.
  const Verdict& lookup_trivial(i64 det) {
    auto& slot = dense_[static_cast<std::size_t>(det)];
    if (slot.empty()) {
      std::array<i64, N> d{};
      d.fill(1);
      d[N - 1] = det;
      slot = judge(d, ms_, spf_);
    }
    return slot;
  }

  const Verdict& lookup(const std::array<i64, N>& d) {
    if constexpr (N == 2) {
      return lookup_trivial(d[1]);
    } else {
      // d_1 = 1 for primitive matrices; the rest of the chain decides everything.
      u64 key = 0;
      for (int i = 1; i < N; ++i) key = key * kKeyBase + static_cast<u64>(d[static_cast<std::size_t>(i)]);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
      return cache_.emplace(key, judge(d, ms_, spf_)).first->second;
    }
  }

 private:
  static constexpr u64 kKeyBase = u64{1} << 31;
  std::span<const std::vector<Multiplicity>> ms_;
  const SmallestPrimeFactorTable& spf_;
  std::vector<Verdict> dense_;
  std::unordered_map<u64, Verdict> cache_;
};

struct Tally {
  std::vector<std::vector<u64>> accepted;   // [k][h]
  std::vector<std::vector<u64>> rejections;  // [k][p], dense in p
  u64 scanned = 0;

  Tally(std::size_t k, i64 bound, i64 det_bound)
      : accepted(k, std::vector<u64>(static_cast<std::size_t>(bound) + 1, 0)),
        rejections(k, std::vector<u64>(static_cast<std::size_t>(det_bound) + 1, 0)) {}

  void merge(const Tally& o) {
    scanned += o.scanned;
    for (std::size_t k = 0; k < accepted.size(); ++k) {
      for (std::size_t h = 0; h < accepted[k].size(); ++h) accepted[k][h] += o.accepted[k][h];
      for (std::size_t p = 0; p < rejections[k].size(); ++p) rejections[k][p] += o.rejections[k][p];
    }
  }
};

i64 abs64(i64 x) { return x < 0 ? -x : x; }

// First rows with first nonzero entry positive, in row-major lexicographic order.
template <int N>
std::vector<std::array<i64, N>> first_rows(i64 bound) {
  std::vector<std::array<i64, N>> rows;
  std::array<i64, N> r{};
  r.fill(-bound);
  while (true) {
    i64 lead = 0;
    for (i64 x : r) {
      if (x != 0) {
        lead = x;
        break;
      }
    }
    if (lead > 0) rows.push_back(r);
    int i = N - 1;
    while (i >= 0 && r[static_cast<std::size_t>(i)] == bound) {
      r[static_cast<std::size_t>(i)] = -bound;
      --i;
    }
    if (i < 0) break;
    ++r[static_cast<std::size_t>(i)];
  }
  return rows;
}

struct GcdTable {
  explicit GcdTable(i64 bound) : width(static_cast<std::size_t>(bound) + 1), table(width * width) {
    for (std::size_t a = 0; a < width; ++a) {
      for (std::size_t b = 0; b < width; ++b) table[a * width + b] = gcd(static_cast<i64>(a), static_cast<i64>(b));
    }
  }
  i64 operator()(i64 a, i64 b) const { return table[static_cast<std::size_t>(a) * width + static_cast<std::size_t>(b)]; }
  std::size_t width;
  std::vector<i64> table;
};

template <int N>
void record(const Verdict& v, i64 h, Tally& tally) {
  ++tally.scanned;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) {
      ++tally.accepted[k][static_cast<std::size_t>(h)];
    } else {
      ++tally.rejections[k][static_cast<std::size_t>(v[k])];
    }
  }
}

template <int N>
void scan_rows(i64 bound, std::span<const std::array<i64, N>> rows, VerdictCache<N>& cache, const GcdTable& gcd_of,
               const std::vector<bool>& squarefree, Tally& tally) {
  // All entries after the first row except the last one are decoded from an
  // odometer code; the last entry runs in the innermost loop.
  constexpr int kOuter = N * (N - 1) - 1;
  const i64 width = 2 * bound + 1;
  i64 total = 1;
  for (int i = 0; i < kOuter; ++i) total *= width;

  for (const auto& row : rows) {
    i64 row_gcd = 0;
    i64 row_height = 0;
    for (i64 x : row) {
      row_gcd = gcd_of(row_gcd, abs64(x));
      row_height = std::max(row_height, abs64(x));
    }
    std::array<i64, N * N> m{};
    std::copy(row.begin(), row.end(), m.begin());
    for (i64 code = 0; code < total; ++code) {
      i64 c = code;
      i64 g = row_gcd;
      i64 h = row_height;
      for (int i = N * N - 2; i >= N; --i) {
        const i64 x = c % width - bound;
        c /= width;
        m[static_cast<std::size_t>(i)] = x;
        g = gcd_of(g, abs64(x));
        h = std::max(h, abs64(x));
      }
      [[maybe_unused]] i64 cofactor0 = 0, cofactor1 = 0, cofactor2 = 0;
      if constexpr (N == 3) {
        cofactor0 = m[1] * m[5] - m[2] * m[4];
        cofactor1 = m[2] * m[3] - m[0] * m[5];
        cofactor2 = m[0] * m[4] - m[1] * m[3];
      }
      for (i64 x = -bound; x <= bound; ++x) {
        const i64 ax = abs64(x);
        if (gcd_of(g, ax) != 1) continue;
        const i64 hx = std::max(h, ax);
        if constexpr (N == 2) {
          const i64 det = abs64(m[0] * x - m[1] * m[2]);
          if (det == 0) continue;
          record<N>(cache.lookup_trivial(det), hx, tally);
        } else {
          m[N * N - 1] = x;
          const i64 det = abs64(cofactor0 * m[6] + cofactor1 * m[7] + cofactor2 * x);
          if (det == 0) continue;
          if (squarefree[static_cast<std::size_t>(det)]) {
            // d_2^2 divides det, so the chain is (1, 1, det).
            record<N>(cache.lookup_trivial(det), hx, tally);
            continue;
          }
          std::array<i64, N> d{};
          if (!detail::invariant_factors<N>(m, d)) continue;  // singular
          record<N>(cache.lookup(d), hx, tally);
        }
      }
    }
  }
}

template <int N>
Tally run_scan(i64 bound, std::span<const std::vector<Multiplicity>> ms, int threads) {
  const auto rows = first_rows<N>(bound);
  const GcdTable gcd_of(bound);
  // |det| <= N! B^N, and every invariant factor divides the determinant.
  i64 det_bound = 1;
  for (int i = 0; i < N; ++i) det_bound *= bound * (i + 1);
  const SmallestPrimeFactorTable spf(det_bound);
  std::vector<bool> squarefree(static_cast<std::size_t>(det_bound) + 1, true);
  for (i64 q = 2; q * q <= det_bound; ++q) {
    for (i64 k = q * q; k <= det_bound; k += q * q) squarefree[static_cast<std::size_t>(k)] = false;
  }

  const std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
  std::vector<Tally> partial(workers, Tally(ms.size(), bound, det_bound));
  auto work = [&](std::size_t w) {
    VerdictCache<N> cache(ms, spf, det_bound);
    const std::size_t begin = rows.size() * w / workers;
    const std::size_t end = rows.size() * (w + 1) / workers;
    scan_rows<N>(bound, std::span<const std::array<i64, N>>(rows.data() + begin, end - begin), cache, gcd_of,
                 squarefree, partial[w]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Tally total(ms.size(), bound, det_bound);
  for (const auto& t : partial) total.merge(t);
  return total;
}

Tally scan(int n, i64 bound, std::span<const std::vector<Multiplicity>> ms, int threads) {
  validate(n, bound, ms);
  return n == 2 ? run_scan<2>(bound, ms, threads) : run_scan<3>(bound, ms, threads);
}

}  // namespace

CountRun count_pgl_campana(int n, i64 bound, std::span<const Multiplicity> m, int threads) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::vector<Multiplicity>> ms{std::vector<Multiplicity>(m.begin(), m.end())};
  Tally tally = scan(n, bound, ms, threads);
  CountRun run;
  run.n = n;
  run.bound = bound;
  run.m = ms.front();
  run.scanned = tally.scanned;
  run.accepted_by_height = std::move(tally.accepted.front());
  const auto& rejected = tally.rejections.front();
  for (std::size_t p = 0; p < rejected.size(); ++p) {
    if (rejected[p] != 0) run.rejections_by_prime[static_cast<i64>(p)] = rejected[p];
  }
  for (u64 c : run.accepted_by_height) run.count += c;
  run.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return run;
}

std::vector<std::vector<u64>> count_pgl_campana_by_height(int n, i64 bound,
                                                          std::span<const std::vector<Multiplicity>> ms,
                                                          int threads) {
  return scan(n, bound, ms, threads).accepted;
}

GrowthReport growth_report(int n, std::span<const Multiplicity> m, std::span<const i64> b_list, int threads) {
  if (b_list.size() < 4) throw std::invalid_argument("growth_report needs at least 4 height bounds");
  for (std::size_t i = 1; i < b_list.size(); ++i) {
    if (b_list[i] <= b_list[i - 1]) throw std::invalid_argument("height bounds must be strictly increasing");
  }
  GrowthReport report;
  report.n = n;
  report.m.assign(m.begin(), m.end());
  const CountRun run = count_pgl_campana(n, b_list.back(), m, threads);

  std::vector<std::pair<double, double>> samples;
  u64 cumulative = 0;
  i64 h = 0;
  for (i64 b : b_list) {
    for (; h <= b; ++h) cumulative += run.accepted_by_height[static_cast<std::size_t>(h)];
    report.rows.emplace_back(b, cumulative);
    samples.emplace_back(static_cast<double>(b), static_cast<double>(cumulative));
  }
  report.fit = fit_growth(samples);

  const RootSystemData rs = build_root_system(CartanType::A, n - 1);
  report.lambda = naive_height_lambda(n);
  const OrbifoldConfig cfg = OrbifoldConfig::from_multiplicities(report.m, report.lambda);
  report.predicted = a_b_invariants(rs, cfg);
  const double a = static_cast<double>(report.predicted.a);
  report.relative_gap = std::abs(report.fit.exponent - a) / a;

  if (n == 2) {
    report.notes.push_back("PGL_2 has rank one; the asymptotic is conjectural here and the exponent is reported only");
  }
  report.notes.push_back(
      "max-entry height differs from the adelic height pairing by a bounded factor: exponents comparable, constants not");
  return report;
}

nlohmann::json to_json(const CountRun& run, bool include_timing) {
  nlohmann::json rejections = nlohmann::json::array();
  for (const auto& [p, c] : run.rejections_by_prime) rejections.push_back({{"p", p}, {"count", c}});
  nlohmann::json j = {{"n", run.n},
                      {"B", run.bound},
                      {"m", to_string(run.m)},
                      {"count", run.count},
                      {"scanned", run.scanned},
                      {"rejections_by_prime", rejections}};
  j["elapsed_ms"] = include_timing ? run.elapsed_ms : 0.0;
  return j;
}

nlohmann::json to_json(const GrowthReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [b, c] : report.rows) rows.push_back({{"B", b}, {"count", c}});
  std::vector<std::string> lambda;
  for (const auto& l : report.lambda) lambda.push_back(to_string(l));
  return {{"n", report.n},
          {"m", to_string(report.m)},
          {"rows", rows},
          {"a_hat", report.fit.exponent},
          {"c_hat", report.fit.constant()},
          {"lambda", lambda},
          {"predicted_a", to_string(report.predicted.a)},
          {"predicted_b", report.predicted.b},
          {"relative_gap", report.relative_gap},
          {"notes", report.notes}};
}

}  // namespace campana
