#include "campana/squareful_count.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace campana {

bool is_squareful(i64 n) {
  if (n == 0) throw std::invalid_argument("is_squareful(0) is undefined");
  for (const auto& [p, e] : factorize(n)) {
    if (e < 2) return false;
  }
  return true;
}

std::vector<i64> squareful_up_to(i64 bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  if (bound > kMaxTripleBound * 1000) throw std::invalid_argument("bound too large");
  // Each squareful number has exactly one representation a^2 b^3 with b squarefree.
  std::vector<i64> out;
  for (i64 b = 1; b * b * b <= bound; ++b) {
    if (!is_squarefree(b)) continue;
    const i64 cube = b * b * b;
    for (i64 a = 1; a * a <= bound / cube; ++a) out.push_back(a * a * cube);
  }
  std::sort(out.begin(), out.end());
  return out;
}

i64 CampanaTriple::height() const {
  return std::max({z0 < 0 ? -z0 : z0, z1 < 0 ? -z1 : z1, z2 < 0 ? -z2 : z2});
}

CampanaTriple normalize_triple(i64 z0, i64 z1, i64 z2) {
  if (z0 == 0 || z1 == 0 || z2 == 0) throw std::invalid_argument("Campana triples have nonzero coordinates");
  if (z0 + z1 + z2 != 0) throw std::invalid_argument("triple does not satisfy z0 + z1 + z2 = 0");
  return z0 > 0 ? CampanaTriple{z0, z1, z2} : CampanaTriple{-z0, -z1, -z2};
}

namespace {

void check_bound(i64 bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  if (bound > kMaxTripleBound) {
    throw std::invalid_argument("bound " + std::to_string(bound) + " exceeds " + std::to_string(kMaxTripleBound));
  }
}

struct Sieve {
  std::vector<i64> values;
  std::vector<bool> member;  // member[k] iff k is squareful, 0 < k <= bound

  explicit Sieve(i64 bound) : values(squareful_up_to(bound)), member(static_cast<std::size_t>(bound) + 1, false) {
    for (i64 v : values) member[static_cast<std::size_t>(v)] = true;
  }
};

// Visits triples with z0 = sieve.values[i] for i in [begin, end).
template <class Visit>
void enumerate_range(const Sieve& sieve, i64 bound, std::size_t begin, std::size_t end, Visit&& visit) {
  for (std::size_t i = begin; i < end; ++i) {
    const i64 z0 = sieve.values[i];
    for (int sign : {-1, 1}) {
      for (i64 mag : sieve.values) {
        const i64 z1 = sign * mag;
        const i64 s = z0 + z1;
        if (s == 0) continue;
        const i64 abs_z2 = s < 0 ? -s : s;
        if (abs_z2 > bound || !sieve.member[static_cast<std::size_t>(abs_z2)]) continue;
        if (gcd(z0, mag) != 1) continue;
        visit(CampanaTriple{z0, z1, -s});
      }
    }
  }
}

template <class Result, class MakeWorker, class Merge>
Result run_partitioned(const Sieve& sieve, int threads, MakeWorker make_worker, Merge merge) {
  const std::size_t n = sieve.values.size();
  const std::size_t parts = static_cast<std::size_t>(std::max(1, threads));
  std::vector<Result> partial(parts);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < parts; ++t) {
    const std::size_t begin = n * t / parts;
    const std::size_t end = n * (t + 1) / parts;
    auto work = [&, t, begin, end] { partial[t] = make_worker(begin, end); };
    if (parts == 1) {
      work();
    } else {
      pool.emplace_back(work);
    }
  }
  for (auto& th : pool) th.join();
  Result total = partial.front();
  for (std::size_t t = 1; t < parts; ++t) merge(total, partial[t]);
  return total;
}

}  // namespace

u64 count_campana_triples(i64 bound, int threads) {
  check_bound(bound);
  const Sieve sieve(bound);
  return run_partitioned<u64>(
      sieve, threads,
      [&](std::size_t begin, std::size_t end) {
        u64 count = 0;
        enumerate_range(sieve, bound, begin, end, [&](const CampanaTriple&) { ++count; });
        return count;
      },
      [](u64& total, u64 part) { total += part; });
}

std::vector<u64> campana_triples_by_height(i64 bound, int threads) {
  check_bound(bound);
  const Sieve sieve(bound);
  using Histogram = std::vector<u64>;
  return run_partitioned<Histogram>(
      sieve, threads,
      [&](std::size_t begin, std::size_t end) {
        Histogram h(static_cast<std::size_t>(bound) + 1, 0);
        enumerate_range(sieve, bound, begin, end,
                        [&](const CampanaTriple& t) { ++h[static_cast<std::size_t>(t.height())]; });
        return h;
      },
      [](Histogram& total, const Histogram& part) {
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += part[i];
      });
}

void for_each_campana_triple(i64 bound, const std::function<void(const CampanaTriple&)>& visit) {
  check_bound(bound);
  const Sieve sieve(bound);
  enumerate_range(sieve, bound, 0, sieve.values.size(), visit);
}

double GrowthFit::constant() const { return std::exp(log_constant); }

GrowthFit fit_growth(std::span<const std::pair<double, double>> samples) {
  if (samples.size() < 4) throw std::invalid_argument("fit_growth needs at least 4 samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].first > 0) || !(samples[i].second > 0)) {
      throw std::invalid_argument("fit_growth needs positive bounds and counts");
    }
    if (i > 0 && !(samples[i].first > samples[i - 1].first)) {
      throw std::invalid_argument("fit_growth needs strictly increasing bounds");
    }
  }
  const double n = static_cast<double>(samples.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [b, c] : samples) {
    const double x = std::log(b);
    const double y = std::log(c);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / denom;
  return {slope, (sy - slope * sx) / n};
}

}  // namespace campana
