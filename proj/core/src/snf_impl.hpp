#pragma once

#include <array>
#include <stdexcept>
#include <utility>

#include "campana/arith.hpp"

namespace campana::detail {

/// Invariant factors of a nonsingular N x N integer matrix by row and column
/// reduction; overflow-checked. Returns false for a singular matrix.
template <int N>
bool invariant_factors(std::array<i64, N * N> a, std::array<i64, N>& out) {
  auto at = [&a](int r, int c) -> i64& { return a[static_cast<std::size_t>(r * N + c)]; };
  auto abs64 = [](i64 x) { return x < 0 ? -x : x; };
  for (int t = 0; t < N; ++t) {
    while (true) {
      int pr = -1, pc = -1;
      for (int r = t; r < N; ++r) {
        for (int c = t; c < N; ++c) {
          if (at(r, c) != 0 && (pr < 0 || abs64(at(r, c)) < abs64(at(pr, pc)))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr < 0) return false;
      if (pr != t) {
        for (int c = 0; c < N; ++c) std::swap(at(t, c), at(pr, c));
      }
      if (pc != t) {
        for (int r = 0; r < N; ++r) std::swap(at(r, t), at(r, pc));
      }
      const i64 pivot = at(t, t);
      bool cleared = true;
      for (int r = t + 1; r < N; ++r) {
        const i64 q = at(r, t) / pivot;
        if (q != 0) {
          for (int c = t; c < N; ++c) at(r, c) = checked_add(at(r, c), -checked_mul(q, at(t, c)));
        }
        if (at(r, t) != 0) cleared = false;
      }
      for (int c = t + 1; c < N; ++c) {
        const i64 q = at(t, c) / pivot;
        if (q != 0) {
          for (int r = t; r < N; ++r) at(r, c) = checked_add(at(r, c), -checked_mul(q, at(r, t)));
        }
        if (at(t, c) != 0) cleared = false;
      }
      if (!cleared) continue;

      // The pivot must divide the remaining block; otherwise fold the
      // offending row into the pivot row and reduce again.
      int bad_row = -1;
      for (int r = t + 1; r < N && bad_row < 0; ++r) {
        for (int c = t + 1; c < N; ++c) {
          if (at(r, c) % pivot != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      for (int c = t; c < N; ++c) at(t, c) = checked_add(at(t, c), at(bad_row, c));
    }
    out[static_cast<std::size_t>(t)] = abs64(at(t, t));
  }
  return true;
}

}  // namespace campana::detail
