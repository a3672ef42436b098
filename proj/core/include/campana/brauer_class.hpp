#pragma once

#include <array>
#include <compare>
#include <string>

#include "campana/arith.hpp"

namespace campana {

/// Admissible triple (d0, d1, d2) indexing the Campana Brauer class
/// (d0, z1/z2) + (d1, z0/z2) + (d2, z0/z1) on z0 + z1 + z2 = 0:
/// d0*d1*d2 is squarefree and positive.
struct BrauerClass {
  i64 d0 = 1;
  i64 d1 = 1;
  i64 d2 = 1;

  /// Throws std::invalid_argument unless the triple is admissible.
  static BrauerClass make(i64 d0, i64 d1, i64 d2);
  static bool is_admissible(i64 d0, i64 d1, i64 d2);

  i64 product() const { return d0 * d1 * d2; }
  std::array<i64, 3> slots() const { return {d0, d1, d2}; }

  /// Residue along P_i : z_i = 0, the square class d_j * d_k.
  std::array<i64, 3> residues() const { return {d1 * d2, d0 * d2, d0 * d1}; }

  std::string to_string() const;

  friend auto operator<=>(const BrauerClass&, const BrauerClass&) = default;
};

}  // namespace campana
