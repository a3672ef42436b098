#include "campana/brauer_class.hpp"

#include <stdexcept>

namespace campana {

bool BrauerClass::is_admissible(i64 d0, i64 d1, i64 d2) {
  if (d0 == 0 || d1 == 0 || d2 == 0) return false;
  const i64 prod = checked_mul(checked_mul(d0, d1), d2);
  return prod > 0 && is_squarefree(prod);
}

BrauerClass BrauerClass::make(i64 d0, i64 d1, i64 d2) {
  if (!is_admissible(d0, d1, d2)) {
    throw std::invalid_argument("(" + std::to_string(d0) + "," + std::to_string(d1) + "," + std::to_string(d2) +
                                ") is not admissible: need d0*d1*d2 squarefree and positive");
  }
  return BrauerClass{d0, d1, d2};
}

std::string BrauerClass::to_string() const {
  return "(" + std::to_string(d0) + "," + std::to_string(d1) + "," + std::to_string(d2) + ")";
}

}  // namespace campana
