#include <iostream>

#include <campana/invariants.hpp>

int main() {
  const auto rs = campana::build_root_system(campana::CartanType::G, 2);
  std::cout << rs.kappa[0] << "," << rs.kappa[1] << "\n";
  return rs.kappa == std::vector<int>{10, 6} ? 0 : 1;
}
