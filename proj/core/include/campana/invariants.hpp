#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "campana/multiplicity.hpp"
#include "campana/rational.hpp"

namespace campana {

enum class CartanType { A, B, C, D, E, F, G };

char to_char(CartanType type);
/// Accepts a single letter A..G (case-insensitive).
CartanType parse_cartan_type(std::string_view text);

/// Irreducible reduced root system of a split adjoint group, with every
/// vector written in the basis of simple roots (Bourbaki numbering).
struct RootSystemData {
  CartanType cartan_type;
  int rank;
  /// cartan_matrix[i][j] = <alpha_i, alpha_j^vee>.
  std::vector<std::vector<int>> cartan_matrix;
  std::vector<std::vector<int>> simple_roots;
  /// Sorted by height, then lexicographically.
  std::vector<std::vector<int>> positive_roots;
  /// Coefficient of each simple root in 2*rho.
  std::vector<int> kappa;
  std::vector<int> rho2;
};

/// Generates the positive roots by closing the simple roots under simple
/// reflections. Valid pairs: A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4),
/// E_6, E_7, E_8, F_4, G_2; anything else throws std::invalid_argument.
RootSystemData build_root_system(CartanType type, int rank);

/// Boundary weights of a Campana orbifold (X, D_eps) together with the
/// coefficients of a big divisor L = sum lambda_alpha D_alpha.
class OrbifoldConfig {
 public:
  /// eps must lie in {1 - 1/m : m >= 1} or equal 1.
  static OrbifoldConfig from_epsilon(std::vector<Rational> epsilon, std::vector<Rational> lambda);
  static OrbifoldConfig from_multiplicities(std::vector<Multiplicity> m, std::vector<Rational> lambda);

  std::size_t size() const { return epsilon_.size(); }
  const std::vector<Rational>& epsilon() const { return epsilon_; }
  const std::vector<Multiplicity>& multiplicities() const { return m_; }
  const std::vector<Rational>& lambda() const { return lambda_; }
  bool is_klt() const;

 private:
  OrbifoldConfig(std::vector<Rational> eps, std::vector<Multiplicity> m, std::vector<Rational> lambda)
      : epsilon_(std::move(eps)), m_(std::move(m)), lambda_(std::move(lambda)) {}

  std::vector<Rational> epsilon_;
  std::vector<Multiplicity> m_;
  std::vector<Rational> lambda_;
};

Rational epsilon_of(Multiplicity m);
Multiplicity multiplicity_of(const Rational& epsilon);

struct InvariantReport {
  Rational a;
  int b = 0;
  /// 0-based indices of the simple roots attaining the maximum, increasing.
  std::vector<int> maximizers;
  /// kappa_alpha + 1: coefficients of -K_X in the boundary basis.
  std::vector<int> anticanonical;
};

/// a = max_alpha (kappa_alpha + 1 - eps_alpha) / lambda_alpha, b = number of
/// maximizers. Exact; throws std::invalid_argument on a size mismatch or a
/// non-positive lambda.
InvariantReport a_b_invariants(const RootSystemData& rs, const OrbifoldConfig& cfg);

/// (1/pic_order) * prod over maximizers of 1/(m_alpha lambda_alpha).
/// Requires a klt configuration and pic_order > 0.
Rational effective_cone_constant(const RootSystemData& rs, const OrbifoldConfig& cfg,
                                 const InvariantReport& report, long long pic_order);

/// |Pic(PGL_n)| = |Z/nZ| = n.
long long pic_order_pgl(int n);

/// Coefficients of the pull-back of the hyperplane class of P(M_n) (the
/// max-entry height) in the boundary basis of the wonderful compactification
/// of PGL_n: lambda_j = j/n, with alpha_j indexed as in cartan_local.
std::vector<Rational> naive_height_lambda(int n);

/// {type, rank, kappa, anticanonical, epsilon, lambda, a, b, maximizers}.
/// Maximizers are written 1-based (alpha_1, alpha_2, ...).
nlohmann::json to_json(const RootSystemData& rs, const OrbifoldConfig& cfg, const InvariantReport& report);
nlohmann::json to_json(const RootSystemData& rs);

}  // namespace campana
