#include "campana/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace campana {

char to_char(CartanType type) {
  return "ABCDEFG"[static_cast<int>(type)];
}

CartanType parse_cartan_type(std::string_view text) {
  if (text.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
    if (c >= 'A' && c <= 'G') return static_cast<CartanType>(c - 'A');
  }
  throw std::invalid_argument("unknown Cartan type '" + std::string(text) + "'");
}

namespace {

bool valid_pair(CartanType type, int rank) {
  switch (type) {
    case CartanType::A: return rank >= 1;
    case CartanType::B: return rank >= 2;
    case CartanType::C: return rank >= 3;
    case CartanType::D: return rank >= 4;
    case CartanType::E: return rank >= 6 && rank <= 8;
    case CartanType::F: return rank == 4;
    case CartanType::G: return rank == 2;
  }
  return false;
}

// Gram matrix of the simple roots (integral normalization) from the Dynkin diagram.
std::vector<std::vector<int>> gram_matrix(CartanType type, int n) {
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int w) { g[i][j] = g[j][i] = -w; };
  for (int i = 0; i < n; ++i) g[i][i] = 2;
  switch (type) {
    case CartanType::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, 1);
      break;
    case CartanType::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, 1);
      g[n - 1][n - 1] = 1;
      break;
    case CartanType::C:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, 1);
      link(n - 2, n - 1, 2);
      g[n - 1][n - 1] = 4;
      break;
    case CartanType::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, 1);
      link(n - 3, n - 1, 1);
      break;
    case CartanType::E:
      // 1-3-4-5-6(-7-8), with 2 attached to 4.
      link(0, 2, 1);
      link(1, 3, 1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, 1);
      break;
    case CartanType::F:
      g[0][0] = g[1][1] = 4;
      link(0, 1, 2);
      link(1, 2, 2);
      link(2, 3, 1);
      break;
    case CartanType::G:
      // alpha_1 short.
      g[1][1] = 6;
      link(0, 1, 3);
      break;
  }
  return g;
}

// <beta, alpha_i^vee> for beta in simple-root coordinates.
int pairing(const std::vector<std::vector<int>>& cartan, const std::vector<int>& beta, int i) {
  int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * cartan[j][i];
  return s;
}

}  // namespace

RootSystemData build_root_system(CartanType type, int rank) {
  if (!valid_pair(type, rank)) {
    throw std::invalid_argument(std::string("invalid Cartan pair ") + to_char(type) + "_" + std::to_string(rank));
  }
  const int n = rank;
  const auto gram = gram_matrix(type, n);

  RootSystemData rs{type, rank, {}, {}, {}, {}, {}};
  rs.cartan_matrix.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rs.cartan_matrix[i][j] = 2 * gram[i][j] / gram[j][j];
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    rs.simple_roots.push_back(std::move(e));
  }

  std::set<std::vector<int>> roots(rs.simple_roots.begin(), rs.simple_roots.end());
  std::vector<std::vector<int>> frontier = rs.simple_roots;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        std::vector<int> image = beta;
        image[i] -= pairing(rs.cartan_matrix, beta, i);
        if (roots.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }

  for (const auto& r : roots) {
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) rs.positive_roots.push_back(r);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const auto& x, const auto& y) {
    int hx = 0, hy = 0;
    for (int c : x) hx += c;
    for (int c : y) hy += c;
    return hx != hy ? hx < hy : x < y;
  });

  rs.rho2.assign(n, 0);
  for (const auto& r : rs.positive_roots) {
    for (int i = 0; i < n; ++i) rs.rho2[i] += r[i];
  }
  rs.kappa = rs.rho2;
  return rs;
}

Rational epsilon_of(Multiplicity m) {
  if (m.is_infinite()) return Rational(1);
  return Rational(1) - Rational(BigInt(1), BigInt(m.value()));
}

Multiplicity multiplicity_of(const Rational& epsilon) {
  if (epsilon == 1) return Multiplicity::infinite();
  if (epsilon < 0 || epsilon > 1) {
    throw std::invalid_argument("boundary weight outside [0,1]: " + to_string(epsilon));
  }
  const Rational m = Rational(1) / (Rational(1) - epsilon);
  if (boost::multiprecision::denominator(m) != 1) {
    throw std::invalid_argument("boundary weight " + to_string(epsilon) + " is not of the form 1 - 1/m");
  }
  return Multiplicity::finite(static_cast<int>(boost::multiprecision::numerator(m)));
}

OrbifoldConfig OrbifoldConfig::from_epsilon(std::vector<Rational> epsilon, std::vector<Rational> lambda) {
  if (epsilon.size() != lambda.size()) throw std::invalid_argument("epsilon and lambda differ in length");
  std::vector<Multiplicity> m;
  m.reserve(epsilon.size());
  for (const auto& e : epsilon) m.push_back(multiplicity_of(e));
  return OrbifoldConfig(std::move(epsilon), std::move(m), std::move(lambda));
}

OrbifoldConfig OrbifoldConfig::from_multiplicities(std::vector<Multiplicity> m, std::vector<Rational> lambda) {
  if (m.size() != lambda.size()) throw std::invalid_argument("multiplicities and lambda differ in length");
  std::vector<Rational> eps;
  eps.reserve(m.size());
  for (auto mi : m) eps.push_back(epsilon_of(mi));
  return OrbifoldConfig(std::move(eps), std::move(m), std::move(lambda));
}

bool OrbifoldConfig::is_klt() const {
  return std::none_of(m_.begin(), m_.end(), [](Multiplicity m) { return m.is_infinite(); });
}

InvariantReport a_b_invariants(const RootSystemData& rs, const OrbifoldConfig& cfg) {
  const std::size_t n = rs.kappa.size();
  if (cfg.size() != n) {
    throw std::invalid_argument("orbifold config has " + std::to_string(cfg.size()) + " weights, root system rank is " +
                                std::to_string(n));
  }
  InvariantReport report;
  std::vector<Rational> ratios;
  ratios.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (cfg.lambda()[i] <= 0) {
      throw std::invalid_argument("lambda_" + std::to_string(i + 1) + " = " + to_string(cfg.lambda()[i]) +
                                  " is not positive");
    }
    report.anticanonical.push_back(rs.kappa[i] + 1);
    ratios.push_back((Rational(rs.kappa[i] + 1) - cfg.epsilon()[i]) / cfg.lambda()[i]);
  }
  report.a = *std::max_element(ratios.begin(), ratios.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (ratios[i] == report.a) report.maximizers.push_back(static_cast<int>(i));
  }
  report.b = static_cast<int>(report.maximizers.size());
  return report;
}

Rational effective_cone_constant(const RootSystemData& rs, const OrbifoldConfig& cfg, const InvariantReport& report,
                                 long long pic_order) {
  if (!cfg.is_klt()) throw std::invalid_argument("effective cone constant needs a klt orbifold (all m finite)");
  if (pic_order <= 0) throw std::invalid_argument("|Pic(G)| must be positive");
  if (cfg.size() != rs.kappa.size()) throw std::invalid_argument("orbifold config does not match the root system");
  Rational c = Rational(BigInt(1), BigInt(pic_order));
  for (int i : report.maximizers) {
    c /= Rational(cfg.multiplicities()[i].value()) * cfg.lambda()[i];
  }
  return c;
}

long long pic_order_pgl(int n) {
  if (n < 2) throw std::invalid_argument("PGL_n needs n >= 2");
  return n;
}

std::vector<Rational> naive_height_lambda(int n) {
  if (n < 2) throw std::invalid_argument("PGL_n needs n >= 2");
  std::vector<Rational> lambda;
  for (int j = 1; j < n; ++j) lambda.emplace_back(BigInt(j), BigInt(n));
  return lambda;
}

nlohmann::json to_json(const RootSystemData& rs) {
  return {{"type", std::string(1, to_char(rs.cartan_type))},
          {"rank", rs.rank},
          {"kappa", rs.kappa},
          {"positive_root_count", rs.positive_roots.size()}};
}

nlohmann::json to_json(const RootSystemData& rs, const OrbifoldConfig& cfg, const InvariantReport& report) {
  nlohmann::json j = to_json(rs);
  std::vector<std::string> eps, lambda;
  for (const auto& e : cfg.epsilon()) eps.push_back(to_string(e));
  for (const auto& l : cfg.lambda()) lambda.push_back(to_string(l));
  std::vector<int> maximizers;
  for (int i : report.maximizers) maximizers.push_back(i + 1);
  j["anticanonical"] = report.anticanonical;
  j["epsilon"] = eps;
  j["lambda"] = lambda;
  j["a"] = to_string(report.a);
  j["b"] = report.b;
  j["maximizers"] = maximizers;
  return j;
}

}  // namespace campana
