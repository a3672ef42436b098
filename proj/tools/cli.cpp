#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "campana/constant_engine.hpp"
#include "campana/invariants.hpp"
#include "campana/pgl_count.hpp"
#include "campana/squareful_count.hpp"
#include "verify.hpp"

namespace campana::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Common {
  std::string format = "json";
  int threads = 1;
  std::string out_path;
  std::string config_path;
  bool timing = false;
};

int default_threads() {
  if (const char* env = std::getenv("CAMPANA_THREADS")) {
    int t = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), t);
    if (ec == std::errc() && ptr == s.data() + s.size() && t >= 1) return t;
  }
  return 1;
}

void add_common(CLI::App& sub, Common& common) {
  sub.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub.add_option("--threads", common.threads, "Worker threads (default: $CAMPANA_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  sub.add_option("--out", common.out_path, "Write output to this file instead of stdout");
  sub.add_option("--config", common.config_path, "JSON file supplying default flag values");
  sub.add_flag("--timing", common.timing, "Record wall-clock times in elapsed_ms columns (otherwise 0)");
}

std::string fmt_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split_list(text)) out.push_back(parse_rational(item));
  return out;
}

std::vector<i64> parse_ints(const std::string& text) {
  std::vector<i64> out;
  for (const auto& item : split_list(text)) {
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("malformed integer '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

double elapsed_ms(Clock::time_point start, bool timing) {
  return timing ? std::chrono::duration<double, std::milli>(Clock::now() - start).count() : 0.0;
}

void emit(const Common& common, const std::string& payload, std::ostream& out) {
  if (common.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(common.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + common.out_path);
  file << payload;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// Config-file values become flags placed before the command-line flags, so
// anything given explicitly wins (options take the last value).
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty() || args.size() < 2) return args;

  std::ifstream file(path);
  if (!file) throw CLI::ValidationError("--config", "cannot open " + path);
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw CLI::ValidationError("--config", std::string("invalid JSON: ") + e.what());
  }
  if (!cfg.is_object()) throw CLI::ValidationError("--config", "config must be a JSON object");

  std::vector<std::string> injected;
  for (const auto& [key, value] : cfg.items()) {
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) injected.push_back(flag);
      continue;
    }
    injected.push_back(flag);
    if (value.is_string()) {
      injected.push_back(value.get<std::string>());
    } else if (value.is_array()) {
      std::string joined;
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) joined += ',';
        joined += value[i].is_string() ? value[i].get<std::string>() : value[i].dump();
      }
      injected.push_back(joined);
    } else {
      injected.push_back(value.dump());
    }
  }
  std::vector<std::string> expanded{args[0], args[1]};
  expanded.insert(expanded.end(), injected.begin(), injected.end());
  expanded.insert(expanded.end(), args.begin() + 2, args.end());
  return expanded;
}

// ---- subcommands ----------------------------------------------------------

struct InvariantsArgs {
  std::string type;
  int rank = 0;
  std::string eps;
  std::string m;
  std::string lambda;
  long long pic_order = 0;
};

int run_invariants(const InvariantsArgs& a, const Common& common, std::ostream& out) {
  const RootSystemData rs = build_root_system(parse_cartan_type(a.type), a.rank);
  const std::size_t n = rs.kappa.size();
  std::vector<Rational> eps(n, Rational(0));
  if (!a.eps.empty()) eps = parse_rationals(a.eps);
  if (!a.m.empty()) {
    eps.clear();
    for (auto m : parse_multiplicities(a.m)) eps.push_back(epsilon_of(m));
  }
  if (eps.size() != n) throw std::invalid_argument("need " + std::to_string(n) + " boundary weights");
  std::vector<Rational> lambda;
  if (a.lambda.empty()) {
    for (std::size_t i = 0; i < n; ++i) lambda.push_back(Rational(rs.kappa[i] + 1) - eps[i]);
  } else {
    lambda = parse_rationals(a.lambda);
  }
  const OrbifoldConfig cfg = OrbifoldConfig::from_epsilon(eps, lambda);
  const InvariantReport report = a_b_invariants(rs, cfg);

  long long pic = a.pic_order;
  if (pic == 0 && rs.cartan_type == CartanType::A) pic = pic_order_pgl(rs.rank + 1);

  if (common.format == "csv") {
    std::string csv = "root,kappa,anticanonical,epsilon,lambda,ratio,maximizer\n";
    for (std::size_t i = 0; i < n; ++i) {
      const Rational ratio = (Rational(report.anticanonical[i]) - eps[i]) / lambda[i];
      const bool is_max = ratio == report.a;
      csv += std::to_string(i + 1) + "," + std::to_string(rs.kappa[i]) + "," + std::to_string(report.anticanonical[i]) +
             "," + to_string(eps[i]) + "," + to_string(lambda[i]) + "," + to_string(ratio) + "," +
             (is_max ? "1" : "0") + "\n";
    }
    emit(common, csv, out);
    return 0;
  }
  nlohmann::json j = to_json(rs, cfg, report);
  if (cfg.is_klt() && pic > 0) {
    j["pic_order"] = pic;
    j["alpha"] = to_string(effective_cone_constant(rs, cfg, report, pic));
  }
  emit(common, dump(j), out);
  return 0;
}

struct SquarefulArgs {
  std::string bounds;
  std::string dump_path;
};

int run_count_squareful(const SquarefulArgs& a, const Common& common, std::ostream& out) {
  const auto bounds = parse_ints(a.bounds);
  std::vector<std::pair<i64, u64>> rows;
  std::vector<double> times;
  for (i64 b : bounds) {
    const auto start = Clock::now();
    rows.emplace_back(b, count_campana_triples(b, common.threads));
    times.push_back(elapsed_ms(start, common.timing));
  }
  if (!a.dump_path.empty()) {
    std::ofstream file(a.dump_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open dump file " + a.dump_path);
    file << "z0,z1,z2\n";
    for_each_campana_triple(*std::max_element(bounds.begin(), bounds.end()), [&](const CampanaTriple& t) {
      file << t.z0 << ',' << t.z1 << ',' << t.z2 << '\n';
    });
  }
  if (common.format == "csv") {
    std::string csv = "B,count,elapsed_ms\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      csv += std::to_string(rows[i].first) + "," + std::to_string(rows[i].second) + "," + fmt_double(times[i]) + "\n";
    }
    emit(common, csv, out);
    return 0;
  }
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    j["rows"].push_back({{"B", rows[i].first}, {"count", rows[i].second}, {"elapsed_ms", times[i]}});
  }
  j["expected_exponent"] = "1/2";
  if (rows.size() >= 4) {
    std::vector<std::pair<double, double>> samples;
    for (const auto& [b, c] : rows) samples.emplace_back(static_cast<double>(b), static_cast<double>(c));
    const GrowthFit fit = fit_growth(samples);
    j["fit"] = {{"a_hat", fit.exponent}, {"c_hat", fit.constant()}};
  }
  emit(common, dump(j), out);
  return 0;
}

struct ConstantArgs {
  i64 d_max = 0;
  i64 p_max = 0;
};

int run_predict_constant(const ConstantArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
  err << "note: the reported constant omits the 2-adic and archimedean local factors\n";
  const BrauerSumReport report = brauer_sum(a.d_max, a.p_max, common.threads);
  if (common.format == "csv") {
    std::string csv = "d0,d1,d2,value,tail_bound\n";
    for (const auto& c : report.per_class) {
      csv += std::to_string(c.d.d0) + "," + std::to_string(c.d.d1) + "," + std::to_string(c.d.d2) + "," +
             fmt_double(c.product.value) + "," + fmt_double(c.product.tail_bound) + "\n";
    }
    emit(common, csv, out);
    return 0;
  }
  emit(common, dump(to_json(report)), out);
  return 0;
}

struct PglArgs {
  int n = 0;
  i64 bound = 0;
  std::string bounds;
  std::string m;
};

int run_count_pgl(const PglArgs& a, const Common& common, std::ostream& out) {
  const auto m = parse_multiplicities(a.m);
  if (!a.bounds.empty()) {
    const auto bounds = parse_ints(a.bounds);
    const auto start = Clock::now();
    const GrowthReport report = growth_report(a.n, m, bounds, common.threads);
    const double ms = elapsed_ms(start, common.timing);
    if (common.format == "csv") {
      std::string csv = "n,B,m,count,elapsed_ms\n";
      for (const auto& [b, c] : report.rows) {
        csv += std::to_string(a.n) + "," + std::to_string(b) + ",\"" + to_string(report.m) + "\"," +
               std::to_string(c) + "," + fmt_double(ms) + "\n";
      }
      emit(common, csv, out);
      return 0;
    }
    nlohmann::json j = to_json(report);
    j["elapsed_ms"] = ms;
    emit(common, dump(j), out);
    return 0;
  }
  if (a.bound < 1) throw std::invalid_argument("count-pgl needs --B or --bounds");
  const CountRun run = count_pgl_campana(a.n, a.bound, m, common.threads);
  if (common.format == "csv") {
    emit(common,
         "n,B,m,count,elapsed_ms\n" + std::to_string(run.n) + "," + std::to_string(run.bound) + ",\"" +
             to_string(run.m) + "\"," + std::to_string(run.count) + "," +
             fmt_double(common.timing ? run.elapsed_ms : 0.0) + "\n",
         out);
    return 0;
  }
  emit(common, dump(to_json(run, common.timing)), out);
  return 0;
}

int run_verify(i64 p_max, const Common& common, std::ostream& out) {
  const auto checks = verify_lemmas(p_max);
  bool all = true;
  for (const auto& c : checks) all = all && c.passed;
  if (common.format == "csv") {
    std::string csv = "name,cases,status\n";
    for (const auto& c : checks) {
      csv += c.name + "," + std::to_string(c.cases) + "," +
             (!c.passed ? "MISMATCH" : (c.exact ? "exact match" : "within tail bound")) + "\n";
    }
    emit(common, csv, out);
  } else {
    emit(common, dump(to_json(checks)), out);
  }
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Campana points: invariants, local densities and counts"};
  app.name(raw_args.empty() ? "campana" : raw_args.front());
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  Common common;
  common.threads = default_threads();

  InvariantsArgs inv;
  auto* inv_cmd = app.add_subcommand("invariants", "kappa, -K_X, a, b and the effective-cone constant");
  inv_cmd->add_option("--type", inv.type, "Cartan type A..G")->required();
  inv_cmd->add_option("--rank", inv.rank, "Rank")->required();
  auto* eps_opt = inv_cmd->add_option("--eps", inv.eps, "Comma-separated boundary weights, e.g. 1/2,1/2");
  inv_cmd->add_option("--m", inv.m, "Comma-separated multiplicities (inf allowed)")->excludes(eps_opt);
  inv_cmd->add_option("--lambda", inv.lambda, "Comma-separated coefficients of L (default: log-anticanonical)");
  inv_cmd->add_option("--pic-order", inv.pic_order, "|Pic(G)| (default n for type A_{n-1})");
  add_common(*inv_cmd, common);

  SquarefulArgs sq;
  auto* sq_cmd = app.add_subcommand("count-squareful", "N(B) for z0 + z1 + z2 = 0 with squareful coordinates");
  sq_cmd->add_option("--bounds,--B", sq.bounds, "Comma-separated height bounds")->required();
  sq_cmd->add_option("--dump", sq.dump_path, "Also write every triple up to the largest bound as CSV");
  add_common(*sq_cmd, common);

  ConstantArgs cst;
  auto* cst_cmd = app.add_subcommand("predict-constant", "Truncated Brauer sum of Euler products");
  cst_cmd->add_option("--d-max", cst.d_max, "Largest |d0 d1 d2|")->required()->check(CLI::PositiveNumber);
  cst_cmd->add_option("--p-max", cst.p_max, "Euler products run over odd p <= p-max")->required()->check(CLI::Range(3, 100000000));
  add_common(*cst_cmd, common);

  PglArgs pgl;
  auto* pgl_cmd = app.add_subcommand("count-pgl", "Campana points of PGL_n(Q), n in {2,3}");
  pgl_cmd->add_option("--n", pgl.n, "Matrix size")->required();
  auto* b_opt = pgl_cmd->add_option("--B", pgl.bound, "Height bound");
  pgl_cmd->add_option("--bounds", pgl.bounds, "Comma-separated bounds for a growth report (>= 4)")->excludes(b_opt);
  pgl_cmd->add_option("--m", pgl.m, "Comma-separated multiplicities, one per simple root")->required();
  add_common(*pgl_cmd, common);

  i64 verify_p_max = 100;
  auto* ver_cmd = app.add_subcommand("verify-lemmas", "Compare every closed form with its brute-force oracle");
  ver_cmd->add_option("--p-max", verify_p_max, "Largest prime for the Legendre-sum check")->check(CLI::Range(3, 1000000));
  add_common(*ver_cmd, common);

  std::vector<std::string> args;
  try {
    args = expand_config(raw_args);
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failing = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << failing->help();
    return 2;
  }

  try {
    if (inv_cmd->parsed()) return run_invariants(inv, common, out);
    if (sq_cmd->parsed()) return run_count_squareful(sq, common, out);
    if (cst_cmd->parsed()) return run_predict_constant(cst, common, out, err);
    if (pgl_cmd->parsed()) return run_count_pgl(pgl, common, out);
    if (ver_cmd->parsed()) return run_verify(verify_p_max, common, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace campana::cli
