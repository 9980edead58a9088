// gfrac: command-line front end for Hermite expansions, semigroups, fractional
// operators, Triebel-Lizorkin norms and the verification suites.
//
// Exit status: 0 success, 2 usage, 3 data, 4 verification failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gfrac/config.hpp"
#include "gfrac/expansion_io.hpp"
#include "gfrac/fractional.hpp"
#include "gfrac/function_spaces.hpp"
#include "gfrac/quadrature.hpp"
#include "gfrac/semigroups.hpp"
#include "gfrac/verification.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 2, kData = 3, kVerifyFailed = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grid flags given on the command line; each overrides the config file.
struct GridFlags {
  std::optional<std::string> config_path;
  std::optional<int> quad_order;
  std::optional<int> time_nodes;
  std::optional<double> t_min;
  std::optional<double> t_max;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
};

gfrac::CliConfig resolve_config(const GridFlags& flags) {
  gfrac::CliConfig cfg = flags.config_path ? gfrac::CliConfig{} : gfrac::load_cli_config();
  if (flags.config_path) cfg.merge_file(*flags.config_path);
  if (flags.quad_order) cfg.quad_order = *flags.quad_order;
  if (flags.time_nodes) cfg.time_nodes = *flags.time_nodes;
  if (flags.t_min) cfg.t_min = *flags.t_min;
  if (flags.t_max) cfg.t_max = *flags.t_max;
  if (flags.tol) cfg.tolerance = *flags.tol;
  if (flags.seed) cfg.seed = *flags.seed;
  cfg.validate();
  return cfg;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw gfrac::ParseError("cannot open " + path + " for writing");
  out << text;
}

gfrac::HermiteExpansion read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return gfrac::expansion_from_json(buffer.str());
  }
  return gfrac::read_expansion(path);
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--x: invalid coordinate '" + item + "'");
    }
  }
  return values;
}

struct ApplyArgs {
  std::string op, path = "spectral", in, out = "-";
  double beta = 0.0;
  std::optional<int> k;
};

int cmd_apply(const ApplyArgs& a, const gfrac::CliConfig& cfg) {
  const auto kind = gfrac::parse_frac_kind(a.op);
  if (!kind) throw UsageError("unknown operator '" + a.op + "'");
  const auto path = gfrac::parse_path(a.path);
  if (!path) throw UsageError("unknown path '" + a.path + "' (spectral | integral)");
  const auto spec = gfrac::FracOperatorSpec::make(*kind, a.beta, *path, a.k);
  const auto f = read_input(a.in);
  write_text(a.out, gfrac::to_json(gfrac::apply(spec, f, cfg.time_grid())));
  return kOk;
}

struct NormArgs {
  double alpha = 0.0, p = 2.0, q = 2.0;
  std::optional<int> k;
  std::string in;
  bool seminorm = false;
};

int cmd_norm(const NormArgs& a, const gfrac::CliConfig& cfg) {
  const auto params = gfrac::TLNormParams::make(a.alpha, a.p, a.q, a.k);
  const auto f = read_input(a.in);
  const gfrac::GaussHermiteGrid xg(f.dim(), cfg.quad_order);
  const double value = a.seminorm ? gfrac::tl_seminorm(f, params, cfg.time_grid(), xg)
                                  : gfrac::tl_norm(f, params, cfg.time_grid(), xg);
  std::cout << gfrac::format_real(value) << "\n";
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::string> theorem;
  std::optional<double> alpha, beta;
  std::optional<std::string> report;
  bool no_timing = false;
};

int cmd_verify(const VerifyArgs& a, gfrac::CliConfig cfg) {
  const auto vcfg = cfg.verification();
  std::optional<gfrac::VerificationReport> report;
  if (a.theorem) {
    if (a.suite != "boundedness") throw UsageError("--theorem requires --suite boundedness");
    const auto theorem = gfrac::parse_theorem(*a.theorem);
    if (!theorem) throw UsageError("unknown theorem '" + *a.theorem + "' (T2.1 .. T2.6)");
    std::optional<gfrac::BoundednessParams> params;
    if (a.alpha || a.beta) {
      auto p = gfrac::BoundednessParams::defaults(*theorem);
      if (a.alpha) p.alpha = *a.alpha;
      if (a.beta) p.beta = *a.beta;
      params = p;
    }
    report = gfrac::suite_boundedness(*theorem, vcfg, params);
  } else {
    if (a.alpha || a.beta) throw UsageError("--alpha/--beta require --theorem");
    report = gfrac::run_suite(a.suite, vcfg);
    if (!report) throw UsageError("unknown suite '" + a.suite + "'");
  }
  const std::string json = gfrac::to_json(*report, !a.no_timing);
  const auto report_path = a.report ? std::optional<std::filesystem::path>(*a.report) : cfg.report_path;
  if (report_path) {
    write_text(report_path->string(), json);
    std::fprintf(stderr, "%s: %d/%d cases passed, max rel err %s\n", report->suite.c_str(), report->summary.passed,
                 report->summary.total, gfrac::format_real(report->summary.max_rel_err).c_str());
  } else {
    std::cout << json;
  }
  return report->all_passed() ? kOk : kVerifyFailed;
}

struct ConstantsArgs {
  double beta = 0.0;
  std::optional<int> k;
};

int cmd_constants(const ConstantsArgs& a, const gfrac::CliConfig& cfg) {
  if (!(a.beta > 0.0)) throw UsageError("--beta must be positive");
  const int k = a.k.value_or(gfrac::default_difference_order(a.beta));
  if (!(k - 1 <= a.beta && a.beta < k)) throw UsageError("need k - 1 <= beta < k for c^k_beta to converge");
  const double c = gfrac::c_beta_k(a.beta, k, cfg.time_grid());
  std::cout << "beta " << gfrac::format_real(a.beta) << "\n"
            << "k " << k << "\n"
            << "c_beta_k " << gfrac::format_real(c) << "\n"
            << "C_beta_k " << gfrac::format_real(gfrac::big_C_beta_k(a.beta, k)) << "\n";
  if (a.beta != std::floor(a.beta))
    std::cout << "c_beta_k_closed_form " << gfrac::format_real(gfrac::c_beta_k_closed_form(a.beta, k)) << "\n";
  if (k == 1) std::cout << "minus_gamma_1_minus_beta_over_beta " << gfrac::format_real(-std::tgamma(1.0 - a.beta) / a.beta) << "\n";
  return kOk;
}

struct EvalArgs {
  std::string in, x;
  double t = 0.0;
};

int cmd_eval(const EvalArgs& a) {
  if (a.t < 0.0) throw UsageError("--t must be nonnegative");
  const auto f = read_input(a.in);
  const auto coords = parse_point(a.x);
  if (coords.size() != f.dim()) throw UsageError("--x must have " + std::to_string(f.dim()) + " coordinates");
  const gfrac::Point x = Eigen::Map<const Eigen::VectorXd>(coords.data(), static_cast<Eigen::Index>(coords.size()));
  const auto g = a.t > 0.0 ? gfrac::poisson_apply_spectral(f, a.t) : f;
  std::cout << gfrac::format_real(gfrac::expansion_eval(g, x)) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian fractional calculus toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GridFlags flags;
  app.add_option("--config", flags.config_path, "key=value config file (default: $GFRAC_CONFIG)");
  app.add_option("--quad-order", flags.quad_order, "Gauss-Hermite nodes per axis");
  app.add_option("--time-nodes", flags.time_nodes, "time-grid node count");
  app.add_option("--t-min", flags.t_min, "time-grid lower end");
  app.add_option("--t-max", flags.t_max, "time-grid upper end");
  app.add_option("--tol", flags.tol, "quadrature-agreement tolerance");
  app.add_option("--seed", flags.seed, "seed of the random families");

  ApplyArgs apply_args;
  auto* apply = app.add_subcommand("apply", "apply a fractional operator to an expansion file");
  apply->add_option("--op", apply_args.op, "riesz-potential | bessel-potential | riesz-derivative | bessel-derivative")
      ->required();
  apply->add_option("--beta", apply_args.beta, "order beta > 0")->required();
  apply->add_option("--path", apply_args.path, "spectral | integral");
  apply->add_option("--k", apply_args.k, "difference order for derivatives (k > beta)");
  apply->add_option("--in", apply_args.in, "input expansion file ('-' for stdin)")->required();
  apply->add_option("--out", apply_args.out, "output file ('-' for stdout)");

  NormArgs norm_args;
  auto* norm = app.add_subcommand("norm", "Triebel-Lizorkin norm of an expansion file");
  norm->add_option("--alpha", norm_args.alpha, "smoothness alpha >= 0")->required();
  norm->add_option("--p", norm_args.p, "outer exponent p >= 1");
  norm->add_option("--q", norm_args.q, "inner exponent q >= 1");
  norm->add_option("--k", norm_args.k, "derivative order k > alpha");
  norm->add_option("--in", norm_args.in, "input expansion file ('-' for stdin)")->required();
  norm->add_flag("--seminorm", norm_args.seminorm, "print only the seminorm part");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", verify_args.suite,
                     "eigen | dual-path | inversion | boundedness | inclusion | lemmas | decay | all");
  verify->add_option("--theorem", verify_args.theorem, "T2.1 .. T2.6 (with --suite boundedness)");
  verify->add_option("--alpha", verify_args.alpha, "source smoothness for --theorem");
  verify->add_option("--beta", verify_args.beta, "operator order for --theorem");
  verify->add_option("--report", verify_args.report, "write the JSON report here instead of stdout");
  verify->add_flag("--no-timing", verify_args.no_timing, "omit wall time so reports are byte-identical");

  ConstantsArgs constants_args;
  auto* constants = app.add_subcommand("constants", "print c^k_beta and C_{beta,k}");
  constants->add_option("--beta", constants_args.beta, "beta > 0")->required();
  constants->add_option("--k", constants_args.k, "difference order (default: smallest integer > beta)");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate an expansion (or P_t of it) at a point");
  eval->add_option("--in", eval_args.in, "input expansion file ('-' for stdin)")->required();
  eval->add_option("--x", eval_args.x, "comma-separated coordinates")->required();
  eval->add_option("--t", eval_args.t, "Poisson time t >= 0 (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const gfrac::CliConfig cfg = resolve_config(flags);
    if (*apply) return cmd_apply(apply_args, cfg);
    if (*norm) return cmd_norm(norm_args, cfg);
    if (*verify) return cmd_verify(verify_args, cfg);
    if (*constants) return cmd_constants(constants_args, cfg);
    if (*eval) return cmd_eval(eval_args);
  } catch (const UsageError& e) {
    std::cerr << "gfrac: " << e.what() << "\n";
    return kUsage;
  } catch (const gfrac::ConfigError& e) {
    std::cerr << "gfrac: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gfrac: " << e.what() << "\n";
    return kUsage;
  } catch (const gfrac::ParseError& e) {
    std::cerr << "gfrac: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "gfrac: " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}
