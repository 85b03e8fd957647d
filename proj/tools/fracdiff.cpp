#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fracdiff/convergence.hpp"
#include "fracdiff/error.hpp"
#include "fracdiff/evolution.hpp"
#include "fracdiff/linalg.hpp"
#include "fracdiff/problems.hpp"
#include "fracdiff/spectral.hpp"
#include "fracdiff/steady.hpp"

namespace {

using namespace fracdiff;

constexpr int kExitSolver = 1;
constexpr int kExitUsage = 2;

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw SolverError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw SolverError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

const ProblemSpec& problem_of_kind(const std::string& name, ProblemKind kind, const char* cmd) {
  const ProblemSpec& spec = find_problem(name);
  if (spec.kind != kind) throw InvalidArgument("problem '" + name + "' cannot be run by " + cmd);
  return spec;
}

/// Reads flat key=value lines and turns them into "--key value" arguments.
std::vector<std::string> config_arguments(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file '" + path + "'");
  std::vector<std::string> out;
  for (const auto& item : CLI::ConfigTOML().from_config(in)) {
    const std::string flag = "--" + item.fullname();
    if (item.inputs.empty()) {
      out.push_back(flag);
      continue;
    }
    for (const auto& v : item.inputs) {
      if (v == "true" && item.inputs.size() == 1) {
        out.push_back(flag);
      } else if (v != "false") {
        out.push_back(flag);
        out.push_back(v);
      }
    }
  }
  return out;
}

/// Moves "--config FILE" out of argv and splices the file's settings in right after the
/// subcommand, so that flags given on the command line win.
std::vector<std::string> expand_config(const std::vector<std::string>& args,
                                       const std::vector<std::string>& subcommands) {
  std::vector<std::string> rest;
  std::optional<std::string> config;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw InvalidArgument("--config needs a file name");
      config = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!config) return rest;
  const auto extra = config_arguments(*config);
  auto it = rest.begin();
  while (it != rest.end() && std::find(subcommands.begin(), subcommands.end(), *it) == subcommands.end()) ++it;
  if (it == rest.end()) throw InvalidArgument("--config needs a subcommand");
  rest.insert(it + 1, extra.begin(), extra.end());
  return rest;
}

struct CommonSolve {
  std::string problem;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> lambda;
  int m = 0;
  std::string out;
  std::string tau_rule = "h2";
  std::optional<int> nsteps;
  std::string exec = "parallel";
  std::string backend = "dense";
  std::string variant = "douglas";
  std::optional<int> order;
};

ProblemParams resolve_params(const ProblemSpec& spec, const CommonSolve& c) {
  ProblemParams p = spec.defaults;
  if (c.alpha) p.alpha = *c.alpha;
  if (c.beta) p.beta = *c.beta;
  if (c.lambda) {
    if (!spec.uses_lambda && *c.lambda != 0.0) {
      throw InvalidArgument("problem '" + spec.name + "' is not tempered");
    }
    p.lambda = *c.lambda;
  }
  return p;
}

TauRule resolve_tau(const CommonSolve& c) {
  if (c.nsteps) return TauRule{TauRuleKind::fixed_steps, *c.nsteps};
  return TauRule{};
}

SolverOptions resolve_options(const CommonSolve& c) {
  SolverOptions o;
  o.exec = c.exec == "serial" ? Execution::serial : Execution::parallel;
  o.backend = c.backend == "fft" ? MatvecBackend::fft : MatvecBackend::dense;
  return o;
}

void report_errors(const NormPair& n) {
  std::cerr << "l2_error=" << num(n.l2) << " linf_error=" << num(n.linf) << '\n';
}

int run_steady(const CommonSolve& c) {
  const ProblemSpec& spec = problem_of_kind(c.problem, ProblemKind::steady1d, "steady");
  const SteadyProblem p = spec.make_steady(resolve_params(spec, c), c.m);
  const auto order = c.order ? quasi_compact_order(*c.order) : spec.default_order;
  const GridFunction1D u = solve_steady(p, order);
  const GridFunction1D ex = GridFunction1D::sample(p.grid, p.exact);
  Output out(c.out);
  out.stream() << "x,u,exact,error\n";
  for (int j = 0; j <= p.grid.m(); ++j) {
    out.stream() << num(p.grid.x(j)) << ',' << num(u[j]) << ',' << num(ex[j]) << ','
                 << num(u[j] - ex[j]) << '\n';
  }
  out.finish();
  report_errors(norms(u, ex));
  return 0;
}

int run_evolve1d(const CommonSolve& c) {
  const ProblemSpec& spec = problem_of_kind(c.problem, ProblemKind::evolve1d, "evolve1d");
  const Evolution1D p = spec.make_evolution_1d(resolve_params(spec, c), c.m, resolve_tau(c));
  for (const auto& w : compatibility_warnings(p)) std::cerr << "warning: " << w << '\n';
  const GridFunction1D u = cn_solve_1d(p, resolve_options(c));
  const GridFunction1D ex =
      GridFunction1D::sample(p.grid, [&](double x) { return p.exact(x, p.t_end); });
  Output out(c.out);
  out.stream() << "x,u,exact,error\n";
  for (int j = 0; j <= p.grid.m(); ++j) {
    out.stream() << num(p.grid.x(j)) << ',' << num(u[j]) << ',' << num(ex[j]) << ','
                 << num(u[j] - ex[j]) << '\n';
  }
  out.finish();
  std::cerr << "t=" << p.t_end << " steps=" << p.n_steps << ' ';
  report_errors(norms(u, ex));
  return 0;
}

int run_evolve2d(const CommonSolve& c) {
  const ProblemSpec& spec = problem_of_kind(c.problem, ProblemKind::evolve2d, "evolve2d");
  const Evolution2D p = spec.make_evolution_2d(resolve_params(spec, c), c.m, resolve_tau(c));
  const AdiVariant v = c.variant == "dyakonov" ? AdiVariant::dyakonov : AdiVariant::douglas;
  const GridFunction2D u = adi_solve_2d(p, v, resolve_options(c));
  const GridFunction2D ex =
      GridFunction2D::sample(p.grid, [&](double x, double y) { return p.exact(x, y, p.t_end); });
  Output out(c.out);
  out.stream() << "x,y,u,exact,error\n";
  for (std::size_t i = 0; i < u.nx(); ++i) {
    for (std::size_t s = 0; s < u.ny(); ++s) {
      out.stream() << num(p.grid.x.x(static_cast<int>(i))) << ','
                   << num(p.grid.y.x(static_cast<int>(s))) << ',' << num(u.at(i, s)) << ','
                   << num(ex.at(i, s)) << ',' << num(u.at(i, s) - ex.at(i, s)) << '\n';
    }
  }
  out.finish();
  std::cerr << "t=" << p.t_end << " steps=" << p.n_steps << ' ';
  report_errors(norms(u, ex));
  return 0;
}

int run_convergence_cmd(const std::string& table, const std::vector<double>& alphas,
                        bool extended, const std::string& exec, const std::string& path) {
  std::vector<StudyConfig> studies;
  for (auto& s : table_studies(table, extended)) {
    bool keep = alphas.empty();
    for (double a : alphas) keep = keep || std::abs(a - s.params.alpha) < 1e-12;
    if (keep) {
      s.options.exec = exec == "serial" ? Execution::serial : Execution::parallel;
      studies.push_back(s);
    }
  }
  if (studies.empty()) throw InvalidArgument("no study of table " + table + " matches --alpha");
  std::vector<ConvergenceReport> reports;
  bool failed = false;
  for (const auto& s : studies) {
    reports.push_back(run_convergence(s));
    for (const auto& r : reports.back().rows) {
      if (!r.failure.empty()) {
        failed = true;
        std::cerr << "m=" << r.m << ": " << r.failure << '\n';
      }
    }
  }
  Output out(path);
  emit_csv_blocks(reports, out.stream());
  out.finish();
  return failed ? kExitSolver : 0;
}

int run_scan(std::size_t alpha_points, std::size_t sigma_points, const std::string& path) {
  const StabilityReport r = default_stability_scan(alpha_points, sigma_points);
  Output out(path);
  out.stream() << "alpha,sigma,f,max_amp\n";
  for (const auto& s : r.samples) {
    out.stream() << num(s.alpha) << ',' << num(s.sigma) << ',' << num(s.f_value) << ','
                 << num(s.amp_modulus) << '\n';
  }
  out.finish();
  std::cerr << "samples=" << r.samples.size() << " max_f=" << num(r.samples.empty() ? 0.0 : r.max_f)
            << " max_amp=" << num(r.max_amp) << " f_violations=" << r.f_violations
            << " amp_violations=" << r.amp_violations << '\n';
  return r.passed() ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"Quasi-compact solvers for space-fractional diffusion equations"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.add_option("--config", "flat key=value file; command-line flags override it");

  CommonSolve c;
  std::vector<std::string> problem_names;
  for (const auto& p : problem_registry()) problem_names.push_back(p.name);
  const auto add_problem = [&](CLI::App* sub) {
    sub->add_option("--problem", c.problem, "registered problem")->required()->check(
        CLI::IsMember(problem_names));
    sub->add_option("--m", c.m, "number of mesh intervals per direction")->required()->check(
        CLI::Range(4, 1 << 20));
    sub->add_option("--out", c.out, "output file (default stdout)");
  };
  const auto add_time = [&](CLI::App* sub) {
    auto* rule = sub->add_option("--tau-rule", c.tau_rule, "time step rule")->check(
        CLI::IsMember({"h2"}));
    sub->add_option("--nsteps", c.nsteps, "fixed number of time steps")
        ->check(CLI::PositiveNumber)
        ->excludes(rule);
    sub->add_option("--exec", c.exec, "kernel execution")->check(
        CLI::IsMember({"serial", "parallel"}));
  };

  auto* steady = app.add_subcommand("steady", "solve a steady problem on one mesh");
  add_problem(steady);
  steady->add_option("--alpha", c.alpha, "fractional order");
  steady->add_option("--lambda", c.lambda, "tempering parameter");
  steady->add_option("--order", c.order, "4 or 5")->check(CLI::IsMember({4, 5}));

  auto* evolve1d = app.add_subcommand("evolve1d", "Crank-Nicolson in one space dimension");
  add_problem(evolve1d);
  add_time(evolve1d);
  evolve1d->add_option("--alpha", c.alpha, "fractional order");
  evolve1d->add_option("--lambda", c.lambda, "tempering parameter");
  evolve1d->add_option("--backend", c.backend, "Toeplitz matvec")->check(
      CLI::IsMember({"dense", "fft"}));

  auto* evolve2d = app.add_subcommand("evolve2d", "ADI in two space dimensions");
  add_problem(evolve2d);
  add_time(evolve2d);
  evolve2d->add_option("--alpha", c.alpha, "order in x");
  evolve2d->add_option("--beta", c.beta, "order in y");
  evolve2d->add_option("--variant", c.variant, "ADI splitting")->check(
      CLI::IsMember({"douglas", "dyakonov"}));

  std::string table;
  std::vector<double> table_alphas;
  bool extended = false;
  std::string conv_out, conv_exec = "parallel";
  auto* conv = app.add_subcommand("convergence", "run the convergence studies of one error table");
  conv->add_option("--table", table, "table id")->required()->check(CLI::IsMember(table_names()));
  conv->add_option("--alpha", table_alphas, "restrict to these alpha values")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  conv->add_flag("--extended", extended, "include m = 128 for table t6");
  conv->add_option("--exec", conv_exec, "kernel execution")->check(
      CLI::IsMember({"serial", "parallel"}));
  conv->add_option("--out", conv_out, "output file (default stdout)");

  std::size_t alpha_points = 101, sigma_points = 721;
  std::string scan_out;
  auto* scan = app.add_subcommand("stability-scan", "scan the symbol and amplification factor");
  scan->add_option("--alpha-points", alpha_points)->check(CLI::Range(std::size_t{0}, std::size_t{100000}));
  scan->add_option("--sigma-points", sigma_points)->check(CLI::Range(std::size_t{0}, std::size_t{1000000}));
  scan->add_option("--out", scan_out, "output file (default stdout)");

  std::vector<std::string> args(argv + 1, argv + argc);
  args = expand_config(args, {"steady", "evolve1d", "evolve2d", "convergence", "stability-scan"});
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (steady->parsed()) return run_steady(c);
  if (evolve1d->parsed()) return run_evolve1d(c);
  if (evolve2d->parsed()) return run_evolve2d(c);
  if (conv->parsed()) return run_convergence_cmd(table, table_alphas, extended, conv_exec, conv_out);
  return run_scan(alpha_points, sigma_points, scan_out);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  }
}
