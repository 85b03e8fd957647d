#include "fracdiff/convergence.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "fracdiff/error.hpp"
#include "fracdiff/linalg.hpp"

namespace fracdiff {

namespace {

std::string format_value(std::optional<double> v) {
  if (!v) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", *v);
  return buf;
}

std::string format_param(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

const char* variant_name(AdiVariant v) { return v == AdiVariant::douglas ? "douglas" : "dyakonov"; }

std::vector<int> doubling(int from, int to) {
  std::vector<int> out;
  for (int m = from; m <= to; m *= 2) out.push_back(m);
  return out;
}

std::vector<std::pair<std::string, std::string>> study_metadata(const StudyConfig& s) {
  const ProblemSpec& spec = find_problem(s.problem);
  std::vector<std::pair<std::string, std::string>> md{{"problem", s.problem},
                                                      {"alpha", format_param(s.params.alpha)}};
  if (spec.uses_beta) md.emplace_back("beta", format_param(s.params.beta));
  if (spec.uses_lambda) md.emplace_back("lambda", format_param(s.params.lambda));
  switch (spec.kind) {
    case ProblemKind::steady1d:
      md.emplace_back("scheme", s.order == QuasiCompactOrder::fifth ? "steady5" : "steady4");
      break;
    case ProblemKind::evolve1d:
      md.emplace_back("scheme", "crank_nicolson");
      break;
    case ProblemKind::evolve2d:
      md.emplace_back("scheme", std::string("adi_") + variant_name(s.variant));
      break;
  }
  if (spec.kind != ProblemKind::steady1d) {
    md.emplace_back("tau_rule", s.tau_rule.kind == TauRuleKind::h_squared
                                    ? std::string("h2")
                                    : "nsteps=" + std::to_string(s.tau_rule.n_steps));
  }
  return md;
}

}  // namespace

ErrorPair solve_errors(const StudyConfig& study, int m) {
  const ProblemSpec& spec = find_problem(study.problem);
  switch (spec.kind) {
    case ProblemKind::steady1d: {
      const SteadyProblem p = spec.make_steady(study.params, m);
      const GridFunction1D u = solve_steady(p, study.order);
      const auto n = norms(u, GridFunction1D::sample(p.grid, p.exact));
      return {n.l2, n.linf};
    }
    case ProblemKind::evolve1d: {
      const Evolution1D p = spec.make_evolution_1d(study.params, m, study.tau_rule);
      const GridFunction1D u = cn_solve_1d(p, study.options);
      const double t = p.t_end;
      const auto n = norms(u, GridFunction1D::sample(p.grid, [&](double x) { return p.exact(x, t); }));
      return {n.l2, n.linf};
    }
    case ProblemKind::evolve2d: {
      const Evolution2D p = spec.make_evolution_2d(study.params, m, study.tau_rule);
      const GridFunction2D u = adi_solve_2d(p, study.variant, study.options);
      const double t = p.t_end;
      const auto n = norms(u, GridFunction2D::sample(
                                  p.grid, [&](double x, double y) { return p.exact(x, y, t); }));
      return {n.l2, n.linf};
    }
  }
  throw InvalidArgument("unhandled problem kind");
}

std::optional<double> observed_rate(std::optional<double> previous, std::optional<double> current) {
  if (!previous || !current) return std::nullopt;
  const double a = *previous, b = *current;
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) return std::nullopt;
  return std::log2(a / b);
}

ConvergenceReport run_convergence(const std::vector<int>& m_list,
                                  const std::function<ErrorPair(int)>& errors,
                                  std::vector<std::pair<std::string, std::string>> metadata) {
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    if (m_list[i] < 4) throw InvalidArgument("mesh sizes must be at least 4");
    if (i > 0 && m_list[i] != 2 * m_list[i - 1]) {
      throw InvalidArgument("mesh sizes must double from one entry to the next");
    }
  }
  ConvergenceReport report;
  report.metadata = std::move(metadata);
  for (const int m : m_list) {
    ReportRow row;
    row.m = m;
    row.h = 1.0 / m;
    try {
      const ErrorPair e = errors(m);
      row.l2_error = e.l2;
      row.linf_error = e.linf;
    } catch (const std::exception& ex) {
      row.failure = ex.what();
    }
    if (!report.rows.empty()) {
      const ReportRow& prev = report.rows.back();
      row.l2_rate = observed_rate(prev.l2_error, row.l2_error);
      row.linf_rate = observed_rate(prev.linf_error, row.linf_error);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

ConvergenceReport run_convergence(const StudyConfig& study) {
  find_problem(study.problem);
  return run_convergence(
      study.m_list, [&](int m) { return solve_errors(study, m); }, study_metadata(study));
}

void emit_csv(const ConvergenceReport& report, std::ostream& out) {
  out << "m,h,l2_error,l2_rate,linf_error,linf_rate\n";
  for (const auto& r : report.rows) {
    out << r.m << ',' << format_value(r.h) << ',' << format_value(r.l2_error) << ','
        << format_value(r.l2_rate) << ',' << format_value(r.linf_error) << ','
        << format_value(r.linf_rate) << '\n';
  }
  if (!out) throw SolverError("failed to write CSV output");
}

void emit_csv_blocks(const std::vector<ConvergenceReport>& reports, std::ostream& out) {
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out << '\n';
    for (const auto& [k, v] : reports[i].metadata) out << "# " << k << '=' << v << '\n';
    emit_csv(reports[i], out);
  }
}

std::vector<std::string> table_names() { return {"1", "2", "3", "tempered5", "t4", "t5", "t6"}; }

std::vector<StudyConfig> table_studies(const std::string& table, bool extended) {
  std::vector<StudyConfig> out;
  const auto ms = doubling(8, 128);
  auto steady = [&](const char* problem, QuasiCompactOrder order, std::vector<double> alphas,
                    double lambda) {
    for (double a : alphas) {
      StudyConfig s;
      s.problem = problem;
      s.params.alpha = a;
      s.params.lambda = lambda;
      s.order = order;
      s.m_list = ms;
      out.push_back(s);
    }
  };
  if (table == "1") {
    steady("example2_1", QuasiCompactOrder::fourth, {1.1, 1.5, 1.9}, 0.0);
  } else if (table == "2") {
    steady("example2_4", QuasiCompactOrder::fifth, {1.1, 1.5}, 0.0);
  } else if (table == "3") {
    steady("example5_1", QuasiCompactOrder::fourth, {1.1, 1.9}, 1.5);
  } else if (table == "tempered5") {
    steady("example5_4", QuasiCompactOrder::fifth, {1.1, 1.5}, 1.5);
  } else if (table == "t4") {
    for (double lambda : {0.0, 1.5}) {
      for (double a : {1.1, 1.5, 1.9}) {
        StudyConfig s;
        s.problem = "example6_1";
        s.params.alpha = a;
        s.params.lambda = lambda;
        s.m_list = ms;
        out.push_back(s);
      }
    }
  } else if (table == "t5") {
    for (double a : {1.1, 1.5, 1.9}) {
      StudyConfig s;
      s.problem = "example6_2";
      s.params.alpha = a;
      s.m_list = ms;
      out.push_back(s);
    }
  } else if (table == "t6") {
    const std::pair<double, double> pairs[] = {{1.1, 1.5}, {1.5, 1.9}};
    for (const AdiVariant v : {AdiVariant::dyakonov, AdiVariant::douglas}) {
      for (const auto& [a, b] : pairs) {
        StudyConfig s;
        s.problem = "example6_3";
        s.params.alpha = a;
        s.params.beta = b;
        s.variant = v;
        s.m_list = doubling(8, extended ? 128 : 64);
        out.push_back(s);
      }
    }
  } else {
    throw InvalidArgument("unknown table '" + table + "'");
  }
  return out;
}

}  // namespace fracdiff
