#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fracdiff/evolution.hpp"
#include "fracdiff/problems.hpp"

namespace fracdiff {

struct ErrorPair {
  double l2 = 0.0;
  double linf = 0.0;
};

struct ReportRow {
  int m = 0;
  double h = 0.0;
  std::optional<double> l2_error;
  std::optional<double> l2_rate;
  std::optional<double> linf_error;
  std::optional<double> linf_rate;
  std::string failure;  // solver error message when the row has no errors
};

struct ConvergenceReport {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<ReportRow> rows;
};

struct StudyConfig {
  std::string problem;
  ProblemParams params;
  QuasiCompactOrder order = QuasiCompactOrder::fourth;
  AdiVariant variant = AdiVariant::douglas;
  std::vector<int> m_list;
  TauRule tau_rule;
  SolverOptions options;
};

/// Interior errors of one solve at mesh size m.
ErrorPair solve_errors(const StudyConfig& study, int m);

/// Generic driver: calls `errors(m)` for each m. A throwing row keeps empty fields and the
/// study continues. m_list must double from one entry to the next.
ConvergenceReport run_convergence(const std::vector<int>& m_list,
                                  const std::function<ErrorPair(int)>& errors,
                                  std::vector<std::pair<std::string, std::string>> metadata = {});

ConvergenceReport run_convergence(const StudyConfig& study);

/// log2(previous / current); empty unless both are finite and positive.
std::optional<double> observed_rate(std::optional<double> previous, std::optional<double> current);

/// Header plus one line per row, %.5e, empty fields for undefined values.
void emit_csv(const ConvergenceReport& report, std::ostream& out);

/// Several reports, each preceded by "# key=value" metadata lines.
void emit_csv_blocks(const std::vector<ConvergenceReport>& reports, std::ostream& out);

/// Accepted names: 1, 2, 3, tempered5, t4, t5, t6.
std::vector<std::string> table_names();

/// Studies reproducing one table's grid sequence, one per parameter block. Table t6 stops at
/// m = 64 unless `extended`.
std::vector<StudyConfig> table_studies(const std::string& table, bool extended = false);

}  // namespace fracdiff
