#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hrec/recovery.hpp"

namespace hrec {

/// u(x,y) = e^x cos(y): harmonic on the square, the experiment target.
ExactField exp_cos_field();

enum class ExperimentKind { Table, RepresenterConvergence, SingleRecovery };
enum class DataSource { Exact, Interpolant };

struct NoiseSpec {
  double linf = 0.0;        // entries drawn uniformly from [-linf, linf]
  std::uint64_t seed = 0;
};

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Table;
  FunctionalKind functional = FunctionalKind::Gaussian;
  double radius = 0.1;
  std::vector<int> m_list = {4, 9, 16, 25, 36};
  std::vector<int> n_list = {4, 5, 6, 7};
  int reference_n = 9;
  double tol = kDefaultSolveTol;
  int load_quad_points = 4;
  int error_quad_points = 3;
  int data_grid_level = 8;
  int data_quad_points = 6;
  DataSource data_source = DataSource::Exact;
  std::string out_path;
  std::uint64_t seed = 0;
  bool long_run = false;
  int threads = 0; // 0 = runtime default
  Point convergence_center{0.75, 0.5};
  int single_m = 9;
  int single_n = 6;
  std::optional<std::vector<double>> data_w;
  std::optional<NoiseSpec> noise;

  void validate() const; // throws ConfigError
};

/// Parses a JSON config file; unknown keys are a ConfigError.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config_json(const std::string& text);

struct TableCell {
  int n = 0;
  int m = 0;
  std::optional<double> error;     // H1 recovery error, empty on failure
  std::string failure_reason;      // set when error is empty
  double gramian_condition = 0.0;
  double inv_gramian_one_norm = 0.0;
  double wall_ms = 0.0;
};

struct ErrorTable {
  ExperimentConfig config;
  std::vector<TableCell> cells; // ordered by (n, m)
};

/// One recovery experiment per (m,n): data from e^x cos(y) with f = 0.
/// Failing cells record a reason and the run continues. Cells execute in a
/// worker pool; the output order is (n, m) regardless of completion order.
ErrorTable run_table(const ExperimentConfig& config);

/// CSV with header n,m,e,gramian_cond,M_hat,wall_ms; %.6g formatting.
/// All columns except wall_ms are byte-deterministic for a fixed config.
void write_table_csv(const ErrorTable& table, std::ostream& out);

struct ConvergenceRow {
  int n = 0;
  double h1_err = 0.0;
  double linf_err = 0.0;
};

struct ConvergenceResult {
  ExperimentConfig config;
  std::vector<ConvergenceRow> rows;
  std::optional<double> h1_slope;   // least-squares slope over log2 h
  std::optional<double> linf_slope; // empty when fewer than 2 rows
};

/// Representer errors against the reference_n solution for one functional
/// centered at convergence_center.
ConvergenceResult run_representer_convergence(const ExperimentConfig& config);

/// CSV rows n,h1_err,linf_err followed by a final row slope,<h1>,<linf>.
void write_convergence_csv(const ConvergenceResult& result, std::ostream& out);

/// One offline+online recovery at (single_m, single_n); data from config.w,
/// or generated from e^x cos(y) (plus optional noise). Returns the JSON
/// report text: coefficients, data residual, diagnostics, optional noise
/// amplification bound and H1 error.
std::string run_single_recovery(const ExperimentConfig& config);

/// Least-squares slope of log2(err) against the refinement level, negated so
/// that err ~ C h^s reports s. Empty for fewer than two points.
std::optional<double> fit_rate(const std::vector<int>& levels, const std::vector<double>& errors);

/// %.6g float formatting used by all CSV output.
std::string format_g6(double v);

} // namespace hrec
