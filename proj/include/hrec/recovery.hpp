#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hrec/representers.hpp"

namespace hrec {

struct RecoveryDiagnostics {
  double inv_gramian_one_norm = 0.0;   // ||G^-1||_1, exact (NaN if singular)
  double gramian_condition = 0.0;      // 2-norm condition estimate
  double gramian_asymmetry = 0.0;      // max |g_ij - g_ji|
  double max_representer_h1_norm = 0.0;
  double load_norm_bound = 0.0;        // max_j ||load_vector(lambda_j)||_2
  std::vector<double> solver_residuals;
  std::vector<double> harmonicity_residuals;
  std::vector<double> representer_h1_norms;
  std::vector<std::string> warnings;
};

/// Everything that depends on the sensors but not on the data: the zero
/// boundary solve, the representers, the measurement Gramian and diagnostics.
struct OfflineBundle {
  std::shared_ptr<const GridMesh> mesh;
  FeFunction u0_hat;
  RepresenterSet representers;
  DenseMatrix gramian;           // g(i,j) = lambda_j(representer_i)
  std::vector<double> lambda_u0; // lambda_j(u0_hat)
  SensorGrid sensors;
  RecoveryDiagnostics diagnostics;

  int m() const { return gramian.rows(); }
};

struct RecoveryResult {
  FeFunction u_hat;
  std::vector<double> a_hat;
  std::vector<double> w_prime_hat; // w - lambda(u0_hat)
  double data_residual = 0.0;      // ||G a - w'||_inf from the dense solve
  std::optional<double> h1_error;  // vs a supplied exact field
  std::optional<double> noise_amplification_bound;
};

/// Offline phase: solve for u0 (f may be null for f = 0), compute all
/// representers and the Gramian, populate diagnostics. Warns (does not
/// fail) when the Gramian condition exceeds 1e12; a singular Gramian is
/// only reported when the online solve needs it.
OfflineBundle offline(std::shared_ptr<const GridMesh> mesh, const ExactField* f,
                      const SensorGrid& sensors, double tol = kDefaultSolveTol);

/// Online phase: one m x m dense solve plus a coefficient combination.
/// When noise_bound is supplied the result carries the a-posteriori
/// amplification bound ||G^-1||_1 * m * max_j||phi_j||_H1 * noise_bound.
RecoveryResult online(const OfflineBundle& bundle, std::span<const double> w,
                      std::optional<double> noise_bound = std::nullopt);

/// Generates data w_j = lambda_j(u_exact), runs online, and fills h1_error
/// against u_exact.
RecoveryResult recover_from_exact(const OfflineBundle& bundle, const ExactField& u_exact);

// Versioned little-endian binary container (magic "HRB1"); see README for
// the byte layout. Round-trips are byte-identical.
void write_bundle(const OfflineBundle& bundle, std::ostream& out);
OfflineBundle read_bundle(std::istream& in);
void write_bundle_file(const OfflineBundle& bundle, const std::string& path);
OfflineBundle read_bundle_file(const std::string& path);

} // namespace hrec
