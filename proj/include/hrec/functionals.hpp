#pragma once

#include <variant>
#include <vector>

#include "hrec/fem.hpp"
#include "hrec/mesh.hpp"

namespace hrec {

/// Normalized Gaussian average over the unit square, truncated at the
/// boundary (no renormalization): v -> (2 pi r^2)^(-1/2) * integral over the
/// square of v(z) exp(-|z-center|^2 / (2 r^2)) dz.
struct GaussianAverage {
  Point center;
  double radius = 0.1;
};

/// v -> v(at).
struct PointEval {
  Point at;
};

using MeasurementFunctional = std::variant<GaussianAverage, PointEval>;

enum class FunctionalKind { Gaussian, Point };

/// A list of measurement functionals; grid layouts place centers at
/// (i,j)/(sqrt(m)+1), i,j = 1..sqrt(m).
struct SensorGrid {
  std::vector<MeasurementFunctional> functionals;

  int size() const { return static_cast<int>(functionals.size()); }

  static SensorGrid gaussian_grid(int m, double radius);
  static SensorGrid point_grid(int m);
  static SensorGrid grid(FunctionalKind kind, int m, double radius);
};

/// Grid centers for a perfect-square m, ordered with the second index inner:
/// (1,1)/(s+1), (1,2)/(s+1), ..., (s,s)/(s+1) where s = sqrt(m).
std::vector<Point> grid_centers(int m);

/// Load vector over all nodes: entry i = lambda(N_i). Gaussian averages use
/// per-cell tensor Gauss quadrature (quad_points^2 per cell); point
/// evaluations have at most 4 nonzero entries.
std::vector<double> load_vector(const MeasurementFunctional& lambda, const GridMesh& mesh,
                                int quad_points = 4);

/// lambda applied to a finite element function; equals
/// dot(load_vector(lambda), v.coeffs()).
double apply_to_fe(const MeasurementFunctional& lambda, const FeFunction& v, int quad_points = 4);

/// lambda applied to a closed-form field. Point evaluations are exact;
/// Gaussian averages use grid_quad_points^2 Gauss points on each cell of a
/// virtual uniform grid with 2^grid_level cells per side (absolute accuracy
/// around 1e-9 for the experiment-scale fields).
double apply_to_exact(const MeasurementFunctional& lambda, const ExactField& ref,
                      int grid_level = 8, int grid_quad_points = 6);

} // namespace hrec
