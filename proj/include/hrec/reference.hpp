#pragma once

#include <span>
#include <vector>

#include "hrec/fem.hpp"
#include "hrec/functionals.hpp"

// Serial reference implementations of the OpenMP kernels, kept for tests and
// the benchmark tool. Same contracts as the parallel versions.
namespace hrec::ref {

void spmv_serial(const SparseMatrix& a, std::span<const double> x, std::span<double> y);

SparseMatrix assemble_stiffness_serial(const GridMesh& mesh);

std::vector<double> gaussian_load_serial(const GridMesh& mesh, const GaussianAverage& g,
                                         int quad_points = 4);

double h1_error_serial(const FeFunction& v, const ExactField& ref, int quad_points = 3);

} // namespace hrec::ref
