#pragma once

#include <span>
#include <string>
#include <vector>

#include "spin_model.hpp"

namespace tfim {

struct SpectralResult {
  std::vector<double> eigenvalues;    // ascending
  std::vector<double> ground_vector;  // unit norm, real
  double degeneracy_gap = 0.0;        // E1 - E0
};

// Full spectrum of a real symmetric operator by cyclic Jacobi rotations.
// Sweeps until the off-diagonal Frobenius norm drops below 1e-12, at most 100
// sweeps; non-convergence is reported with the residual norm. Dimension is
// capped at 4096.
SpectralResult diagonalize(const DenseOperator& op);

enum class OrderParameterVariant { IncludeDiagonal, ExcludeDiagonal };

const char* to_string(OrderParameterVariant variant);
OrderParameterVariant order_variant_from_string(const std::string& name);

// Correlation-based order parameter from an N x N matrix of <Z_i Z_j>.
// IncludeDiagonal: sqrt(sum_{i,j} C_ij / N^2), the i = j terms kept.
// ExcludeDiagonal: sqrt(max(0, sum_{i != j} C_ij / N^2)); the clamp absorbs
// numerical noise in a vanishing off-diagonal sum.
double order_parameter(std::span<const double> correlations, int n_spins,
                       OrderParameterVariant variant);

struct ExactObservables {
  double energy = 0.0;
  std::vector<double> zz_correlations;  // N*N row-major, unit diagonal
  std::vector<double> x_expectations;   // N
  double order_parameter = 0.0;
};

ExactObservables exact_observables(const SpinChainModel& model,
                                   OrderParameterVariant variant);

// Diagonalizes H(h) at every grid point. Points are independent and run on up
// to max_threads threads.
std::vector<ExactObservables> exact_sweep(const SpinChainModel& base,
                                          std::span<const double> field_grid,
                                          OrderParameterVariant variant,
                                          int max_threads = 1);

}  // namespace tfim
