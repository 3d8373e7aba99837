#include "exact_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tfim {

namespace {

constexpr std::size_t kMaxDim = 4096;
constexpr double kOffNormThreshold = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, std::size_t dim) {
  double sum = 0.0;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (r != c) sum += a[r * dim + c] * a[r * dim + c];
    }
  }
  return std::sqrt(sum);
}

// One Jacobi rotation zeroing a[p][q], p < q, applied symmetrically to the
// working matrix and accumulated into the eigenvector columns.
void rotate(std::vector<double>& a, std::vector<double>& vecs, std::size_t dim,
            std::size_t p, std::size_t q) {
  const double apq = a[p * dim + q];
  if (apq == 0.0) return;
  const double theta = (a[q * dim + q] - a[p * dim + p]) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e100) {
    t = 1.0 / (2.0 * theta);
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  a[p * dim + p] -= t * apq;
  a[q * dim + q] += t * apq;
  a[p * dim + q] = 0.0;
  a[q * dim + p] = 0.0;
  for (std::size_t r = 0; r < dim; ++r) {
    if (r == p || r == q) continue;
    const double arp = a[r * dim + p];
    const double arq = a[r * dim + q];
    a[r * dim + p] = c * arp - s * arq;
    a[p * dim + r] = a[r * dim + p];
    a[r * dim + q] = s * arp + c * arq;
    a[q * dim + r] = a[r * dim + q];
  }
  for (std::size_t r = 0; r < dim; ++r) {
    const double vrp = vecs[r * dim + p];
    const double vrq = vecs[r * dim + q];
    vecs[r * dim + p] = c * vrp - s * vrq;
    vecs[r * dim + q] = s * vrp + c * vrq;
  }
}

}  // namespace

SpectralResult diagonalize(const DenseOperator& op) {
  const std::size_t dim = op.dim();
  if (dim < 1 || dim > kMaxDim) {
    throw ValidationError("diagonalize supports dimensions 1..4096, got " +
                          std::to_string(dim));
  }
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = r + 1; c < dim; ++c) {
      if (op.at(r, c) != op.at(c, r)) {
        throw ValidationError("diagonalize requires a symmetric matrix");
      }
    }
  }

  std::vector<double> a(op.entries().begin(), op.entries().end());
  std::vector<double> vecs(dim * dim, 0.0);
  for (std::size_t r = 0; r < dim; ++r) vecs[r * dim + r] = 1.0;

  double off = off_diagonal_norm(a, dim);
  int sweep = 0;
  while (off >= kOffNormThreshold && sweep < kMaxSweeps) {
    for (std::size_t p = 0; p + 1 < dim; ++p) {
      for (std::size_t q = p + 1; q < dim; ++q) {
        rotate(a, vecs, dim, p, q);
      }
    }
    ++sweep;
    off = off_diagonal_norm(a, dim);
  }
  if (off >= kOffNormThreshold) {
    throw NumericalError("Jacobi did not converge after " + std::to_string(kMaxSweeps) +
                         " sweeps; off-diagonal norm " + format_full(off));
  }

  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
    return a[lhs * dim + lhs] < a[rhs * dim + rhs];
  });

  SpectralResult result;
  result.eigenvalues.resize(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    result.eigenvalues[k] = a[order[k] * dim + order[k]];
  }
  result.ground_vector.resize(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    result.ground_vector[r] = vecs[r * dim + order[0]];
  }
  result.degeneracy_gap = dim > 1 ? result.eigenvalues[1] - result.eigenvalues[0] : 0.0;

  // Residual check against the original operator.
  double residual = 0.0;
  for (std::size_t r = 0; r < dim; ++r) {
    double hv = 0.0;
    for (std::size_t c = 0; c < dim; ++c) hv += op.at(r, c) * result.ground_vector[c];
    residual = std::max(residual, std::abs(hv - result.eigenvalues[0] * result.ground_vector[r]));
  }
  if (residual >= 1e-9) {
    throw NumericalError("eigenpair residual " + format_full(residual) + " exceeds 1e-9");
  }
  return result;
}

const char* to_string(OrderParameterVariant variant) {
  return variant == OrderParameterVariant::IncludeDiagonal ? "include_diagonal"
                                                           : "exclude_diagonal";
}

OrderParameterVariant order_variant_from_string(const std::string& name) {
  if (name == "include_diagonal") return OrderParameterVariant::IncludeDiagonal;
  if (name == "exclude_diagonal") return OrderParameterVariant::ExcludeDiagonal;
  throw ValidationError("unknown order parameter variant: " + name);
}

double order_parameter(std::span<const double> correlations, int n_spins,
                       OrderParameterVariant variant) {
  const std::size_t n = static_cast<std::size_t>(n_spins);
  if (n_spins < 1 || correlations.size() != n * n) {
    throw ValidationError("correlation matrix must be N x N");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(correlations[i * n + j] - correlations[j * n + i]) > 1e-10) {
        throw ValidationError("correlation matrix must be symmetric");
      }
    }
  }
  for (double c : correlations) {
    if (c < -1.0 - 1e-9 || c > 1.0 + 1e-9) {
      throw ValidationError("correlation entries must lie in [-1, 1]");
    }
  }

  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (variant == OrderParameterVariant::ExcludeDiagonal && i == j) continue;
      sum += correlations[i * n + j];
    }
  }
  const double mean = sum / static_cast<double>(n * n);
  if (variant == OrderParameterVariant::ExcludeDiagonal) {
    return std::sqrt(std::max(0.0, mean));
  }
  return std::sqrt(mean);
}

ExactObservables exact_observables(const SpinChainModel& model,
                                   OrderParameterVariant variant) {
  validate(model);
  const int n = model.n_spins;
  const std::size_t dim = std::size_t{1} << n;

  const SpectralResult spectral = diagonalize(build_hamiltonian(model));
  const std::vector<double>& g = spectral.ground_vector;

  ExactObservables obs;
  obs.energy = spectral.eigenvalues[0];
  obs.zz_correlations.assign(static_cast<std::size_t>(n) * n, 0.0);
  obs.x_expectations.assign(n, 0.0);

  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double corr = 0.0;
      for (std::size_t b = 0; b < dim; ++b) {
        const int zi = (b >> i) & 1u ? -1 : +1;
        const int zj = (b >> j) & 1u ? -1 : +1;
        corr += g[b] * g[b] * zi * zj;
      }
      obs.zz_correlations[static_cast<std::size_t>(i) * n + j] = corr;
      obs.zz_correlations[static_cast<std::size_t>(j) * n + i] = corr;
    }
  }
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    double x = 0.0;
    for (std::size_t b = 0; b < dim; ++b) x += g[b] * g[b ^ bit];
    obs.x_expectations[i] = x;
  }
  obs.order_parameter = order_parameter(obs.zz_correlations, n, variant);
  return obs;
}

std::vector<ExactObservables> exact_sweep(const SpinChainModel& base,
                                          std::span<const double> field_grid,
                                          OrderParameterVariant variant,
                                          int max_threads) {
  if (field_grid.empty()) {
    throw ValidationError("field grid must not be empty");
  }
  for (double h : field_grid) {
    if (!std::isfinite(h) || h < 0.0) {
      throw ValidationError("field grid values must be finite and >= 0");
    }
  }
  std::vector<ExactObservables> results(field_grid.size());
  parallel_for(field_grid.size(), max_threads, [&](std::size_t k) {
    SpinChainModel point = base;
    point.field = field_grid[k];
    results[k] = exact_observables(point, variant);
  });
  return results;
}

}  // namespace tfim
