#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "common.hpp"

namespace tfim {

// Site i maps to bit i of the basis-state index (site 0 = least significant
// bit) and |0> is the Z = +1 eigenstate. Every module follows this convention.

constexpr int kMaxSpins = 12;

// Open-boundary transverse-field Ising chain:
//   H = -J sum_{i<N-1} Z_i Z_{i+1}  -  h sum_i X_i
struct SpinChainModel {
  int n_spins = 4;
  double coupling = 1.0;  // J
  double field = 0.0;     // h
};

void validate(const SpinChainModel& model);

enum class PauliKind { Z, X, ZZ };

struct PauliTerm {
  PauliKind kind = PauliKind::Z;
  int site_a = 0;
  int site_b = 0;  // second site, ZZ only

  static PauliTerm z(int site) { return {PauliKind::Z, site, site}; }
  static PauliTerm x(int site) { return {PauliKind::X, site, site}; }
  static PauliTerm zz(int a, int b) { return {PauliKind::ZZ, a, b}; }

  std::string label() const;  // "Z0", "X3", "Z0Z2"
};

// Dense real symmetric operator on the full 2^N space, row-major. All TFIM
// terms are real in the computational basis, so a real matrix suffices;
// circuit states stay complex.
class DenseOperator {
 public:
  explicit DenseOperator(std::size_t dim) : dim_(dim), entries_(dim * dim, 0.0) {}

  std::size_t dim() const { return dim_; }
  double& at(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  double at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  std::span<const double> entries() const { return entries_; }

 private:
  std::size_t dim_;
  std::vector<double> entries_;
};

DenseOperator build_hamiltonian(const SpinChainModel& model);

DenseOperator term_matrix(const PauliTerm& term, int n_spins);

using Amplitudes = std::span<const std::complex<double>>;

// <psi|O|psi> for a normalized state. The contraction is real for symmetric
// operators; an imaginary residue above 1e-10 is an error.
double expectation(const DenseOperator& op, Amplitudes state);
double expectation(const PauliTerm& term, Amplitudes state, int n_spins);

}  // namespace tfim
