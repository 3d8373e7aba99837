#include "spin_model.hpp"

#include <cmath>

namespace tfim {

namespace {

void check_site(int site, int n_spins) {
  if (site < 0 || site >= n_spins) {
    throw ValidationError("site " + std::to_string(site) + " out of range for " +
                          std::to_string(n_spins) + " spins");
  }
}

double check_normalized(Amplitudes state) {
  double norm_sq = 0.0;
  for (const auto& a : state) norm_sq += std::norm(a);
  if (std::abs(norm_sq - 1.0) > 1e-10) {
    throw ValidationError("state is not normalized (|psi|^2 = " + format_full(norm_sq) + ")");
  }
  return norm_sq;
}

double real_part(std::complex<double> value) {
  if (std::abs(value.imag()) > 1e-10) {
    throw NumericalError("expectation has imaginary residue " + format_full(value.imag()));
  }
  return value.real();
}

int sign_z(std::size_t basis, int site) {
  return (basis >> site) & 1u ? -1 : +1;
}

}  // namespace

void validate(const SpinChainModel& model) {
  if (model.n_spins < 2 || model.n_spins > kMaxSpins) {
    throw ValidationError("n_spins must be in [2, " + std::to_string(kMaxSpins) +
                          "], got " + std::to_string(model.n_spins));
  }
  if (!std::isfinite(model.coupling) || !std::isfinite(model.field)) {
    throw ValidationError("coupling and field must be finite");
  }
  if (model.coupling <= 0.0) {
    throw ValidationError("coupling J must be positive");
  }
}

std::string PauliTerm::label() const {
  switch (kind) {
    case PauliKind::Z:
      return "Z" + std::to_string(site_a);
    case PauliKind::X:
      return "X" + std::to_string(site_a);
    case PauliKind::ZZ:
      return "Z" + std::to_string(site_a) + "Z" + std::to_string(site_b);
  }
  return "?";
}

DenseOperator build_hamiltonian(const SpinChainModel& model) {
  validate(model);
  const int n = model.n_spins;
  const std::size_t dim = std::size_t{1} << n;
  DenseOperator op(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    double diag = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      diag -= model.coupling * sign_z(b, i) * sign_z(b, i + 1);
    }
    op.at(b, b) = diag;
    // X_i flips one bit; visiting every b fills both symmetric entries.
    for (int i = 0; i < n; ++i) {
      op.at(b, b ^ (std::size_t{1} << i)) -= model.field;
    }
  }
  return op;
}

DenseOperator term_matrix(const PauliTerm& term, int n_spins) {
  if (n_spins < 1 || n_spins > kMaxSpins) {
    throw ValidationError("n_spins must be in [1, " + std::to_string(kMaxSpins) + "]");
  }
  check_site(term.site_a, n_spins);
  if (term.kind == PauliKind::ZZ) {
    check_site(term.site_b, n_spins);
    if (term.site_a == term.site_b) {
      throw ValidationError("ZZ term requires two distinct sites");
    }
  }
  const std::size_t dim = std::size_t{1} << n_spins;
  DenseOperator op(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    switch (term.kind) {
      case PauliKind::Z:
        op.at(b, b) = sign_z(b, term.site_a);
        break;
      case PauliKind::X:
        op.at(b, b ^ (std::size_t{1} << term.site_a)) = 1.0;
        break;
      case PauliKind::ZZ:
        op.at(b, b) = sign_z(b, term.site_a) * sign_z(b, term.site_b);
        break;
    }
  }
  return op;
}

double expectation(const DenseOperator& op, Amplitudes state) {
  if (state.size() != op.dim()) {
    throw ValidationError("state dimension " + std::to_string(state.size()) +
                          " does not match operator dimension " + std::to_string(op.dim()));
  }
  check_normalized(state);
  std::complex<double> acc = 0.0;
  for (std::size_t r = 0; r < op.dim(); ++r) {
    std::complex<double> row = 0.0;
    for (std::size_t c = 0; c < op.dim(); ++c) {
      row += op.at(r, c) * state[c];
    }
    acc += std::conj(state[r]) * row;
  }
  return real_part(acc);
}

double expectation(const PauliTerm& term, Amplitudes state, int n_spins) {
  const std::size_t dim = std::size_t{1} << n_spins;
  if (state.size() != dim) {
    throw ValidationError("state dimension does not match n_spins");
  }
  check_site(term.site_a, n_spins);
  if (term.kind == PauliKind::ZZ) check_site(term.site_b, n_spins);
  check_normalized(state);

  std::complex<double> acc = 0.0;
  switch (term.kind) {
    case PauliKind::Z:
      for (std::size_t b = 0; b < dim; ++b) {
        acc += std::norm(state[b]) * static_cast<double>(sign_z(b, term.site_a));
      }
      break;
    case PauliKind::ZZ:
      if (term.site_a == term.site_b) {
        throw ValidationError("ZZ term requires two distinct sites");
      }
      for (std::size_t b = 0; b < dim; ++b) {
        acc += std::norm(state[b]) *
               static_cast<double>(sign_z(b, term.site_a) * sign_z(b, term.site_b));
      }
      break;
    case PauliKind::X: {
      const std::size_t bit = std::size_t{1} << term.site_a;
      for (std::size_t b = 0; b < dim; ++b) {
        acc += std::conj(state[b]) * state[b ^ bit];
      }
      break;
    }
  }
  return real_part(acc);
}

}  // namespace tfim
