#include "anyonlo/oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

namespace anyonlo {

namespace {

const cxd kI(0.0, 1.0);

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, -kI, kI, 0;
  return m;
}

// Operator P on chain site `mode`, identity elsewhere; mode 1 is the most
// significant bit of the chain index.
Eigen::MatrixXcd chain_operator(int modes, int mode,
                                const Eigen::Matrix2cd& p) {
  const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int k = 1; k <= modes; ++k) {
    out = Eigen::kroneckerProduct(out, k == mode ? p : id2).eval();
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd single_particle_matrix(const Circuit& circuit) {
  circuit.validate();
  const int m = circuit.modes;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(m, m);
  for (const auto& e : circuit.elements) {
    Eigen::MatrixXcd step = Eigen::MatrixXcd::Identity(m, m);
    if (e.kind == ElementKind::PhaseShifter) {
      step(e.mode_a - 1, e.mode_a - 1) = std::polar(1.0, e.theta);
    } else {
      const double c = std::cos(e.theta);
      const cxd s = kI * std::sin(e.theta);
      step(e.mode_a - 1, e.mode_a - 1) = c;
      step(e.mode_b - 1, e.mode_b - 1) = c;
      step(e.mode_a - 1, e.mode_b - 1) = s;
      step(e.mode_b - 1, e.mode_a - 1) = s;
    }
    u = step * u;  // later elements act on the left
  }
  return u;
}

cxd free_fermion_amplitude(const Eigen::MatrixXcd& u, const BasisState& in,
                           const BasisState& out) {
  if (in.particle_count() != out.particle_count()) {
    throw std::invalid_argument(
        "free-fermion amplitude needs equal particle numbers");
  }
  std::vector<int> cols;
  std::vector<int> rows;
  for (int mode = 1; mode <= in.modes(); ++mode) {
    if (in.occupation(mode)) cols.push_back(mode - 1);
  }
  for (int mode = 1; mode <= out.modes(); ++mode) {
    if (out.occupation(mode)) rows.push_back(mode - 1);
  }
  const long n = static_cast<long>(rows.size());
  if (n == 0) return cxd(1.0, 0.0);
  Eigen::MatrixXcd sub(n, n);
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) {
      sub(r, c) = u(rows[static_cast<std::size_t>(r)],
                    cols[static_cast<std::size_t>(c)]);
    }
  }
  return sub.determinant();
}

int chain_index(const BasisState& state) {
  return static_cast<int>(state.bits());
}

Eigen::VectorXcd hardcore_boson_evolve(const Circuit& circuit,
                                       const Eigen::VectorXcd& chain_state) {
  circuit.validate();
  if (circuit.modes > 10) {
    throw std::runtime_error(
        "qubit-chain evolution builds 2^m operators; modes must be <= 10");
  }
  const long dim = 1L << circuit.modes;
  if (chain_state.size() != dim) {
    throw std::invalid_argument("chain state must have dimension 2^modes");
  }

  Eigen::VectorXcd v = chain_state;
  for (const auto& e : circuit.elements) {
    if (e.kind == ElementKind::PhaseShifter) {
      // number projector is diagonal; apply the phase directly
      for (long k = 0; k < dim; ++k) {
        const BasisState state(static_cast<std::uint32_t>(k), circuit.modes);
        if (state.occupation(e.mode_a)) {
          v(k) *= std::polar(1.0, e.theta);
        }
      }
      continue;
    }
    const Eigen::MatrixXcd h =
        0.5 * (chain_operator(circuit.modes, e.mode_a, pauli_x()) *
                   chain_operator(circuit.modes, e.mode_b, pauli_x()) +
               chain_operator(circuit.modes, e.mode_a, pauli_y()) *
                   chain_operator(circuit.modes, e.mode_b, pauli_y()));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    Eigen::VectorXcd phases(dim);
    for (long k = 0; k < dim; ++k) {
      phases(k) = std::polar(1.0, e.theta * solver.eigenvalues()(k));
    }
    v = solver.eigenvectors() *
        (phases.asDiagonal() * (solver.eigenvectors().adjoint() * v));
  }
  return v;
}

}  // namespace anyonlo
