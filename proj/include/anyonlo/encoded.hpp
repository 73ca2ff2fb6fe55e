// Dual-rail qubit encoding and single-qubit gate compilation.
#pragma once

#include <string_view>
#include <utility>

#include <Eigen/Dense>

#include "anyonlo/linear_optics.hpp"

namespace anyonlo {

// n qubits on 2n modes; qubit q lives on modes (2q-1, 2q) with
// |0_L> = |1,0> and |1_L> = |0,1>.
struct LogicalLayout {
  int qubits = 0;

  int modes() const { return 2 * qubits; }
  std::pair<int, int> pair_modes(int qubit) const;  // 1-based
};

// "01" -> |1,0,0,1>. Empty string gives the vacuum on zero modes.
BasisState encode_logical(std::string_view bits);

struct DecodedState {
  Eigen::VectorXcd logical;  // 2^n amplitudes, qubit 1 most significant
  double leakage = 0.0;      // squared norm outside the code space
};

// Projects onto the one-particle-per-pair subspace.
DecodedState decode_logical(const FockVector& v, const LogicalLayout& layout);

// Logical actions of the two optical generators on a dual-rail pair:
// a phase-shifter on the pair's second mode is diag(1, e^{i theta}), a
// beam-splitter across the pair is exp(i theta X).
Eigen::Matrix2cd logical_phase_action(double theta);
Eigen::Matrix2cd logical_mix_action(double theta);

// Four-parameter single-qubit target
//   e^{i alpha} * Zr(beta) * Xr(gamma) * Zr(delta)
// in terms of the generator actions above: Zr(t) = logical_phase_action(t),
// Xr(t) = logical_mix_action(t). delta is applied first.
struct SingleQubitAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

Eigen::Matrix2cd single_qubit_matrix(const SingleQubitAngles& angles);

// Euler angles of an arbitrary 2x2 unitary in the generator convention,
// exact including global phase.
SingleQubitAngles zxz_angles(const Eigen::Matrix2cd& u);

// Optical circuit realizing the four-parameter target on one qubit of the
// layout: a phase-shifter for each Z factor, one beam-splitter for the X
// factor, and a pair-uniform phase-shifter pair for alpha. Elements with
// zero angle are omitted.
Circuit compile_single_qubit(const SingleQubitAngles& angles, int qubit,
                             const LogicalLayout& layout, double phi);

// Encoded 2x2 action of a circuit on one qubit, extracted by running the
// circuit on the two logical basis states.
Eigen::Matrix2cd logical_action(const Circuit& circuit, int qubit,
                                const LogicalLayout& layout,
                                Engine engine = Engine::Analytic);

// Standard half-angle Bloch rotations, used by the two-qubit gate layer.
Eigen::Matrix2cd rotation_z(double angle);                       // e^{-i angle Z / 2}
Eigen::Matrix2cd rotation_about(const Eigen::Vector3d& axis, double angle);

}  // namespace anyonlo
