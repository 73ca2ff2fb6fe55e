#include "anyonlo/encoded.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace anyonlo {

namespace {

const cxd kI(0.0, 1.0);

}  // namespace

std::pair<int, int> LogicalLayout::pair_modes(int qubit) const {
  if (qubit < 1 || qubit > qubits) {
    throw std::invalid_argument("qubit index out of range");
  }
  return {2 * qubit - 1, 2 * qubit};
}

BasisState encode_logical(std::string_view bits) {
  std::uint32_t occ = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("logical bitstring must contain only 0/1");
    }
    // |0_L> = |1,0>, |1_L> = |0,1>
    occ = (occ << 2) | (c == '0' ? 0b10u : 0b01u);
  }
  return BasisState(occ, 2 * static_cast<int>(bits.size()));
}

DecodedState decode_logical(const FockVector& v, const LogicalLayout& layout) {
  if (v.modes() != layout.modes()) {
    throw std::invalid_argument("vector mode count does not match layout");
  }
  DecodedState out;
  out.logical = Eigen::VectorXcd::Zero(1L << layout.qubits);
  for (const auto& [state, amp] : v.amplitudes()) {
    long logical_index = 0;
    bool in_code_space = true;
    for (int q = 1; q <= layout.qubits; ++q) {
      const auto [lo, hi] = layout.pair_modes(q);
      const int pattern = 2 * state.occupation(lo) + state.occupation(hi);
      if (pattern == 0b10) {
        logical_index = 2 * logical_index;
      } else if (pattern == 0b01) {
        logical_index = 2 * logical_index + 1;
      } else {
        in_code_space = false;
        break;
      }
    }
    if (in_code_space) {
      out.logical(logical_index) += amp;
    } else {
      out.leakage += std::norm(amp);
    }
  }
  return out;
}

Eigen::Matrix2cd logical_phase_action(double theta) {
  Eigen::Matrix2cd m;
  m << 1.0, 0.0, 0.0, std::polar(1.0, theta);
  return m;
}

Eigen::Matrix2cd logical_mix_action(double theta) {
  Eigen::Matrix2cd m;
  m << std::cos(theta), kI * std::sin(theta), kI * std::sin(theta),
      std::cos(theta);
  return m;
}

Eigen::Matrix2cd single_qubit_matrix(const SingleQubitAngles& a) {
  return std::polar(1.0, a.alpha) * logical_phase_action(a.beta) *
         logical_mix_action(a.gamma) * logical_phase_action(a.delta);
}

SingleQubitAngles zxz_angles(const Eigen::Matrix2cd& u) {
  // ZYZ extraction first: u = e^{i p} Rz(b) Ry(t) Rz(l) in half-angle
  // rotations, then Ry(t) = Rz(pi/2) Rx(t) Rz(-pi/2), then each half-angle
  // factor is rewritten through the generator actions.
  const double det_arg = std::arg(u.determinant());
  const double t = 2.0 * std::atan2(std::abs(u(1, 0)), std::abs(u(0, 0)));
  const double ang1 = std::arg(u(1, 1));
  const double ang2 = std::arg(u(1, 0));
  const double p = 0.5 * det_arg;
  const double b = ang1 + ang2 - det_arg + std::numbers::pi / 2.0;
  const double l = ang1 - ang2 - std::numbers::pi / 2.0;

  SingleQubitAngles out;
  out.beta = b;
  out.gamma = -0.5 * t;
  out.delta = l;
  out.alpha = p - 0.5 * (b + l);
  return out;
}

Circuit compile_single_qubit(const SingleQubitAngles& angles, int qubit,
                             const LogicalLayout& layout, double phi) {
  const auto [lo, hi] = layout.pair_modes(qubit);
  Circuit circuit{layout.modes(), phi, {}};
  auto push_ps = [&circuit](int mode, double theta) {
    if (theta != 0.0) {
      circuit.elements.push_back(OpticalElement::phase_shifter(mode, theta));
    }
  };
  push_ps(hi, angles.delta);
  if (angles.gamma != 0.0) {
    circuit.elements.push_back(
        OpticalElement::beam_splitter(lo, hi, angles.gamma));
  }
  push_ps(hi, angles.beta);
  // exactly one particle lives on the pair, so a uniform phase-shifter
  // pair realizes the global phase
  push_ps(lo, angles.alpha);
  push_ps(hi, angles.alpha);
  return circuit;
}

Eigen::Matrix2cd logical_action(const Circuit& circuit, int qubit,
                                const LogicalLayout& layout, Engine engine) {
  Eigen::Matrix2cd action;
  for (int bit = 0; bit < 2; ++bit) {
    std::string bits(static_cast<std::size_t>(layout.qubits), '0');
    bits[static_cast<std::size_t>(qubit - 1)] = static_cast<char>('0' + bit);
    const FockVector out = run_circuit(circuit, encode_logical(bits), engine);
    const DecodedState decoded = decode_logical(out, layout);
    // spectator qubits stay |0>, so the two relevant joint indices differ
    // only in the target qubit's bit
    const int shift = layout.qubits - qubit;
    action(0, bit) = decoded.logical(0);
    action(1, bit) = decoded.logical(1L << shift);
  }
  return action;
}

Eigen::Matrix2cd rotation_z(double angle) {
  Eigen::Matrix2cd m;
  m << std::polar(1.0, -angle / 2.0), 0.0, 0.0, std::polar(1.0, angle / 2.0);
  return m;
}

Eigen::Matrix2cd rotation_about(const Eigen::Vector3d& axis, double angle) {
  Eigen::Matrix2cd pauli_dot;
  pauli_dot << axis.z(), cxd(axis.x(), -axis.y()), cxd(axis.x(), axis.y()),
      -axis.z();
  return std::cos(angle / 2.0) * Eigen::Matrix2cd::Identity() -
         kI * std::sin(angle / 2.0) * pauli_dot;
}

}  // namespace anyonlo
