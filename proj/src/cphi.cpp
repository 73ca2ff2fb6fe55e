#include "anyonlo/cphi.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anyonlo {

namespace {

const cxd kI(0.0, 1.0);
constexpr double kSqrt1_2 = std::numbers::sqrt2 / 2.0;

// m = 4, n = 2 basis order: |1100>, |1010>, |1001>, |0110>, |0101>, |0011>.
constexpr std::array<std::uint32_t, 6> kWindowPatterns = {0b1100, 0b1010,
                                                          0b1001, 0b0110,
                                                          0b0101, 0b0011};

int window_index(std::uint32_t pattern) {
  for (int k = 0; k < 6; ++k) {
    if (kWindowPatterns[static_cast<std::size_t>(k)] == pattern) return k;
  }
  return -1;
}

}  // namespace

CPhiGate c_phi_reference(double phi) {
  CPhiGate gate;
  gate.phi = phi;
  gate.axis = Eigen::Vector3d(-std::sin(phi), 0.0, std::cos(phi));

  const cxd quarter = std::polar(1.0, std::numbers::pi / 4.0);
  const cxd mix_00 = (1.0 - kI * std::cos(phi)) * kSqrt1_2;
  const cxd mix_11 = (1.0 + kI * std::cos(phi)) * kSqrt1_2;
  const cxd coupling = kI * std::sin(phi) * kSqrt1_2;

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(6, 6);
  m(0, 0) = 1.0;
  m(1, 1) = std::conj(quarter);
  m(2, 2) = mix_00;
  m(3, 3) = quarter;
  m(4, 4) = mix_11;
  m(5, 5) = 1.0;
  m(2, 4) = coupling;
  m(4, 2) = coupling;
  gate.two_particle = m;

  // encoded order |00>, |01>, |10>, |11| = window patterns
  // |1010>, |1001>, |0110>, |0101> = sector indices 1, 2, 3, 4
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      gate.encoded(r, c) = m(r + 1, c + 1);
    }
  }
  return gate;
}

FockVector apply_encoded_two_qubit(const FockVector& v, int first_qubit,
                                   const CPhiGate& gate) {
  const int base_mode = 2 * first_qubit - 1;
  if (first_qubit < 1 || base_mode + 3 > v.modes()) {
    throw std::invalid_argument(
        "qubit pair window exceeds the vector's mode range");
  }
  FockVector out(v.modes());
  for (const auto& [state, amp] : v.amplitudes()) {
    const std::uint32_t pattern = state.window_bits(base_mode, 4);
    const int col = window_index(pattern);
    if (col < 0) {
      throw std::domain_error(
          "code-space violation: window " + std::to_string(first_qubit) +
          " of state " + state.to_string() + " does not hold two particles");
    }
    for (int row = 0; row < 6; ++row) {
      const cxd coefficient = gate.two_particle(row, col);
      if (coefficient == cxd(0.0, 0.0)) continue;
      out.accumulate(
          state.with_window_bits(
              base_mode, 4, kWindowPatterns[static_cast<std::size_t>(row)]),
          amp * coefficient);
    }
  }
  out.prune();
  return out;
}

}  // namespace anyonlo
