// Phase-shifters and beam-splitters acting on anyonic Fock states, with an
// exact analytic engine and a Hermitian-exponential reference engine.
#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "anyonlo/fock.hpp"

namespace anyonlo {

enum class ElementKind { PhaseShifter, BeamSplitter };

struct OpticalElement {
  ElementKind kind = ElementKind::PhaseShifter;
  int mode_a = 1;   // phase-shifter mode, or first beam-splitter mode
  int mode_b = 0;   // second beam-splitter mode (> mode_a); 0 for PS
  double theta = 0.0;

  static OpticalElement phase_shifter(int mode, double theta);
  static OpticalElement beam_splitter(int i, int j, double theta);
};

struct Circuit {
  int modes = 0;
  double phi = 0.0;
  std::vector<OpticalElement> elements;

  AlgebraConfig algebra() const { return AlgebraConfig{modes, phi}; }
  void validate() const;
};

// 2x2 transfer block of a beam-splitter over the ordered single-excitation
// pair (|..1_i..0_j..>, |..0_i..1_j..>) when `occupied_between` modes sit
// strictly between i and j:
//
//   [ cos(theta)                  i sin(theta) (-1)^L e^{+i phi L} ]
//   [ i sin(theta) (-1)^L e^{-i phi L}                  cos(theta) ]
//
// Unitary for every (L, theta, phi); reduces to the familiar
// [[cos, i sin], [i sin, cos]] at L = 0.
struct BeamSplitterBlock {
  int occupied_between = 0;
  double theta = 0.0;
  double phi = 0.0;

  Eigen::Matrix2cd coefficients() const;
};

enum class Engine { Analytic, Exact };

// exp(i theta N_i): multiplies each amplitude by e^{i theta n_i}.
FockVector apply_phase_shifter(const FockVector& v, int mode, double theta);

// exp(i theta (a_i^dag a_j + a_j^dag a_i)) via the per-state transfer block.
FockVector apply_beam_splitter(const FockVector& v, int i, int j,
                               double theta, const AlgebraConfig& cfg);

FockVector apply_element(const FockVector& v, const OpticalElement& element,
                         const AlgebraConfig& cfg);

// Matrix of the element's Hamiltonian (N_i, or a_i^dag a_j + a_j^dag a_i)
// restricted to a fixed particle sector, assembled from the operator
// applications above.
Eigen::MatrixXcd build_element_matrix(const OpticalElement& element,
                                      std::span<const BasisState> basis,
                                      const AlgebraConfig& cfg);

// e^{i theta H} v through eigendecomposition. H must be Hermitian to 1e-12.
Eigen::VectorXcd evolve_exact(const Eigen::MatrixXcd& hamiltonian,
                              double theta, const Eigen::VectorXcd& v);

// Full sector unitary e^{i theta H} of one element.
Eigen::MatrixXcd element_unitary_matrix(const OpticalElement& element,
                                        std::span<const BasisState> basis,
                                        const AlgebraConfig& cfg);

// Applies the circuit's elements in order to |input> with the selected
// engine. Both engines agree to numerical precision; Exact exponentiates
// each element Hamiltonian on the input's particle sector.
FockVector run_circuit(const Circuit& circuit, const BasisState& input,
                       Engine engine = Engine::Analytic);

}  // namespace anyonlo
