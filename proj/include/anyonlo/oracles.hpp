// Independent ground-truth simulators at the two classical endpoints:
// free fermions (phi = 0) via single-particle matrices and determinants,
// hard-core bosons (phi = pi) via explicit qubit-chain evolution.
#pragma once

#include <Eigen/Dense>

#include "anyonlo/linear_optics.hpp"

namespace anyonlo {

// m x m unitary of the circuit: diag(1,..,e^{i theta},..,1) per
// phase-shifter, the [[cos, i sin],[i sin, cos]] embedding per
// beam-splitter, multiplied in application order.
Eigen::MatrixXcd single_particle_matrix(const Circuit& circuit);

// <out| U |in> for free fermions: determinant of the submatrix with rows
// the occupied modes of `out` and columns the occupied modes of `in`,
// both ascending.
cxd free_fermion_amplitude(const Eigen::MatrixXcd& u, const BasisState& in,
                           const BasisState& out);

// Basis index of an occupation state in the 2^m qubit-chain space; mode 1
// is the most significant bit.
int chain_index(const BasisState& state);

// Evolves a 2^m statevector under the qubit-chain Hamiltonians
// (X_i X_j + Y_i Y_j)/2 per beam-splitter and the mode-i number projector
// per phase-shifter, by dense exponentiation. Requires modes <= 10.
Eigen::VectorXcd hardcore_boson_evolve(const Circuit& circuit,
                                       const Eigen::VectorXcd& chain_state);

}  // namespace anyonlo
