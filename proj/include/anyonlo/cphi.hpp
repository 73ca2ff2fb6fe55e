// The entangling two-qubit gate C(phi) on a four-mode window.
#pragma once

#include <Eigen/Dense>

#include "anyonlo/encoded.hpp"

namespace anyonlo {

// Controlled rotation produced by the beam-splitter protocol on two
// dual-rail qubits. In the two-particle basis of its four modes the gate
// reads (basis order |1100>, |1010>, |1001>, |0110>, |0101>, |0011>):
//
//   diag(1, e^{-i pi/4}, (1 - i cos phi)/sqrt2, e^{+i pi/4},
//        (1 + i cos phi)/sqrt2, 1)
//   with i sin(phi)/sqrt2 coupling |1,0,0,1> <-> |0,1,0,1>.
//
// Restricted to the code space it equals
//   rotation_z(pi/2) (x) |0><0|  +  rotation_about(axis, pi/2) (x) |1><1|
// with axis = (-sin phi, 0, cos phi); the first tensor factor is the
// rotated (first) qubit, the projector the control (second) qubit.
struct CPhiGate {
  double phi = 0.0;
  Eigen::MatrixXcd two_particle;  // 6x6
  Eigen::Matrix4cd encoded;       // |00>, |01>, |10>, |11>
  Eigen::Vector3d axis;
};

CPhiGate c_phi_reference(double phi);

// Applies the gate's 6x6 matrix inside the four-mode window of the
// adjacent qubit pair (first_qubit, first_qubit + 1). Every amplitude must
// carry exactly two particles in the window (the encoded condition);
// modes outside the window are untouched.
FockVector apply_encoded_two_qubit(const FockVector& v, int first_qubit,
                                   const CPhiGate& gate);

}  // namespace anyonlo
