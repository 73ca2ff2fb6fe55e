// Local invariants and entangling power of two-qubit gates.
#pragma once

#include <complex>

#include <Eigen/Dense>

#include "anyonlo/fock.hpp"

namespace anyonlo {

// Columns: (|00>+|11>)/s2, -i(|00>-|11>)/s2, (|01>-|10>)/s2,
// -i(|01>+|10>)/s2. Local gates become orthogonal (up to phase) in this
// basis, which is what makes the invariants below local.
Eigen::Matrix4cd magic_basis();

// Q^dag U Q. Throws if u is not unitary.
Eigen::Matrix4cd to_magic_basis(const Eigen::Matrix4cd& u);

struct LocalInvariants {
  cxd g1;
  cxd g2;
  double ep = 0.0;  // 1 - |g1|
};

// With M = U_B^T U_B in the magic basis:
//   G1 = tr(M)^2 / (16 det U),  G2 = (tr(M)^2 - tr(M^2)) / (4 det U).
// Both are invariant under single-qubit conjugation and SWAP.
LocalInvariants local_invariants(const Eigen::Matrix4cd& u);

// Closed form for the entangling power of C(phi): 1 - cos^4(phi/2).
double ep_formula(double phi);

// max |U^dag U - Id| entrywise.
double unitarity_defect(const Eigen::MatrixXcd& u);

}  // namespace anyonlo
