#include "anyonlo/invariants.hpp"

#include <cmath>
#include <stdexcept>

namespace anyonlo {

namespace {

const cxd kI(0.0, 1.0);

}  // namespace

Eigen::Matrix4cd magic_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4cd q;
  q << s, -kI * s, 0, 0,
       0, 0, s, -kI * s,
       0, 0, -s, -kI * s,
       s, kI * s, 0, 0;
  return q;
}

Eigen::Matrix4cd to_magic_basis(const Eigen::Matrix4cd& u) {
  if (unitarity_defect(u) > 1e-9) {
    throw std::invalid_argument("matrix is not unitary");
  }
  const Eigen::Matrix4cd q = magic_basis();
  return q.adjoint() * u * q;
}

LocalInvariants local_invariants(const Eigen::Matrix4cd& u) {
  const Eigen::Matrix4cd ub = to_magic_basis(u);
  const Eigen::Matrix4cd m = ub.transpose() * ub;
  const cxd tr = m.trace();
  const cxd det = u.determinant();
  LocalInvariants inv;
  inv.g1 = tr * tr / (16.0 * det);
  inv.g2 = (tr * tr - (m * m).trace()) / (4.0 * det);
  inv.ep = 1.0 - std::abs(inv.g1);
  return inv;
}

double ep_formula(double phi) {
  const double c = std::cos(phi / 2.0);
  return 1.0 - c * c * c * c;
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  const Eigen::MatrixXcd gram = u.adjoint() * u;
  return (gram - Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace anyonlo
