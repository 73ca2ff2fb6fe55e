#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>

#include "anyonlo/cphi.hpp"
#include "anyonlo/invariants.hpp"
#include "test_support.hpp"

using namespace anyonlo;
using anyonlo::testing::max_entry_diff;
using anyonlo::testing::random_su2;

constexpr double kPi = std::numbers::pi;

namespace {

const Eigen::Matrix4cd kSwap = [] {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = m(3, 3) = m(1, 2) = m(2, 1) = 1.0;
  return m;
}();

const Eigen::Matrix4cd kCnot = [] {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}();

}  // namespace

TEST_CASE("magic basis and its transform") {
  const Eigen::Matrix4cd q = magic_basis();
  CHECK(unitarity_defect(q) < 1e-15);

  SUBCASE("identity stays the identity") {
    CHECK(max_entry_diff(to_magic_basis(Eigen::Matrix4cd::Identity()),
                         Eigen::Matrix4cd::Identity()) < 1e-15);
  }

  SUBCASE("local gates become orthogonal up to a phase") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const Eigen::Matrix4cd local =
          Eigen::kroneckerProduct(random_su2(rng), random_su2(rng));
      const Eigen::Matrix4cd ub = to_magic_basis(local);
      const Eigen::Matrix4cd m = ub.transpose() * ub;
      // proportional to the identity
      const cxd scale = m(0, 0);
      CHECK(std::abs(std::abs(scale) - 1.0) < 1e-12);
      CHECK(max_entry_diff(m, scale * Eigen::Matrix4cd::Identity()) < 1e-12);
    }
  }

  SUBCASE("non-unitary input is rejected") {
    CHECK_THROWS_AS(to_magic_basis(2.0 * Eigen::Matrix4cd::Identity()),
                    std::invalid_argument);
  }
}

TEST_CASE("invariants of reference gates") {
  SUBCASE("identity") {
    const LocalInvariants inv = local_invariants(Eigen::Matrix4cd::Identity());
    CHECK(std::abs(inv.g1 - cxd(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(inv.g2 - cxd(3.0, 0.0)) < 1e-12);
    CHECK(inv.ep < 1e-12);
  }

  SUBCASE("CNOT is maximally entangling") {
    const LocalInvariants inv = local_invariants(kCnot);
    CHECK(std::abs(inv.g1) < 1e-12);
    CHECK(std::abs(inv.g2 - cxd(1.0, 0.0)) < 1e-12);
    CHECK(inv.ep == doctest::Approx(1.0));
  }

  SUBCASE("SWAP does not entangle on average") {
    const LocalInvariants inv = local_invariants(kSwap);
    CHECK(std::abs(inv.g1 - cxd(-1.0, 0.0)) < 1e-12);
    CHECK(inv.ep < 1e-12);
  }

  SUBCASE("the hard-core endpoint of the two-qubit gate") {
    CHECK(local_invariants(c_phi_reference(kPi).encoded).ep ==
          doctest::Approx(1.0));
  }
}

TEST_CASE("closed form for the entangling power") {
  CHECK(ep_formula(0.0) == 0.0);
  CHECK(ep_formula(kPi) == doctest::Approx(1.0));
  CHECK(ep_formula(kPi / 2.0) == doctest::Approx(0.75));

  SUBCASE("matches the invariant computation across the grid") {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const double phi = kPi * k / 49.0;
      const LocalInvariants inv = local_invariants(c_phi_reference(phi).encoded);
      worst = std::max(worst, std::abs(inv.ep - ep_formula(phi)));
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("G1, G2 are invariant under local conjugation and SWAP") {
  std::mt19937_64 rng(314);
  const Eigen::Matrix4cd u = c_phi_reference(1.2).encoded;
  const LocalInvariants base = local_invariants(u);

  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::Matrix4cd pre =
        Eigen::kroneckerProduct(random_su2(rng), random_su2(rng));
    const Eigen::Matrix4cd post =
        Eigen::kroneckerProduct(random_su2(rng), random_su2(rng));
    const LocalInvariants conj = local_invariants(post * u * pre);
    CHECK(std::abs(conj.g1 - base.g1) < 1e-10);
    CHECK(std::abs(conj.g2 - base.g2) < 1e-10);
  }

  const LocalInvariants swapped = local_invariants(kSwap * u * kSwap);
  CHECK(std::abs(swapped.g1 - base.g1) < 1e-10);
  CHECK(std::abs(swapped.g2 - base.g2) < 1e-10);
}

TEST_CASE("ep vanishes exactly on the non-entangling families") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Matrix4cd local =
        Eigen::kroneckerProduct(random_su2(rng), random_su2(rng));
    CHECK(local_invariants(local).ep < 1e-12);
    CHECK(local_invariants(local * kSwap).ep < 1e-12);
  }
}
