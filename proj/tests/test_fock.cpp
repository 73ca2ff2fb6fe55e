#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "anyonlo/fock.hpp"
#include "test_support.hpp"

using namespace anyonlo;
constexpr double kPi = std::numbers::pi;

TEST_CASE("basis states map occupations, strings and bit windows") {
  const BasisState s = BasisState::from_string("0110");
  CHECK(s.modes() == 4);
  CHECK(s.occupation(1) == 0);
  CHECK(s.occupation(2) == 1);
  CHECK(s.occupation(3) == 1);
  CHECK(s.occupation(4) == 0);
  CHECK(s.particle_count() == 2);
  CHECK(s.to_string() == "0110");
  CHECK(s.occupied_below(4) == 2);
  CHECK(s.occupied_below(2) == 0);
  CHECK(s.occupied_between(1, 4) == 2);
  CHECK(s.occupied_between(2, 3) == 0);
  CHECK(s.window_bits(2, 2) == 0b11);
  CHECK(s.with_window_bits(2, 2, 0b01).to_string() == "0010");
  CHECK(s.with_occupation(1, 1).to_string() == "1110");

  CHECK_THROWS_AS(s.occupation(0), std::invalid_argument);
  CHECK_THROWS_AS(s.occupation(5), std::invalid_argument);
  CHECK_THROWS_AS(BasisState::from_string("01a0"), std::invalid_argument);
  CHECK(BasisState::from_string("").modes() == 0);
}

TEST_CASE("enumerate_basis returns descending lexicographic occupation order") {
  SUBCASE("two particles on four modes") {
    const auto basis = enumerate_basis(4, 2);
    REQUIRE(basis.size() == 6);
    const char* expected[] = {"1100", "1010", "1001", "0110", "0101", "0011"};
    for (std::size_t k = 0; k < basis.size(); ++k) {
      CHECK(basis[k].to_string() == expected[k]);
    }
  }
  SUBCASE("vacuum sector") {
    const auto basis = enumerate_basis(3, 0);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == BasisState::vacuum(3));
  }
  SUBCASE("binomial count") { CHECK(enumerate_basis(3, 2).size() == 3); }
  SUBCASE("bad particle numbers") {
    CHECK_THROWS_AS(enumerate_basis(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_basis(3, -1), std::invalid_argument);
  }
}

TEST_CASE("creation acts with the string phase (-e^{-i phi})^L") {
  const AlgebraConfig cfg{3, 0.0};

  SUBCASE("empty lattice below the mode") {
    const FockVector out = apply_creation(
        FockVector::unit(BasisState::from_string("000")), 2, cfg);
    CHECK(out.amplitude(BasisState::from_string("010")) == cxd(1.0, 0.0));
  }

  SUBCASE("one occupied mode below") {
    for (double phi : {0.0, kPi / 5.0, 1.0, kPi}) {
      const AlgebraConfig deformed{3, phi};
      const FockVector out = apply_creation(
          FockVector::unit(BasisState::from_string("100")), 2, deformed);
      const cxd expected = -std::polar(1.0, -phi);
      CHECK(std::abs(out.amplitude(BasisState::from_string("110")) - expected) <
            1e-15);
    }
  }

  SUBCASE("occupied target gives the zero vector") {
    const FockVector out = apply_creation(
        FockVector::unit(BasisState::from_string("010")), 2, cfg);
    CHECK(out.empty());
  }

  SUBCASE("mode out of range") {
    CHECK_THROWS_AS(
        apply_creation(FockVector::unit(BasisState::vacuum(3)), 4, cfg),
        std::invalid_argument);
  }
}

TEST_CASE("annihilation is the adjoint action") {
  SUBCASE("no occupied modes below") {
    const AlgebraConfig cfg{3, 0.7};
    const FockVector out = apply_annihilation(
        FockVector::unit(BasisState::from_string("010")), 2, cfg);
    CHECK(out.amplitude(BasisState::vacuum(3)) == cxd(1.0, 0.0));
  }

  SUBCASE("string phase (-e^{+i phi})^L") {
    for (double phi : {0.0, 0.4, kPi / 2.0, kPi}) {
      const AlgebraConfig cfg{3, phi};
      const FockVector out = apply_annihilation(
          FockVector::unit(BasisState::from_string("110")), 2, cfg);
      const cxd expected = -std::polar(1.0, phi);
      CHECK(std::abs(out.amplitude(BasisState::from_string("100")) - expected) <
            1e-15);
    }
  }

  SUBCASE("empty mode gives the zero vector") {
    const AlgebraConfig cfg{3, 0.7};
    CHECK(apply_annihilation(FockVector::unit(BasisState::from_string("011")),
                             1, cfg)
              .empty());
  }

  SUBCASE("matrix adjoint identity") {
    for (double phi : {0.0, 1.1, kPi}) {
      const AlgebraConfig cfg{4, phi};
      for (int mode = 1; mode <= 4; ++mode) {
        CHECK(anyonlo::testing::max_entry_diff(
                  annihilation_matrix(mode, cfg),
                  creation_matrix(mode, cfg).adjoint()) < 1e-15);
      }
    }
  }
}

TEST_CASE("deformed anti-commutation relations hold as matrix identities") {
  SUBCASE("canonical fermions") {
    const RelationReport report =
        verify_deformed_relations(AlgebraConfig{3, 0.0}, 1e-12);
    CHECK(report.passed);
    CHECK(report.max_violation() < 1e-12);
  }
  SUBCASE("hard-core bosons") {
    CHECK(verify_deformed_relations(AlgebraConfig{3, kPi}, 1e-12).passed);
  }
  SUBCASE("generic deformation") {
    CHECK(verify_deformed_relations(AlgebraConfig{4, 1.0}, 1e-12).passed);
  }
  SUBCASE("phi grid across small lattices") {
    for (int modes = 1; modes <= 4; ++modes) {
      for (double phi : {0.0, kPi / 7.0, kPi / 4.0, 1.0, kPi / 2.0,
                         3.0 * kPi / 4.0, kPi}) {
        CHECK(verify_deformed_relations(AlgebraConfig{modes, phi}, 1e-12)
                  .passed);
      }
    }
  }
  SUBCASE("resource limit") {
    CHECK_THROWS_AS(verify_deformed_relations(AlgebraConfig{9, 0.5}, 1e-12),
                    std::runtime_error);
  }
}

TEST_CASE("exclusion and number operators") {
  const AlgebraConfig cfg{3, 0.9};
  for (int mode = 1; mode <= 3; ++mode) {
    const Eigen::MatrixXcd raise = creation_matrix(mode, cfg);
    const Eigen::MatrixXcd lower = annihilation_matrix(mode, cfg);
    CHECK((raise * raise).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((lower * lower).cwiseAbs().maxCoeff() < 1e-15);

    const Eigen::MatrixXcd number = raise * lower;
    for (int r = 0; r < number.rows(); ++r) {
      for (int c = 0; c < number.cols(); ++c) {
        if (r == c) {
          const double n = number(r, c).real();
          CHECK((std::abs(n) < 1e-15 || std::abs(n - 1.0) < 1e-15));
          CHECK(std::abs(number(r, c).imag()) < 1e-15);
          // diagonal entry equals the occupation of the basis state
          const BasisState state(static_cast<std::uint32_t>(r), 3);
          CHECK(std::abs(n - state.occupation(mode)) < 1e-15);
        } else {
          CHECK(std::abs(number(r, c)) < 1e-15);
        }
      }
    }
  }
}

TEST_CASE("fock vectors accumulate, prune and convert to sector vectors") {
  FockVector v(3);
  v.accumulate(BasisState::from_string("100"), cxd(0.6, 0.0));
  v.accumulate(BasisState::from_string("001"), cxd(0.0, 0.8));
  CHECK(v.norm() == doctest::Approx(1.0));

  v.accumulate(BasisState::from_string("010"), cxd(1e-16, 0.0));
  v.prune();
  CHECK(v.amplitudes().size() == 2);

  CHECK_THROWS_AS(v.accumulate(BasisState::from_string("10"), cxd(1.0, 0.0)),
                  std::invalid_argument);

  const auto basis = enumerate_basis(3, 1);
  const Eigen::VectorXcd dense = to_sector_vector(v, basis);
  const FockVector back = from_sector_vector(dense, basis, 3);
  for (const auto& [state, amp] : v.amplitudes()) {
    CHECK(std::abs(back.amplitude(state) - amp) < 1e-15);
  }
}

TEST_CASE("algebra config validation") {
  CHECK_THROWS_AS(AlgebraConfig{0, 0.0}.validate(), std::invalid_argument);
  CHECK_THROWS_AS((AlgebraConfig{3, -0.1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((AlgebraConfig{3, kPi + 0.1}.validate()),
                  std::invalid_argument);
  CHECK_NOTHROW((AlgebraConfig{3, kPi}.validate()));
}
