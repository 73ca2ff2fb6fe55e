#include "anyonlo/linear_optics.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace anyonlo {

OpticalElement OpticalElement::phase_shifter(int mode, double theta) {
  return OpticalElement{ElementKind::PhaseShifter, mode, 0, theta};
}

OpticalElement OpticalElement::beam_splitter(int i, int j, double theta) {
  if (i >= j) {
    throw std::invalid_argument("beam-splitter modes must satisfy i < j");
  }
  return OpticalElement{ElementKind::BeamSplitter, i, j, theta};
}

void Circuit::validate() const {
  algebra().validate();
  for (const auto& e : elements) {
    if (e.mode_a < 1 || e.mode_a > modes) {
      throw std::invalid_argument("element mode out of range");
    }
    if (e.kind == ElementKind::BeamSplitter) {
      if (e.mode_b <= e.mode_a || e.mode_b > modes) {
        throw std::invalid_argument(
            "beam-splitter modes must satisfy 1 <= i < j <= modes");
      }
    }
  }
}

Eigen::Matrix2cd BeamSplitterBlock::coefficients() const {
  const double c = std::cos(theta);
  const cxd transfer = cxd(0.0, std::sin(theta));
  Eigen::Matrix2cd block;
  block << c, transfer * string_phase(occupied_between, phi),
      transfer * string_phase(occupied_between, -phi), c;
  return block;
}

FockVector apply_phase_shifter(const FockVector& v, int mode, double theta) {
  FockVector out(v.modes());
  for (const auto& [state, amp] : v.amplitudes()) {
    out.accumulate(state, amp * std::polar(1.0, theta * state.occupation(mode)));
  }
  return out;
}

FockVector apply_beam_splitter(const FockVector& v, int i, int j, double theta,
                               const AlgebraConfig& cfg) {
  cfg.validate();
  if (v.modes() != cfg.modes) {
    throw std::invalid_argument("vector and algebra mode counts differ");
  }
  if (i < 1 || j > cfg.modes || i >= j) {
    throw std::invalid_argument(
        "beam-splitter modes must satisfy 1 <= i < j <= modes");
  }
  FockVector out(v.modes());
  for (const auto& [state, amp] : v.amplitudes()) {
    const int ni = state.occupation(i);
    const int nj = state.occupation(j);
    if (ni == nj) {  // both empty or Pauli-blocked
      out.accumulate(state, amp);
      continue;
    }
    const BeamSplitterBlock block{state.occupied_between(i, j), theta, cfg.phi};
    const Eigen::Matrix2cd m = block.coefficients();
    const BasisState swapped =
        state.with_occupation(i, nj).with_occupation(j, ni);
    if (ni == 1) {
      out.accumulate(state, amp * m(0, 0));
      out.accumulate(swapped, amp * m(1, 0));
    } else {
      out.accumulate(state, amp * m(1, 1));
      out.accumulate(swapped, amp * m(0, 1));
    }
  }
  out.prune();
  return out;
}

FockVector apply_element(const FockVector& v, const OpticalElement& element,
                         const AlgebraConfig& cfg) {
  if (element.kind == ElementKind::PhaseShifter) {
    return apply_phase_shifter(v, element.mode_a, element.theta);
  }
  return apply_beam_splitter(v, element.mode_a, element.mode_b, element.theta,
                             cfg);
}

Eigen::MatrixXcd build_element_matrix(const OpticalElement& element,
                                      std::span<const BasisState> basis,
                                      const AlgebraConfig& cfg) {
  const long dim = static_cast<long>(basis.size());
  std::unordered_map<std::uint32_t, long> index;
  index.reserve(basis.size());
  for (long k = 0; k < dim; ++k) {
    index.emplace(basis[static_cast<std::size_t>(k)].bits(), k);
  }

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (long col = 0; col < dim; ++col) {
    const FockVector v = FockVector::unit(basis[static_cast<std::size_t>(col)]);
    FockVector image(cfg.modes);
    if (element.kind == ElementKind::PhaseShifter) {
      image = apply_creation(apply_annihilation(v, element.mode_a, cfg),
                             element.mode_a, cfg);
    } else {
      image = apply_creation(apply_annihilation(v, element.mode_b, cfg),
                             element.mode_a, cfg);
      image.add_scaled(apply_creation(apply_annihilation(v, element.mode_a, cfg),
                                      element.mode_b, cfg),
                       cxd(1.0, 0.0));
    }
    for (const auto& [state, amp] : image.amplitudes()) {
      auto it = index.find(state.bits());
      if (it == index.end()) {
        throw std::invalid_argument(
            "basis does not span the element's particle sector");
      }
      h(it->second, col) = amp;
    }
  }
  return h;
}

Eigen::VectorXcd evolve_exact(const Eigen::MatrixXcd& hamiltonian, double theta,
                              const Eigen::VectorXcd& v) {
  if (hamiltonian.rows() != hamiltonian.cols() ||
      hamiltonian.rows() != v.size()) {
    throw std::invalid_argument("hamiltonian/vector dimension mismatch");
  }
  const double defect =
      (hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-12) {
    throw std::invalid_argument("hamiltonian is not Hermitian (defect " +
                                std::to_string(defect) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
  Eigen::VectorXcd phases(hamiltonian.rows());
  for (long k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, theta * solver.eigenvalues()(k));
  }
  return solver.eigenvectors() *
         (phases.asDiagonal() * (solver.eigenvectors().adjoint() * v));
}

Eigen::MatrixXcd element_unitary_matrix(const OpticalElement& element,
                                        std::span<const BasisState> basis,
                                        const AlgebraConfig& cfg) {
  const Eigen::MatrixXcd h = build_element_matrix(element, basis, cfg);
  Eigen::MatrixXcd u(h.rows(), h.cols());
  for (long col = 0; col < h.cols(); ++col) {
    u.col(col) = evolve_exact(h, element.theta,
                              Eigen::VectorXcd::Unit(h.rows(), col));
  }
  return u;
}

FockVector run_circuit(const Circuit& circuit, const BasisState& input,
                       Engine engine) {
  circuit.validate();
  if (input.modes() != circuit.modes) {
    throw std::invalid_argument("input state length must equal circuit modes");
  }
  const AlgebraConfig cfg = circuit.algebra();

  if (engine == Engine::Analytic) {
    FockVector v = FockVector::unit(input);
    for (const auto& element : circuit.elements) {
      v = apply_element(v, element, cfg);
    }
    return v;
  }

  // Exact engine: every element is number-preserving, so the whole run
  // stays in the input's particle sector.
  const auto basis = enumerate_basis(circuit.modes, input.particle_count());
  Eigen::VectorXcd v = to_sector_vector(FockVector::unit(input), basis);
  for (const auto& element : circuit.elements) {
    const Eigen::MatrixXcd h = build_element_matrix(element, basis, cfg);
    v = evolve_exact(h, element.theta, v);
  }
  return from_sector_vector(v, basis, circuit.modes);
}

}  // namespace anyonlo
