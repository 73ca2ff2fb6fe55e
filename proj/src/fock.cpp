#include "anyonlo/fock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anyonlo {

namespace {

constexpr int kMaxModes = 24;

void check_mode_count(int modes) {
  if (modes < 0 || modes > kMaxModes) {
    throw std::invalid_argument("mode count must be in [0, " +
                                std::to_string(kMaxModes) + "], got " +
                                std::to_string(modes));
  }
}

}  // namespace

void AlgebraConfig::validate() const {
  if (modes < 1) {
    throw std::invalid_argument("algebra needs at least one mode");
  }
  check_mode_count(modes);
  if (!(phi >= 0.0 && phi <= std::numbers::pi)) {
    throw std::invalid_argument("statistical angle must lie in [0, pi]");
  }
}

int mode_order_sign(int i, int j) { return (i < j) - (i > j); }

cxd string_phase(int count, double x) {
  const double sign = (count % 2 == 0) ? 1.0 : -1.0;
  return sign * std::polar(1.0, x * count);
}

BasisState::BasisState(std::uint32_t bits, int modes) : modes_(modes), bits_(bits) {
  check_mode_count(modes);
  if (modes < 32 && (bits >> modes) != 0) {
    throw std::invalid_argument("occupation bits exceed the mode count");
  }
}

BasisState BasisState::vacuum(int modes) { return BasisState(0, modes); }

BasisState BasisState::from_string(std::string_view occupations) {
  std::uint32_t bits = 0;
  for (char c : occupations) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("occupation string must contain only 0/1");
    }
    bits = (bits << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return BasisState(bits, static_cast<int>(occupations.size()));
}

BasisState BasisState::from_occupations(std::span<const int> occupations) {
  std::uint32_t bits = 0;
  for (int n : occupations) {
    if (n != 0 && n != 1) {
      throw std::invalid_argument("occupations must be 0 or 1");
    }
    bits = (bits << 1) | static_cast<std::uint32_t>(n);
  }
  return BasisState(bits, static_cast<int>(occupations.size()));
}

void BasisState::check_mode(int mode) const {
  if (mode < 1 || mode > modes_) {
    throw std::invalid_argument("mode index " + std::to_string(mode) +
                                " out of range 1.." + std::to_string(modes_));
  }
}

int BasisState::occupation(int mode) const {
  check_mode(mode);
  return static_cast<int>((bits_ >> (modes_ - mode)) & 1u);
}

BasisState BasisState::with_occupation(int mode, int value) const {
  check_mode(mode);
  const std::uint32_t mask = 1u << (modes_ - mode);
  BasisState out = *this;
  out.bits_ = value ? (bits_ | mask) : (bits_ & ~mask);
  return out;
}

int BasisState::particle_count() const { return std::popcount(bits_); }

int BasisState::occupied_below(int mode) const {
  check_mode(mode);
  return std::popcount(bits_ >> (modes_ - mode + 1));
}

int BasisState::occupied_between(int low, int high) const {
  check_mode(low);
  check_mode(high);
  if (low >= high) {
    throw std::invalid_argument("occupied_between needs low < high");
  }
  const int width = high - low - 1;
  if (width == 0) return 0;
  const std::uint32_t mask = ((1u << width) - 1) << (modes_ - high + 1);
  return std::popcount(bits_ & mask);
}

std::uint32_t BasisState::window_bits(int first, int count) const {
  check_mode(first);
  check_mode(first + count - 1);
  return (bits_ >> (modes_ - first - count + 1)) & ((1u << count) - 1);
}

BasisState BasisState::with_window_bits(int first, int count,
                                        std::uint32_t value) const {
  check_mode(first);
  check_mode(first + count - 1);
  if (value >> count) {
    throw std::invalid_argument("window value exceeds window width");
  }
  const int shift = modes_ - first - count + 1;
  const std::uint32_t mask = ((1u << count) - 1) << shift;
  BasisState out = *this;
  out.bits_ = (bits_ & ~mask) | (value << shift);
  return out;
}

std::string BasisState::to_string() const {
  std::string s(static_cast<std::size_t>(modes_), '0');
  for (int mode = 1; mode <= modes_; ++mode) {
    s[static_cast<std::size_t>(mode - 1)] =
        static_cast<char>('0' + occupation(mode));
  }
  return s;
}

FockVector::FockVector(int modes) : modes_(modes) { check_mode_count(modes); }

FockVector FockVector::unit(const BasisState& state) {
  FockVector v(state.modes());
  v.accumulate(state, cxd(1.0, 0.0));
  return v;
}

cxd FockVector::amplitude(const BasisState& state) const {
  auto it = amplitudes_.find(state);
  return it == amplitudes_.end() ? cxd(0.0, 0.0) : it->second;
}

void FockVector::accumulate(const BasisState& state, cxd value) {
  if (state.modes() != modes_) {
    throw std::invalid_argument("basis state has wrong mode count");
  }
  amplitudes_[state] += value;
}

void FockVector::add_scaled(const FockVector& other, cxd factor) {
  if (other.modes_ != modes_) {
    throw std::invalid_argument("mode count mismatch");
  }
  for (const auto& [state, amp] : other.amplitudes_) {
    amplitudes_[state] += factor * amp;
  }
}

void FockVector::scale(cxd factor) {
  for (auto& [state, amp] : amplitudes_) amp *= factor;
}

double FockVector::norm_squared() const {
  double total = 0.0;
  for (const auto& [state, amp] : amplitudes_) total += std::norm(amp);
  return total;
}

double FockVector::norm() const { return std::sqrt(norm_squared()); }

void FockVector::prune(double floor) {
  std::erase_if(amplitudes_,
                [floor](const auto& kv) { return std::abs(kv.second) < floor; });
}

std::vector<BasisState> enumerate_basis(int modes, int particles) {
  check_mode_count(modes);
  if (particles < 0 || particles > modes) {
    throw std::invalid_argument("particle count must be in [0, modes]");
  }
  // Start from the largest bitstring (all particles leftmost) and walk the
  // permutations downward; this is exactly descending lexicographic order.
  std::vector<int> occ(static_cast<std::size_t>(modes), 0);
  std::fill_n(occ.begin(), particles, 1);
  std::vector<BasisState> basis;
  do {
    basis.push_back(BasisState::from_occupations(occ));
  } while (std::prev_permutation(occ.begin(), occ.end()));
  return basis;
}

FockVector apply_creation(const FockVector& v, int mode,
                          const AlgebraConfig& cfg) {
  cfg.validate();
  if (v.modes() != cfg.modes) {
    throw std::invalid_argument("vector and algebra mode counts differ");
  }
  FockVector out(v.modes());
  for (const auto& [state, amp] : v.amplitudes()) {
    if (state.occupation(mode) == 1) continue;  // exclusion
    const int below = state.occupied_below(mode);
    out.accumulate(state.with_occupation(mode, 1),
                   amp * string_phase(below, -cfg.phi));
  }
  out.prune();
  return out;
}

FockVector apply_annihilation(const FockVector& v, int mode,
                              const AlgebraConfig& cfg) {
  cfg.validate();
  if (v.modes() != cfg.modes) {
    throw std::invalid_argument("vector and algebra mode counts differ");
  }
  FockVector out(v.modes());
  for (const auto& [state, amp] : v.amplitudes()) {
    if (state.occupation(mode) == 0) continue;
    const int below = state.occupied_below(mode);
    out.accumulate(state.with_occupation(mode, 0),
                   amp * string_phase(below, cfg.phi));
  }
  out.prune();
  return out;
}

namespace {

Eigen::MatrixXcd full_space_matrix(int mode, const AlgebraConfig& cfg,
                                   bool creation) {
  cfg.validate();
  const int dim = 1 << cfg.modes;
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const BasisState state(static_cast<std::uint32_t>(col), cfg.modes);
    const FockVector image =
        creation ? apply_creation(FockVector::unit(state), mode, cfg)
                 : apply_annihilation(FockVector::unit(state), mode, cfg);
    for (const auto& [out_state, amp] : image.amplitudes()) {
      op(static_cast<int>(out_state.bits()), col) = amp;
    }
  }
  return op;
}

}  // namespace

Eigen::MatrixXcd creation_matrix(int mode, const AlgebraConfig& cfg) {
  return full_space_matrix(mode, cfg, true);
}

Eigen::MatrixXcd annihilation_matrix(int mode, const AlgebraConfig& cfg) {
  return full_space_matrix(mode, cfg, false);
}

double RelationReport::max_violation() const {
  return std::max(max_mixed_violation, max_pair_violation);
}

RelationReport verify_deformed_relations(const AlgebraConfig& cfg,
                                         double tolerance) {
  cfg.validate();
  if (cfg.modes > 8) {
    throw std::runtime_error(
        "deformed-relation check builds 2^m operators; modes must be <= 8");
  }
  const int dim = 1 << cfg.modes;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);

  std::vector<Eigen::MatrixXcd> lower(static_cast<std::size_t>(cfg.modes));
  std::vector<Eigen::MatrixXcd> raise(static_cast<std::size_t>(cfg.modes));
  for (int i = 1; i <= cfg.modes; ++i) {
    lower[static_cast<std::size_t>(i - 1)] = annihilation_matrix(i, cfg);
    raise[static_cast<std::size_t>(i - 1)] = creation_matrix(i, cfg);
  }

  RelationReport report;
  report.tolerance = tolerance;
  for (int i = 1; i <= cfg.modes; ++i) {
    const auto& ai = lower[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= cfg.modes; ++j) {
      const auto& aj = lower[static_cast<std::size_t>(j - 1)];
      const auto& aj_dag = raise[static_cast<std::size_t>(j - 1)];
      const cxd twist =
          std::polar(1.0, -cfg.phi * mode_order_sign(i, j));
      Eigen::MatrixXcd mixed = ai * aj_dag + twist * aj_dag * ai;
      if (i == j) mixed -= id;
      const Eigen::MatrixXcd pair =
          ai * aj + std::conj(twist) * aj * ai;
      report.max_mixed_violation =
          std::max(report.max_mixed_violation, mixed.cwiseAbs().maxCoeff());
      report.max_pair_violation =
          std::max(report.max_pair_violation, pair.cwiseAbs().maxCoeff());
    }
  }
  report.passed = report.max_violation() < tolerance;
  return report;
}

Eigen::VectorXcd to_sector_vector(const FockVector& v,
                                  std::span<const BasisState> basis) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<long>(basis.size()));
  for (long k = 0; k < out.size(); ++k) {
    out(k) = v.amplitude(basis[static_cast<std::size_t>(k)]);
  }
  return out;
}

FockVector from_sector_vector(const Eigen::VectorXcd& coefficients,
                              std::span<const BasisState> basis, int modes) {
  if (coefficients.size() != static_cast<long>(basis.size())) {
    throw std::invalid_argument("coefficient/basis size mismatch");
  }
  FockVector v(modes);
  for (long k = 0; k < coefficients.size(); ++k) {
    v.accumulate(basis[static_cast<std::size_t>(k)], coefficients(k));
  }
  v.prune();
  return v;
}

}  // namespace anyonlo
