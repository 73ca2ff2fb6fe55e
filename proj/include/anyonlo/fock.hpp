// Occupation-number basis and the deformed creation/annihilation algebra.
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace anyonlo {

using cxd = std::complex<double>;

// Amplitudes below this magnitude are dropped after each operation.
inline constexpr double kAmplitudeFloor = 1e-15;

// Statistical deformation of the mode algebra on a 1D lattice.
// phi = 0 gives canonical fermions, phi = pi hard-core bosons; everything
// in between is a nontrivial anyonic exchange phase.
struct AlgebraConfig {
  int modes = 1;
  double phi = 0.0;

  void validate() const;
};

// Lattice-order symbol: +1 if i < j, 0 if i == j, -1 if i > j.
int mode_order_sign(int i, int j);

// String phase (-e^{i x})^count picked up when an operator crosses
// `count` occupied modes.
cxd string_phase(int count, double x);

// Occupation bitstring over m modes, at most one particle per mode.
// Mode 1 maps to the most significant of the m stored bits, so numeric
// descending order of bits() is the ket order |1,1,0,0>, |1,0,1,0>, ...
// A state denotes the normal-ordered product a_1^dag^{n_1} ... a_m^dag^{n_m}
// applied to the vacuum.
class BasisState {
 public:
  BasisState() = default;
  BasisState(std::uint32_t bits, int modes);

  static BasisState vacuum(int modes);
  static BasisState from_string(std::string_view occupations);  // "0110"
  static BasisState from_occupations(std::span<const int> occupations);

  int modes() const { return modes_; }
  std::uint32_t bits() const { return bits_; }

  int occupation(int mode) const;  // 1-based
  BasisState with_occupation(int mode, int value) const;
  int particle_count() const;
  int occupied_below(int mode) const;           // occupied k < mode
  int occupied_between(int low, int high) const;  // occupied low < k < high

  // Occupations of the `count` consecutive modes starting at `first`,
  // packed with the window's first mode as most significant bit.
  std::uint32_t window_bits(int first, int count) const;
  BasisState with_window_bits(int first, int count, std::uint32_t value) const;

  std::string to_string() const;  // mode 1 leftmost

  friend bool operator==(const BasisState&, const BasisState&) = default;
  friend auto operator<=>(const BasisState&, const BasisState&) = default;

 private:
  void check_mode(int mode) const;

  int modes_ = 0;
  std::uint32_t bits_ = 0;
};

// Sparse statevector over the occupation basis of a fixed mode count.
// Iteration over amplitudes() follows descending bit order, i.e. the same
// order enumerate_basis produces.
class FockVector {
 public:
  using AmplitudeMap = std::map<BasisState, cxd, std::greater<BasisState>>;

  explicit FockVector(int modes);
  static FockVector unit(const BasisState& state);

  int modes() const { return modes_; }
  const AmplitudeMap& amplitudes() const { return amplitudes_; }
  bool empty() const { return amplitudes_.empty(); }

  cxd amplitude(const BasisState& state) const;
  void accumulate(const BasisState& state, cxd value);
  void add_scaled(const FockVector& other, cxd factor);
  void scale(cxd factor);

  double norm_squared() const;
  double norm() const;
  void prune(double floor = kAmplitudeFloor);

 private:
  int modes_ = 0;
  AmplitudeMap amplitudes_;
};

// All C(m, n) occupation states with n particles, in descending
// lexicographic order: (4, 2) gives |1,1,0,0>, |1,0,1,0>, |1,0,0,1>,
// |0,1,1,0>, |0,1,0,1>, |0,0,1,1>.
std::vector<BasisState> enumerate_basis(int modes, int particles);

// a_i^dag: each basis state with n_i = 0 maps to the state with n_i = 1
// times (-e^{-i phi})^L, L the number of occupied modes below i. Occupied
// states contribute zero.
FockVector apply_creation(const FockVector& v, int mode,
                          const AlgebraConfig& cfg);

// a_i: adjoint of apply_creation; phase (-e^{+i phi})^L.
FockVector apply_annihilation(const FockVector& v, int mode,
                              const AlgebraConfig& cfg);

// Dense 2^m x 2^m matrices of a_i^dag and a_i over the full Fock space,
// indexed by BasisState::bits().
Eigen::MatrixXcd creation_matrix(int mode, const AlgebraConfig& cfg);
Eigen::MatrixXcd annihilation_matrix(int mode, const AlgebraConfig& cfg);

struct RelationReport {
  double max_mixed_violation = 0.0;  // a_i a_j^dag + e^{-i phi e_ij} a_j^dag a_i - delta_ij
  double max_pair_violation = 0.0;   // a_i a_j + e^{+i phi e_ij} a_j a_i
  double tolerance = 0.0;
  bool passed = false;

  double max_violation() const;
};

// Builds every a_i, a_j^dag as a matrix and checks both deformed
// anti-commutation families entrywise. Requires modes <= 8.
RelationReport verify_deformed_relations(const AlgebraConfig& cfg,
                                         double tolerance);

// Dense view of the components of v on an ordered sector basis.
Eigen::VectorXcd to_sector_vector(const FockVector& v,
                                  std::span<const BasisState> basis);
FockVector from_sector_vector(const Eigen::VectorXcd& coefficients,
                              std::span<const BasisState> basis, int modes);

}  // namespace anyonlo
