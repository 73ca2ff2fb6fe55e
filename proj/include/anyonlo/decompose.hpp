// Beam-splitter-sequence search for two-particle sector unitaries.
#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include <Eigen/Dense>

#include "anyonlo/linear_optics.hpp"

namespace anyonlo {

struct DecompositionOptions {
  double residual_threshold = 1e-8;
  // Full pi/4 grid is enumerated while (grid points)^length stays within
  // this budget; longer sequences fall back to seeded random grid draws.
  int grid_budget = 40000;
  int refine_candidates = 8;  // best grid hits handed to the simplex
  std::uint64_t seed = 0x5eed;
};

struct DecompositionResult {
  Circuit circuit;          // best sequence found (beam-splitters only)
  double residual = 0.0;    // min over global phase of Frobenius distance
  bool found = false;       // residual below the threshold
};

// Searches ordered sequences of beam-splitters drawn from `pairs` (length
// 0..max_length) for the best phase-insensitive Frobenius match to a
// 6x6 unitary on the four-mode two-particle sector. Angles start on the
// pi/4 grid and the best candidates are polished with a derivative-free
// simplex. Ties resolve to the shorter, earlier-enumerated sequence.
DecompositionResult search_decomposition(
    const Eigen::MatrixXcd& target,
    std::span<const std::pair<int, int>> pairs, int max_length,
    const AlgebraConfig& cfg, const DecompositionOptions& options = {});

}  // namespace anyonlo
