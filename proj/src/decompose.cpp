#include "anyonlo/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <gsl/gsl_multimin.h>

namespace anyonlo {

namespace {

constexpr int kGridPoints = 8;  // multiples of pi/4 over one period

// Distance ||target - e^{i phase} candidate||_F minimized over the phase.
double phase_free_distance(const Eigen::MatrixXcd& target,
                           const Eigen::MatrixXcd& candidate) {
  const double overlap = std::abs((target.adjoint() * candidate).trace());
  const double squared = target.squaredNorm() + candidate.squaredNorm() -
                         2.0 * overlap;
  return std::sqrt(std::max(0.0, squared));
}

struct SearchContext {
  std::span<const std::pair<int, int>> pairs;
  std::vector<BasisState> basis;
  AlgebraConfig cfg;
  Eigen::MatrixXcd target;
};

// Sector matrix of one beam-splitter, one analytic-engine run per column.
Eigen::MatrixXcd element_matrix_analytic(const SearchContext& ctx, int pair,
                                         double theta) {
  const auto [i, j] = ctx.pairs[static_cast<std::size_t>(pair)];
  Eigen::MatrixXcd u(6, 6);
  for (int col = 0; col < 6; ++col) {
    const FockVector out = apply_beam_splitter(
        FockVector::unit(ctx.basis[static_cast<std::size_t>(col)]), i, j,
        theta, ctx.cfg);
    u.col(col) = to_sector_vector(out, ctx.basis);
  }
  return u;
}

double residual_for(const SearchContext& ctx, std::span<const int> sequence,
                    std::span<const double> angles) {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(6, 6);
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    u = element_matrix_analytic(ctx, sequence[k], angles[k]) * u;
  }
  return phase_free_distance(ctx.target, u);
}

struct GslObjective {
  const SearchContext* ctx;
  const std::vector<int>* sequence;
};

double gsl_objective(const gsl_vector* x, void* params) {
  const auto* obj = static_cast<const GslObjective*>(params);
  std::vector<double> angles(obj->sequence->size());
  for (std::size_t k = 0; k < angles.size(); ++k) {
    angles[k] = gsl_vector_get(x, k);
  }
  return residual_for(*obj->ctx, *obj->sequence, angles);
}

// Nelder-Mead polish of one candidate's angles.
double refine_angles(const SearchContext& ctx, const std::vector<int>& sequence,
                     std::vector<double>& angles) {
  if (angles.empty()) return residual_for(ctx, sequence, angles);

  GslObjective objective{&ctx, &sequence};
  gsl_multimin_function f;
  f.n = angles.size();
  f.f = &gsl_objective;
  f.params = &objective;

  gsl_vector* x = gsl_vector_alloc(angles.size());
  gsl_vector* step = gsl_vector_alloc(angles.size());
  for (std::size_t k = 0; k < angles.size(); ++k) {
    gsl_vector_set(x, k, angles[k]);
    gsl_vector_set(step, k, std::numbers::pi / 16.0);
  }
  gsl_multimin_fminimizer* minimizer = gsl_multimin_fminimizer_alloc(
      gsl_multimin_fminimizer_nmsimplex2, angles.size());
  gsl_multimin_fminimizer_set(minimizer, &f, x, step);

  double best = residual_for(ctx, sequence, angles);
  for (int iter = 0; iter < 2500; ++iter) {
    if (gsl_multimin_fminimizer_iterate(minimizer) != 0) break;
    if (minimizer->fval < best) {
      best = minimizer->fval;
      for (std::size_t k = 0; k < angles.size(); ++k) {
        angles[k] = gsl_vector_get(minimizer->x, k);
      }
    }
    if (gsl_multimin_fminimizer_size(minimizer) < 1e-13 || best < 1e-13) break;
  }

  gsl_multimin_fminimizer_free(minimizer);
  gsl_vector_free(step);
  gsl_vector_free(x);
  return best;
}

struct Candidate {
  std::vector<int> sequence;
  std::vector<double> angles;
  double residual = 0.0;
};

// Walks the full pi/4 grid for one sequence, reusing prefix products.
void grid_search(const SearchContext& ctx,
                 const std::vector<Eigen::MatrixXcd>& grid_matrices,
                 const std::vector<int>& sequence, std::size_t position,
                 const Eigen::MatrixXcd& prefix, std::vector<int>& choice,
                 Candidate& best) {
  if (position == sequence.size()) {
    const double r = phase_free_distance(ctx.target, prefix);
    if (r < best.residual) {
      best.residual = r;
      best.sequence = sequence;
      best.angles.resize(choice.size());
      for (std::size_t k = 0; k < choice.size(); ++k) {
        best.angles[k] = choice[k] * std::numbers::pi / 4.0;
      }
    }
    return;
  }
  const int pair = sequence[position];
  for (int g = 0; g < kGridPoints; ++g) {
    choice[position] = g;
    const Eigen::MatrixXcd& step =
        grid_matrices[static_cast<std::size_t>(pair * kGridPoints + g)];
    grid_search(ctx, grid_matrices, sequence, position + 1, step * prefix,
                choice, best);
  }
}

}  // namespace

DecompositionResult search_decomposition(
    const Eigen::MatrixXcd& target, std::span<const std::pair<int, int>> pairs,
    int max_length, const AlgebraConfig& cfg,
    const DecompositionOptions& options) {
  cfg.validate();
  if (cfg.modes != 4) {
    throw std::invalid_argument("decomposition search works on four modes");
  }
  if (target.rows() != 6 || target.cols() != 6) {
    throw std::invalid_argument(
        "target must act on the 6-dimensional two-particle sector");
  }
  if (pairs.empty()) {
    throw std::invalid_argument("at least one beam-splitter pair is required");
  }
  for (const auto& [i, j] : pairs) {
    if (i < 1 || j > cfg.modes || i >= j) {
      throw std::invalid_argument("invalid beam-splitter pair");
    }
  }
  if (max_length < 0) {
    throw std::invalid_argument("max_length must be nonnegative");
  }

  SearchContext ctx{pairs, enumerate_basis(4, 2), cfg, target};

  // element unitaries at the pi/4 grid angles, shared by every sequence
  std::vector<Eigen::MatrixXcd> grid_matrices;
  grid_matrices.reserve(pairs.size() * kGridPoints);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (int g = 0; g < kGridPoints; ++g) {
      grid_matrices.push_back(element_matrix_analytic(
          ctx, static_cast<int>(p), g * std::numbers::pi / 4.0));
    }
  }

  std::mt19937_64 rng(options.seed);
  auto random_grid_angle = [&rng]() {
    return static_cast<int>(rng() % kGridPoints);
  };

  std::vector<Candidate> shortlist;
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(6, 6);

  std::vector<int> sequence;
  // lengths in increasing order; sequences in lexicographic pair order
  for (int length = 0; length <= max_length; ++length) {
    sequence.assign(static_cast<std::size_t>(length), 0);
    bool more = true;
    while (more) {
      Candidate best_here;
      best_here.sequence = sequence;
      best_here.angles.assign(static_cast<std::size_t>(length), 0.0);
      best_here.residual = residual_for(ctx, sequence, best_here.angles);

      double grid_cost = 1.0;
      for (int k = 0; k < length; ++k) grid_cost *= kGridPoints;
      if (grid_cost <= options.grid_budget) {
        std::vector<int> choice(static_cast<std::size_t>(length), 0);
        grid_search(ctx, grid_matrices, sequence, 0, identity, choice,
                    best_here);
      } else {
        // seeded random draws from the same grid
        std::vector<double> angles(static_cast<std::size_t>(length));
        for (int draw = 0; draw < options.grid_budget; ++draw) {
          for (auto& a : angles) {
            a = random_grid_angle() * std::numbers::pi / 4.0;
          }
          const double r = residual_for(ctx, sequence, angles);
          if (r < best_here.residual) {
            best_here.residual = r;
            best_here.angles = angles;
          }
        }
      }
      shortlist.push_back(std::move(best_here));

      // next sequence (odometer over pair indices)
      more = false;
      for (int k = length - 1; k >= 0; --k) {
        if (++sequence[static_cast<std::size_t>(k)] <
            static_cast<int>(pairs.size())) {
          more = true;
          break;
        }
        sequence[static_cast<std::size_t>(k)] = 0;
      }
    }
  }

  // polish the most promising grid hits; stable sort keeps the
  // shorter/earlier sequence ahead on ties
  std::stable_sort(shortlist.begin(), shortlist.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.residual < b.residual;
                   });
  const std::size_t refine_count = std::min<std::size_t>(
      shortlist.size(), static_cast<std::size_t>(options.refine_candidates));

  Candidate best;
  best.residual = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < refine_count; ++k) {
    Candidate candidate = shortlist[k];
    candidate.residual = refine_angles(ctx, candidate.sequence,
                                       candidate.angles);
    const bool better =
        candidate.residual < best.residual ||
        (candidate.residual == best.residual &&
         candidate.sequence.size() < best.sequence.size());
    if (better) best = std::move(candidate);
    if (best.residual < 1e-12) break;
  }

  DecompositionResult result;
  result.circuit.modes = cfg.modes;
  result.circuit.phi = cfg.phi;
  for (std::size_t k = 0; k < best.sequence.size(); ++k) {
    const auto [i, j] =
        pairs[static_cast<std::size_t>(best.sequence[k])];
    result.circuit.elements.push_back(
        OpticalElement::beam_splitter(i, j, best.angles[k]));
  }
  result.residual = best.residual;
  result.found = best.residual < options.residual_threshold;
  return result;
}

}  // namespace anyonlo
