#pragma once

#include <cstdint>
#include <vector>

#include "eofb/decomposition.hpp"

namespace eofb {

enum class Objective {
  AverageConcurrence,   // sum_a p_a Con(Psi_a), all channels
  AverageEntanglement,  // sum_a p_a epsilon(Con(Psi_a)), bits
  SingleChannel,        // sum_a |phi~_a S_ij phi_a| for one channel
};

struct SearchConfig {
  int n_columns = 12;
  int restarts = 16;
  int iterations = 2000;
  std::uint64_t seed = 1;
  std::vector<double> step_schedule = {0.5, 0.2, 0.08, 0.03, 0.012, 0.005};
  int max_parallelism = 0;  // 0 = hardware concurrency
  // For Objective::SingleChannel.
  int channel_i = 1, channel_j = 2;
};

struct SearchResult {
  double best_value = 0.0;
  Decomposition best_decomposition;
  std::vector<double> restart_best;  // final best per restart, index order
  std::vector<double> best_trace;    // running minimum over restarts
};

/// 2d x n matrix with orthonormal rows, drawn as the leading rows of a
/// Haar-distributed n x n unitary. Requires n >= dim (BadShape).
RightMatrix random_right(int dim, int n, std::uint64_t seed);
RightMatrix random_right(int dim, int n, Rng& rng);

/// Stochastic minimization of the chosen average over decompositions
/// phi = W R, moving R by small random two-column rotations (exponentials of
/// sparse anti-Hermitian generators, which keep RR† = I exactly). Restarts
/// draw child seeds from (seed, restart index) and merge by minimum value
/// with ties to the lowest index, so results are reproducible bit-for-bit at
/// any parallelism level.
SearchResult minimize_average(const DensityMatrix& rho, Objective objective,
                              const SearchConfig& cfg);

/// Empirical-versus-closed-form comparison for one state: c_db, the best
/// sampled average concurrence, their gap, and the per-channel sums of the
/// best decomposition found.
struct GapExperiment {
  BoundReport bounds;
  SearchResult search;
  std::vector<double> best_channel_sums;
  double empirical_c = 0.0;
  double gap = 0.0;
  bool sound = false;  // gap >= -1e-6
};

GapExperiment bound_gap_experiment(const DensityMatrix& rho,
                                   const SearchConfig& cfg);

}  // namespace eofb
