#include "eofb/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace eofb {

namespace {

// Per-column objective contributions, cached so a two-column move only
// re-evaluates two columns.
struct ColumnEval {
  double contribution(const Vector& col, Objective obj,
                      const std::vector<SMatrix>& channels) const {
    double sq = 0.0;
    for (const SMatrix& s : channels) sq += std::norm(s.bilinear(col));
    switch (obj) {
      case Objective::AverageConcurrence:
        return std::sqrt(sq);
      case Objective::SingleChannel:
        return std::sqrt(sq);  // single channel: sqrt of its own square
      case Objective::AverageEntanglement: {
        const double p = col.squaredNorm();
        if (p <= 0.0) return 0.0;
        return p * epsilon(std::min(std::sqrt(sq) / p, 1.0));
      }
    }
    return 0.0;
  }
};

struct RestartOutcome {
  double value = 0.0;
  Matrix phi;
  bool valid_throughout = true;
};

RestartOutcome run_restart(const DensityMatrix& rho, const Matrix& w,
                           Objective obj, const std::vector<SMatrix>& channels,
                           const SearchConfig& cfg, std::uint64_t child_seed) {
  Rng rng(child_seed);
  const int dim = rho.dim();
  const int n = cfg.n_columns;

  Matrix r = random_right(dim, n, rng);
  Matrix phi = w * r;

  ColumnEval eval;
  std::vector<double> contrib(n);
  double value = 0.0;
  for (int a = 0; a < n; ++a) {
    contrib[a] = eval.contribution(phi.col(a), obj, channels);
    value += contrib[a];
  }

  const int phases = static_cast<int>(cfg.step_schedule.size());
  for (int it = 0; it < cfg.iterations; ++it) {
    const double step =
        cfg.step_schedule[std::min(phases - 1, it * phases / cfg.iterations)];

    // Random two-column rotation: the exponential of a small anti-Hermitian
    // generator supported on columns (k, l).
    int k = rng.uniform_int(n);
    int l = rng.uniform_int(n - 1);
    if (l >= k) ++l;
    const double theta = step * rng.normal();
    const double ph = 2.0 * M_PI * rng.uniform();
    const Complex e_pos(std::cos(ph), std::sin(ph));
    const double c = std::cos(theta), s = std::sin(theta);

    const Vector rk = r.col(k), rl = r.col(l);
    const Vector fk = phi.col(k), fl = phi.col(l);
    r.col(k) = c * rk + s * std::conj(e_pos) * rl;
    r.col(l) = -s * e_pos * rk + c * rl;
    phi.col(k) = c * fk + s * std::conj(e_pos) * fl;
    phi.col(l) = -s * e_pos * fk + c * fl;

    const double ck = eval.contribution(phi.col(k), obj, channels);
    const double cl = eval.contribution(phi.col(l), obj, channels);
    const double candidate = value - contrib[k] - contrib[l] + ck + cl;
    if (candidate < value) {
      value = candidate;
      contrib[k] = ck;
      contrib[l] = cl;
    } else {
      r.col(k) = rk;
      r.col(l) = rl;
      phi.col(k) = fk;
      phi.col(l) = fl;
    }
  }

  RestartOutcome out;
  // Re-evaluate from scratch so the reported value matches the decomposition
  // exactly rather than through the incremental updates.
  out.value = 0.0;
  for (int a = 0; a < n; ++a) {
    out.value += eval.contribution(phi.col(a), obj, channels);
  }
  out.phi = std::move(phi);
  out.valid_throughout =
      (out.phi * out.phi.adjoint() - rho.rho).cwiseAbs().maxCoeff() <= 1e-9;
  return out;
}

}  // namespace

RightMatrix random_right(int dim, int n, Rng& rng) {
  if (n < dim || dim < 1) {
    throw Error(ErrorKind::BadShape,
                "random_right: need n >= dim >= 1, got dim = " +
                    std::to_string(dim) + ", n = " + std::to_string(n));
  }
  const Matrix u = haar_unitary(n, rng);
  return u.topRows(dim);
}

RightMatrix random_right(int dim, int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_right(dim, n, rng);
}

SearchResult minimize_average(const DensityMatrix& rho, Objective objective,
                              const SearchConfig& cfg) {
  if (cfg.n_columns < rho.dim()) {
    throw Error(ErrorKind::BadShape,
                "minimize_average: n_columns must be >= " +
                    std::to_string(rho.dim()));
  }
  if (cfg.restarts < 1) {
    throw Error(ErrorKind::BadShape, "minimize_average: restarts must be >= 1");
  }
  std::vector<SMatrix> channels;
  if (objective == Objective::SingleChannel) {
    channels.push_back(s_ij(rho.d, cfg.channel_i, cfg.channel_j));
  } else {
    channels = s_channels(rho.d);
  }
  const Decomposition w = eigen_decomposition(rho);

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  int par = cfg.max_parallelism > 0
                ? cfg.max_parallelism
                : static_cast<int>(std::thread::hardware_concurrency());
  par = std::max(1, std::min(par, cfg.restarts));

  if (par == 1) {
    for (int rs = 0; rs < cfg.restarts; ++rs) {
      outcomes[rs] = run_restart(rho, w.phi, objective, channels, cfg,
                                 mix_seed(cfg.seed, rs));
    }
  } else {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (;;) {
        const int rs = next.fetch_add(1);
        if (rs >= cfg.restarts) break;
        outcomes[rs] = run_restart(rho, w.phi, objective, channels, cfg,
                                   mix_seed(cfg.seed, rs));
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < par; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const RestartOutcome& oc : outcomes) {
    if (!oc.valid_throughout) {
      throw Error(ErrorKind::Internal,
                  "minimize_average: sampled decomposition failed to "
                  "reconstruct rho");
    }
  }

  SearchResult res;
  int best = 0;
  res.restart_best.resize(cfg.restarts);
  res.best_trace.resize(cfg.restarts);
  double running = outcomes[0].value;
  for (int rs = 0; rs < cfg.restarts; ++rs) {
    res.restart_best[rs] = outcomes[rs].value;
    if (outcomes[rs].value < outcomes[best].value) best = rs;
    running = std::min(running, outcomes[rs].value);
    res.best_trace[rs] = running;
  }
  res.best_value = outcomes[best].value;
  res.best_decomposition = Decomposition{std::move(outcomes[best].phi)};
  return res;
}

GapExperiment bound_gap_experiment(const DensityMatrix& rho,
                                   const SearchConfig& cfg) {
  GapExperiment ge;
  ge.bounds = cdb_bound(rho);
  ge.search = minimize_average(rho, Objective::AverageConcurrence, cfg);
  ge.empirical_c = ge.search.best_value;
  ge.gap = ge.empirical_c - ge.bounds.c_db;
  ge.sound = ge.gap >= -1e-6;
  const ChannelSums sums =
      average_concurrence(ge.search.best_decomposition, s_channels(rho.d));
  ge.best_channel_sums = sums.per_channel;
  return ge;
}

}  // namespace eofb
