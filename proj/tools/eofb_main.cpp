// eofb: entanglement-of-formation bounds for qubit-qudit density matrices.
//
// Subcommands:
//   analyze   closed-form bound report for a density-matrix file
//   random    generate a seeded random density-matrix file
//   verify    stochastic-search check of the bounds for one state
//   ensemble  batch bound reports over random states, CSV output
//
// Exit codes: 0 ok, 2 invalid input, 3 I/O error, 4 soundness violation.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eofb/io.hpp"
#include "eofb/search.hpp"

namespace {

using namespace eofb;

constexpr std::uint64_t kDefaultSeed = 12345;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::IoError:
      return 3;
    default:
      return 2;
  }
}

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
  if (const char* env = std::getenv("EOFB_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw Error(ErrorKind::ParseError,
                  std::string("EOFB_SEED is not an integer: ") + env);
    }
  }
  return fallback;
}

SearchConfig budget_preset(const std::string& name) {
  SearchConfig cfg;
  if (name == "quick") {
    cfg.n_columns = 9;
    cfg.restarts = 6;
    cfg.iterations = 500;
  } else if (name == "default") {
    cfg.n_columns = 12;
    cfg.restarts = 16;
    cfg.iterations = 2000;
  } else if (name == "thorough") {
    cfg.n_columns = 16;
    cfg.restarts = 32;
    cfg.iterations = 6000;
  } else {
    throw Error(ErrorKind::ParseError,
                "unknown budget preset '" + name +
                    "' (expected quick|default|thorough)");
  }
  return cfg;
}

int cmd_analyze(const std::string& input, double tol,
                const std::string& format, const std::string& out_path) {
  const std::string bytes = read_file(input);
  const MatrixFile mf = parse_matrix_json(bytes);
  const DensityMatrix rho = to_density(mf, tol);
  const BoundReport rep = cdb_bound(rho, tol);

  std::string text;
  if (format == "csv") {
    text = write_report_csv(rep);
  } else if (format == "json") {
    text = write_report_json(rep, fnv1a64(bytes), tol, mf.label);
  } else {
    throw Error(ErrorKind::ParseError,
                "unknown format '" + format + "' (expected json|csv)");
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return 0;
}

int cmd_random(int d, int rank, std::uint64_t seed, bool separable,
               const std::string& out_path) {
  DensityMatrix rho =
      separable ? random_separable(d, 4 * d, seed) : random_density(d, rank, seed);
  MatrixFile mf;
  mf.d = d;
  mf.matrix = rho.rho;
  mf.label = (separable ? std::string("random-separable d=")
                        : "random d=" ) +
             std::to_string(d) +
             (separable ? "" : " rank=" + std::to_string(rank)) +
             " seed=" + std::to_string(seed);
  write_file(out_path, write_matrix_json(mf));
  return 0;
}

int cmd_verify(const std::string& input, const std::string& budget,
               std::uint64_t seed, bool inject_violation) {
  const std::string bytes = read_file(input);
  const MatrixFile mf = parse_matrix_json(bytes);
  const DensityMatrix rho = to_density(mf, kDefaultTol);

  SearchConfig cfg = budget_preset(budget);
  cfg.seed = seed;
  if (cfg.n_columns < rho.dim()) cfg.n_columns = 2 * rho.dim();

  GapExperiment ge = bound_gap_experiment(rho, cfg);
  BoundReport bounds = ge.bounds;
  if (inject_violation) {
    // Negative-path hook: pretend the bounds were larger than they are so the
    // soundness comparison trips.
    for (double& c : bounds.c_ij) c += 0.5;
    bounds.c_db += 0.5;
  }

  std::cout << "input: " << input << " (d = " << rho.d << ", mode "
            << (bounds.mode == BoundMode::ExactTwoQubit ? "exact-two-qubit"
                                                        : "lower-bound")
            << ")\n";
  std::cout << "c_db        = " << format_double(bounds.c_db) << "\n";
  std::cout << "empirical_c = " << format_double(ge.empirical_c) << "\n";
  std::cout << "gap         = " << format_double(ge.empirical_c - bounds.c_db)
            << "\n";

  bool violated = ge.empirical_c < bounds.c_db - 1e-6;
  const std::vector<SMatrix> channels = s_channels(rho.d);
  for (std::size_t c = 0; c < channels.size(); ++c) {
    SearchConfig ch_cfg = cfg;
    ch_cfg.channel_i = channels[c].i;
    ch_cfg.channel_j = channels[c].j;
    ch_cfg.seed = mix_seed(seed, 1000 + c);
    const SearchResult sr =
        minimize_average(rho, Objective::SingleChannel, ch_cfg);
    const double bound = bounds.c_ij[c];
    const double residual = sr.best_value - bound;
    if (residual < -1e-6) violated = true;
    std::cout << "channel (" << channels[c].i << "," << channels[c].j
              << "): bound = " << format_double(bound)
              << "  oracle = " << format_double(sr.best_value)
              << "  residual = " << format_double(residual) << "\n";
  }
  if (violated) {
    std::cout << "soundness: VIOLATION (sampled decomposition beats a bound "
                 "by more than 1e-6)\n";
    return 4;
  }
  std::cout << "soundness: ok\n";
  return 0;
}

int cmd_ensemble(int d, int count, int rank, std::uint64_t seed, bool verify,
                 const std::string& out_path) {
  if (count < 1) {
    throw Error(ErrorKind::ParseError, "ensemble: count must be >= 1");
  }
  std::string csv = ensemble_csv_header(d, verify);
  for (int idx = 0; idx < count; ++idx) {
    const std::uint64_t row_seed = mix_seed(seed, idx);
    const DensityMatrix rho = random_density(d, rank, row_seed);
    const BoundReport rep = cdb_bound(rho);
    double empirical = 0.0, gap = 0.0;
    if (verify) {
      SearchConfig cfg = budget_preset("quick");
      cfg.seed = row_seed;
      if (cfg.n_columns < rho.dim()) cfg.n_columns = 2 * rho.dim();
      GapExperiment ge = bound_gap_experiment(rho, cfg);
      empirical = ge.empirical_c;
      gap = ge.gap;
    }
    csv += ensemble_csv_row(idx, rank, rep, verify, empirical, gap);
  }
  write_file(out_path, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement-of-formation bounds for qubit-qudit states"};
  app.require_subcommand(1);

  // analyze
  std::string an_input, an_format = "json", an_out;
  double an_tol = kDefaultTol;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "closed-form bound report for a density-matrix file");
  analyze->add_option("--input", an_input, "density-matrix JSON file")
      ->required();
  analyze->add_option("--tol", an_tol, "validation tolerance")->capture_default_str();
  analyze->add_option("--format", an_format, "json|csv")->capture_default_str();
  analyze->add_option("--out", an_out, "output path (stdout when omitted)");

  // random
  int rd_d = 3, rd_rank = 0;
  std::uint64_t rd_seed = 0;
  bool rd_separable = false;
  std::string rd_out;
  CLI::App* random_cmd =
      app.add_subcommand("random", "generate a random density-matrix file");
  random_cmd->add_option("--d", rd_d, "qudit dimension")->required();
  random_cmd->add_option("--rank", rd_rank, "rank (default 2d)");
  random_cmd->add_option("--seed", rd_seed,
                         "RNG seed (default EOFB_SEED or 12345)");
  random_cmd->add_flag("--separable", rd_separable,
                       "mixture of random product states");
  random_cmd->add_option("--out", rd_out, "output path")->required();

  // verify
  std::string vf_input, vf_budget = "default";
  std::uint64_t vf_seed = 0;
  bool vf_inject = false;
  CLI::App* verify =
      app.add_subcommand("verify", "stochastic-search soundness check");
  verify->add_option("--input", vf_input, "density-matrix JSON file")
      ->required();
  verify->add_option("--budget", vf_budget, "quick|default|thorough")->capture_default_str();
  verify->add_option("--seed", vf_seed,
                     "RNG seed (default EOFB_SEED or 12345)");
  verify
      ->add_flag("--inject-bound-violation", vf_inject,
                 "testing hook: force the soundness comparison to fail")
      ->group("");

  // ensemble
  int en_d = 3, en_count = 0, en_rank = 0;
  std::uint64_t en_seed = 0;
  bool en_verify = false;
  std::string en_out;
  CLI::App* ensemble =
      app.add_subcommand("ensemble", "batch bound reports, CSV output");
  ensemble->add_option("--d", en_d, "qudit dimension")->required();
  ensemble->add_option("--count", en_count, "number of states")->required();
  ensemble->add_option("--rank", en_rank, "rank (default 2d)");
  ensemble->add_option("--seed", en_seed,
                       "RNG seed (default EOFB_SEED or 12345)");
  ensemble->add_flag("--verify", en_verify,
                     "add empirical_c and gap columns (quick budget)");
  ensemble->add_option("--out", en_out, "output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      return cmd_analyze(an_input, an_tol, an_format, an_out);
    }
    if (*random_cmd) {
      if (rd_rank == 0) rd_rank = 2 * rd_d;
      const std::uint64_t seed =
          random_cmd->count("--seed") ? rd_seed : seed_from_env_or(kDefaultSeed);
      return cmd_random(rd_d, rd_rank, seed, rd_separable, rd_out);
    }
    if (*verify) {
      const std::uint64_t seed =
          verify->count("--seed") ? vf_seed : seed_from_env_or(kDefaultSeed);
      return cmd_verify(vf_input, vf_budget, seed, vf_inject);
    }
    if (*ensemble) {
      if (en_rank == 0) en_rank = 2 * en_d;
      const std::uint64_t seed =
          ensemble->count("--seed") ? en_seed : seed_from_env_or(kDefaultSeed);
      return cmd_ensemble(en_d, en_count, en_rank, seed, en_verify, en_out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
