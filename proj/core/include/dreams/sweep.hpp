#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dreams/policies.hpp"
#include "dreams/simulator.hpp"
#include "dreams/worldgen.hpp"

namespace dreams {

// Full experimental grid: algorithms x noise x alpha x worlds x seeds.
struct SweepConfig {
    std::vector<WorldKind> kinds = {WorldKind::Forest, WorldKind::Desert};
    int worlds_per_kind = 20;
    double width_m = 100.0;
    double height_m = 100.0;
    double resolution_m = 0.4;
    double vertex_spacing_m = kDefaultVertexSpacing;
    std::uint64_t world_seed_base = 1000;

    std::vector<double> etas = {kEtaLow, kEtaMed, kEtaHigh};
    double p_min = 0.6;
    std::vector<double> alphas = {1.0, 10.0, 20.0};
    std::vector<Algorithm> algorithms = {Algorithm::DreamsFixed, Algorithm::DreamsAdaptive,
                                         Algorithm::Drps, Algorithm::SampledAstar,
                                         Algorithm::Direct};
    int seeds_per_cell = 10;

    // Ablation axes: every combination is run, so single-element vectors
    // reduce to a plain sweep.
    std::vector<int> n_plans = {100};
    std::vector<int> n_eval_worlds = {10000};
    double cvar_fraction = 0.75;

    std::string out;          // CSV path; episode logs go to <out_dir>/episodes
    bool episode_logs = true;
    int jobs = 1;

    void validate() const;  // throws InvalidConfig
};

// "low" / "med" / "high" or a plain float.
double parse_noise_level(const std::string& s);

SweepConfig sweep_config_from_json(const std::string& json_text);
std::string sweep_config_to_json(const SweepConfig& config);

struct ResultRow {
    int world_id = 0;
    WorldKind kind = WorldKind::Forest;
    Algorithm algorithm = Algorithm::DreamsFixed;
    double eta = 0.0;
    double alpha = 0.0;
    int seed = 0;
    int n_plans = 0;
    int n_eval_worlds = 0;
    double traversal_time = 0.0;
    double collision_cost = 0.0;
    double total_cost = 0.0;
    double oracle_time = 0.0;
    double suboptimality = 0.0;
    int collisions = 0;
    int steps = 0;
    double proposer_seconds = 0.0;
    double acceptor_seconds = 0.0;
    std::string status = "ok";  // ok | timeout | no_plan
};

std::string result_csv_header();
std::string result_row_to_csv(const ResultRow& row);
std::vector<ResultRow> load_result_csv(const std::string& path);  // ParseError with line numbers

// Deterministic per-cell episode seed.
std::uint64_t cell_seed(WorldKind kind, int world_id, double eta, double alpha,
                        Algorithm algorithm, int seed_index, int n_plans, int n_eval_worlds);

// Executes every cell of the grid and writes one CSV row per episode.
// Resumable: rows already present in the output file are kept verbatim
// and their cells skipped. Final file is sorted by canonical cell key.
// Returns the number of failed cells (0 on full success).
int run_sweep(const SweepConfig& config);

// Sweep with one axis varied and everything else held at `base`.
int ablate(const std::string& axis, const std::vector<int>& values, SweepConfig base);

struct SummaryRow {
    WorldKind kind;
    Algorithm algorithm;
    double eta = 0.0;
    double alpha = 0.0;
    int n_plans = 0;
    int n_eval_worlds = 0;
    int episodes = 0;
    double mean_suboptimality = 0.0;
    double ci95_suboptimality = 0.0;  // normal approximation
    double mean_traversal = 0.0;
    double mean_collision_cost = 0.0;
    double mean_proposer_seconds = 0.0;
    double mean_acceptor_seconds = 0.0;
};

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows);
void print_summary(const std::vector<SummaryRow>& rows, std::ostream& os);

}  // namespace dreams
