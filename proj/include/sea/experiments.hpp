#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sea/sea.hpp"

namespace sea {

enum class Algorithm { Sga, Sea };

// Aggregated batch metrics. gnto_all counts failed runs at max_gen (the headline
// number); gnto_success averages over successful runs only and is absent when
// every run failed.
struct ExperimentReport {
    double sr_percent = 0.0;
    double gnto_all = 0.0;
    std::optional<double> gnto_success;
    int runs = 0;
    std::vector<RunRecord> per_run;
};

RunRecord run_one(Algorithm alg, const SeaConfig& cfg, const Problem& problem, std::uint64_t seed);

// runs independent runs with seeds mix_seed(master_seed, run_index), fanned out
// over up to `jobs` threads. Aggregation happens in run-index order, so the
// report is identical for any jobs value.
ExperimentReport run_batch(Algorithm alg, const SeaConfig& cfg, const Problem& problem, int runs,
                           std::uint64_t master_seed, int jobs = 1);

// Grid points 0, step, 2*step, ... capped at 1, rounded to 1e-4.
std::vector<double> sweep_axis(double step);

struct SweepCell {
    double p_mut_state = 0.0;
    double p_mut_per_bit = 0.0;
    double sr_percent = 0.0;
    double gnto_all = 0.0;
};

// Success-rate surface of the states-based engine over the
// p_mut_state x p_mut_per_bit grid. Cell runs use seeds derived from the master
// seed and the cell coordinates (scaled by 1e4), so results survive reordering.
std::vector<SweepCell> sweep_grid(const Problem& problem, const SeaConfig& base, double step,
                                  int runs, std::uint64_t master_seed, int jobs = 1);

struct BlockSizeRow {
    int k = 1;
    double sr_percent = 0.0;
    double gnto_all = 0.0;
    std::optional<double> gnto_success;
};

// Re-runs the states-based engine with the genotype stretched to blocks_n * k
// for each odd k, everything else taken from base. Seeds mix in the k value.
std::vector<BlockSizeRow> block_size_study(const Problem& problem, const SeaConfig& base,
                                           const std::vector<int>& k_values, int runs,
                                           std::uint64_t master_seed, int jobs = 1);

struct CloudRow {
    int idx = 0;
    double f = 0.0;               // fitness of the sampled genome
    double m = 0.0;               // after one bit-flip pass
    double m_conv1 = 0.0;         // conv_1 then a bit-flip pass
    double m_conv0 = 0.0;         // conv_0 then a bit-flip pass
    double m_conv1_m_conv0 = 0.0; // tour conv_1, flip, conv_0, flip
    double m_conv0_m_conv1 = 0.0; // tour conv_0, flip, conv_1, flip
};

// Evolvability probe on count uniform random genomes of n blocks of size k,
// scored with the ones-count objective through the decoder. Every bit-flip pass
// is a fresh draw at rate p_bit_flip. The tour columns are named in application
// order: m_conv0_m_conv1 applies conv_0 first and conv_1 last.
std::vector<CloudRow> fitness_clouds(int count, int n, int k, double p_bit_flip,
                                     std::uint64_t seed);

// "<max_gen>+" once failures push the mean to the budget, otherwise the number.
std::string gnto_render(const ExperimentReport& report, int max_gen);

// CSV emission, one header line each; schemas are documented in the README.
void write_batch_csv(std::ostream& os, const ExperimentReport& report);
void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells);
void write_blocksize_csv(std::ostream& os, const std::vector<BlockSizeRow>& rows);
void write_clouds_csv(std::ostream& os, const std::vector<CloudRow>& rows);
void write_trace_csv(std::ostream& os, const RunRecord& rec);

} // namespace sea
