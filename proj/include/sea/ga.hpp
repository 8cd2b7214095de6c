#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sea/bbc.hpp"
#include "sea/objectives.hpp"
#include "sea/rng.hpp"

namespace sea {

// Full parameter set of one GA. p_mut is the per-offspring probability that the
// mutation operator fires at all; p_mut_per_bit is the flip probability applied
// to each bit when it does. vec_size is always blocks_n * block_k.
struct GaConfig {
    int max_gen = 3000;
    int pop_size = 100;
    int blocks_n = 100;
    int block_k = 1;
    int t_size = 2;
    double p_cross = 0.6;
    double p_mut = 1.0;
    double p_mut_per_bit = 0.05;
    bool elitism = true;

    int vec_size() const { return blocks_n * block_k; }
    void validate() const;
};

// State tags index the conversion table of the surrounding states-based engine;
// the plain GA carries them through untouched. For binary block coding, tag 0 is
// CodingState::Zero and tag 1 is CodingState::One.
using StateId = int;

struct Individual {
    BlockGenome genome;
    Fitness fitness = 0;
    StateId state = 0;
};

using Population = std::vector<Individual>;

// Outcome of one run. gen_to_opt is max_gen + 1 when the budget was exhausted,
// so success holds exactly when gen_to_opt <= max_gen.
struct RunRecord {
    std::uint64_t seed = 0;
    bool success = false;
    int gen_to_opt = 0;
    std::vector<double> best_curve;          // best population fitness per generation
    std::vector<std::uint32_t> state_counts; // per-generation state histogram, row-major
    int n_states = 0;                        // row width of state_counts (0 when not recorded)

    double final_best() const { return best_curve.empty() ? 0.0 : best_curve.back(); }
};

BlockGenome random_genome(const GaConfig& cfg, RandomSource& rng);
Individual random_individual(const GaConfig& cfg, const Problem& problem, RandomSource& rng,
                             StateId state = 0);

// First index holding the best fitness under the problem's direction.
std::size_t best_index(const Population& pop, const Problem& problem);

// Tournament of t_size members drawn with replacement; fitness ties are broken
// uniformly at random among the tied contestants.
std::size_t tournament_select_index(const Population& pop, int t_size, const Problem& problem,
                                    RandomSource& rng);
const Individual& tournament_select(const Population& pop, int t_size, const Problem& problem,
                                    RandomSource& rng);

// Exchange of tails at a fixed cut in [1, L-1]; exposed for direct testing.
std::pair<BlockGenome, BlockGenome> one_point_crossover_at(const BlockGenome& a,
                                                           const BlockGenome& b, std::size_t cut);
std::pair<Individual, Individual> one_point_crossover(const Individual& a, const Individual& b,
                                                      const Problem& problem, RandomSource& rng);

// Flips each bit independently with probability p_mut_per_bit; the fitness cache
// is refreshed whenever any bit changed.
void bit_flip_mutation(Individual& ind, double p_mut_per_bit, const Problem& problem,
                       RandomSource& rng);

// One generational step producing pop.size() offspring: parents by tournament,
// crossover with probability p_cross (copies otherwise), per-offspring mutation
// gate, then elitist reinsertion of the previous best into a random slot if the
// new population is strictly worse. With an odd population the last pairing
// contributes its first child only.
Population sga_generation(const Population& pop, const GaConfig& cfg, const Problem& problem,
                          RandomSource& rng);

// Plain GA run: uniform random block-coded population, generations until the
// optimum or max_gen. No coding conversions are ever applied.
RunRecord run_sga(const GaConfig& cfg, const Problem& problem, std::uint64_t seed);

} // namespace sea
