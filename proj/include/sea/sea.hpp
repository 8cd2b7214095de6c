#pragma once

#include <functional>
#include <vector>

#include "sea/ga.hpp"

namespace sea {

using ConvertFn = std::function<BlockGenome(const BlockGenome&)>;

// Configuration of the n-state engine. conversions[s] re-encodes a genome into
// state s's coding and must preserve the decoded phenotype; the stock setup is
// the two block-coding conversions. pop_size is the total across all states.
struct SeaConfig {
    GaConfig ga;
    double p_mut_state = 1.0;
    std::vector<ConvertFn> conversions;
    bool record_state_counts = false;

    int n_states() const { return static_cast<int>(conversions.size()); }
    void validate() const;

    // The standard two-state setup over binary block coding.
    static SeaConfig bbc(GaConfig ga, double p_mut_state);
};

// Partition by state tag, preserving relative order. Groups may be empty.
std::vector<Population> split(const Population& pop, int n_states);

// Concatenation of the groups, tags intact.
Population merge(std::vector<Population> groups);

// One GA generation within a state group; groups of fewer than two members pass
// through unchanged since there is nothing to recombine.
Population state_generation(Population group, const SeaConfig& cfg, const Problem& problem,
                            RandomSource& rng);

// Per-member state mutation: with probability p_mut_state pick one of the other
// states uniformly, retag, and re-encode the genome with that state's
// conversion. Fitness is preserved by construction, so the cache is kept.
void mutate_states(Population& pop, const SeaConfig& cfg, RandomSource& rng);

// Selection for replacement over the whole pool (tournaments of t_size, with
// replacement) down to pop_size members, then elitist selection: the single best
// member of the pool is reinserted over a random pick if selection dropped it.
Population replacement_and_elitism(Population pool, const SeaConfig& cfg, const Problem& problem,
                                   RandomSource& rng);

// Full lifecycle: random initial population with uniform random state tags (each
// genome normalized to its tag's coding), then per generation
//   split -> per-state GA generation -> merge -> state mutation ->
//   replacement & elitism -> optimum check
// until the optimum is found or max_gen generations have run. Each state's GA
// generation draws from its own stream derived from (generation draw, state id),
// so concurrent and sequential execution of the groups would agree.
RunRecord run_sea(const SeaConfig& cfg, const Problem& problem, std::uint64_t seed);

} // namespace sea
