#include "sea/ga.hpp"

#include <stdexcept>
#include <tuple>

namespace sea {

void GaConfig::validate() const {
    if (max_gen < 0) throw std::invalid_argument("GaConfig: max_gen must be >= 0");
    if (pop_size < 2) throw std::invalid_argument("GaConfig: pop_size must be >= 2");
    if (blocks_n < 1) throw std::invalid_argument("GaConfig: blocks_n must be >= 1");
    if (block_k < 1 || block_k % 2 == 0) throw std::invalid_argument("GaConfig: block_k must be odd and >= 1");
    if (vec_size() < 2) throw std::invalid_argument("GaConfig: genome length must be >= 2");
    if (t_size < 1) throw std::invalid_argument("GaConfig: t_size must be >= 1");
    for (double p : {p_cross, p_mut, p_mut_per_bit}) {
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("GaConfig: probabilities must lie in [0,1]");
    }
}

BlockGenome random_genome(const GaConfig& cfg, RandomSource& rng) {
    BitString bits(static_cast<std::size_t>(cfg.vec_size()));
    for (std::size_t i = 0; i < bits.size(); ++i) bits.set(i, rng.next_bool(0.5));
    return BlockGenome::make(std::move(bits), cfg.block_k);
}

Individual random_individual(const GaConfig& cfg, const Problem& problem, RandomSource& rng,
                             StateId state) {
    Individual ind;
    ind.genome = random_genome(cfg, rng);
    ind.fitness = evaluate_bbc(problem, ind.genome);
    ind.state = state;
    return ind;
}

std::size_t best_index(const Population& pop, const Problem& problem) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
        if (better(problem, pop[i].fitness, pop[best].fitness)) best = i;
    }
    return best;
}

std::size_t tournament_select_index(const Population& pop, int t_size, const Problem& problem,
                                    RandomSource& rng) {
    if (pop.empty()) throw std::invalid_argument("tournament_select: empty population");
    std::size_t best = rng.next_below(pop.size());
    std::size_t ties = 1;
    for (int i = 1; i < t_size; ++i) {
        const std::size_t c = rng.next_below(pop.size());
        if (better(problem, pop[c].fitness, pop[best].fitness)) {
            best = c;
            ties = 1;
        } else if (pop[c].fitness == pop[best].fitness) {
            ++ties;
            if (rng.next_below(ties) == 0) best = c; // reservoir: uniform among ties
        }
    }
    return best;
}

const Individual& tournament_select(const Population& pop, int t_size, const Problem& problem,
                                    RandomSource& rng) {
    return pop[tournament_select_index(pop, t_size, problem, rng)];
}

std::pair<BlockGenome, BlockGenome> one_point_crossover_at(const BlockGenome& a,
                                                           const BlockGenome& b, std::size_t cut) {
    const std::size_t length = a.bits.size();
    if (b.bits.size() != length || a.block_k != b.block_k) {
        throw std::invalid_argument("crossover: mismatched genomes");
    }
    if (cut < 1 || cut >= length) throw std::invalid_argument("crossover: cut out of range");
    BitString c1(length), c2(length);
    for (std::size_t i = 0; i < length; ++i) {
        const bool head = i < cut;
        c1.set(i, head ? a.bits[i] : b.bits[i]);
        c2.set(i, head ? b.bits[i] : a.bits[i]);
    }
    return {BlockGenome::make(std::move(c1), a.block_k), BlockGenome::make(std::move(c2), a.block_k)};
}

std::pair<Individual, Individual> one_point_crossover(const Individual& a, const Individual& b,
                                                      const Problem& problem, RandomSource& rng) {
    const std::size_t length = a.genome.bits.size();
    if (length < 2) throw std::invalid_argument("crossover: genomes must have length >= 2");
    const std::size_t cut = 1 + rng.next_below(length - 1);
    auto [g1, g2] = one_point_crossover_at(a.genome, b.genome, cut);
    Individual c1{std::move(g1), 0, a.state};
    Individual c2{std::move(g2), 0, b.state};
    c1.fitness = evaluate_bbc(problem, c1.genome);
    c2.fitness = evaluate_bbc(problem, c2.genome);
    return {std::move(c1), std::move(c2)};
}

void bit_flip_mutation(Individual& ind, double p_mut_per_bit, const Problem& problem,
                       RandomSource& rng) {
    bool changed = false;
    BitString& bits = ind.genome.bits;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (rng.next_bool(p_mut_per_bit)) {
            bits.flip(i);
            changed = true;
        }
    }
    if (changed) ind.fitness = evaluate_bbc(problem, ind.genome);
}

Population sga_generation(const Population& pop, const GaConfig& cfg, const Problem& problem,
                          RandomSource& rng) {
    const std::size_t size = pop.size();
    if (size < 2) throw std::invalid_argument("sga_generation: population must hold at least 2 members");
    const std::size_t prev_best = best_index(pop, problem);

    Population next;
    next.reserve(size);
    while (next.size() < size) {
        const Individual& pa = pop[tournament_select_index(pop, cfg.t_size, problem, rng)];
        const Individual& pb = pop[tournament_select_index(pop, cfg.t_size, problem, rng)];
        Individual c1, c2;
        if (rng.next_bool(cfg.p_cross)) {
            std::tie(c1, c2) = one_point_crossover(pa, pb, problem, rng);
        } else {
            c1 = pa;
            c2 = pb;
        }
        if (rng.next_bool(cfg.p_mut)) bit_flip_mutation(c1, cfg.p_mut_per_bit, problem, rng);
        next.push_back(std::move(c1));
        if (next.size() < size) {
            if (rng.next_bool(cfg.p_mut)) bit_flip_mutation(c2, cfg.p_mut_per_bit, problem, rng);
            next.push_back(std::move(c2));
        }
    }

    if (cfg.elitism) {
        const std::size_t new_best = best_index(next, problem);
        if (better(problem, pop[prev_best].fitness, next[new_best].fitness)) {
            next[rng.next_below(size)] = pop[prev_best];
        }
    }
    return next;
}

RunRecord run_sga(const GaConfig& cfg, const Problem& problem, std::uint64_t seed) {
    cfg.validate();
    if (cfg.blocks_n != problem.phenotype_length) {
        throw std::invalid_argument("run_sga: blocks_n must equal the problem's phenotype length");
    }

    RandomSource rng(seed);
    RunRecord rec;
    rec.seed = seed;

    Population pop;
    pop.reserve(static_cast<std::size_t>(cfg.pop_size));
    for (int i = 0; i < cfg.pop_size; ++i) pop.push_back(random_individual(cfg, problem, rng, 0));

    auto note = [&](int gen) {
        const Fitness best = pop[best_index(pop, problem)].fitness;
        rec.best_curve.push_back(best);
        if (is_optimal(problem, best)) {
            rec.success = true;
            rec.gen_to_opt = gen;
        }
        return rec.success;
    };

    if (!note(0)) {
        for (int gen = 1; gen <= cfg.max_gen; ++gen) {
            pop = sga_generation(pop, cfg, problem, rng);
            if (note(gen)) break;
        }
    }
    if (!rec.success) rec.gen_to_opt = cfg.max_gen + 1;
    return rec;
}

} // namespace sea
