#include "sea/sea.hpp"

#include <cassert>
#include <stdexcept>

namespace sea {

void SeaConfig::validate() const {
    ga.validate();
    if (p_mut_state < 0.0 || p_mut_state > 1.0) {
        throw std::invalid_argument("SeaConfig: p_mut_state must lie in [0,1]");
    }
    if (conversions.empty()) throw std::invalid_argument("SeaConfig: at least one state is required");
}

SeaConfig SeaConfig::bbc(GaConfig ga, double p_mut_state) {
    SeaConfig cfg;
    cfg.ga = ga;
    cfg.p_mut_state = p_mut_state;
    cfg.conversions = {
        [](const BlockGenome& w) { return convert(w, CodingState::Zero); },
        [](const BlockGenome& w) { return convert(w, CodingState::One); },
    };
    return cfg;
}

std::vector<Population> split(const Population& pop, int n_states) {
    std::vector<Population> groups(static_cast<std::size_t>(n_states));
    for (const Individual& ind : pop) {
        if (ind.state < 0 || ind.state >= n_states) {
            throw std::invalid_argument("split: state tag out of range");
        }
        groups[static_cast<std::size_t>(ind.state)].push_back(ind);
    }
    return groups;
}

Population merge(std::vector<Population> groups) {
    Population pop;
    std::size_t total = 0;
    for (const auto& g : groups) total += g.size();
    pop.reserve(total);
    for (auto& g : groups) {
        for (auto& ind : g) pop.push_back(std::move(ind));
    }
    return pop;
}

Population state_generation(Population group, const SeaConfig& cfg, const Problem& problem,
                            RandomSource& rng) {
    if (group.size() < 2) return group;
    return sga_generation(group, cfg.ga, problem, rng);
}

void mutate_states(Population& pop, const SeaConfig& cfg, RandomSource& rng) {
    const int n = cfg.n_states();
    for (Individual& ind : pop) {
        if (!rng.next_bool(cfg.p_mut_state)) continue;
        if (n < 2) continue;
        const std::size_t pick = rng.next_below(static_cast<std::size_t>(n - 1));
        const StateId to =
            static_cast<StateId>(pick >= static_cast<std::size_t>(ind.state) ? pick + 1 : pick);
        ind.genome = cfg.conversions[static_cast<std::size_t>(to)](ind.genome);
        ind.state = to;
    }
}

Population replacement_and_elitism(Population pool, const SeaConfig& cfg, const Problem& problem,
                                   RandomSource& rng) {
    if (pool.empty()) throw std::invalid_argument("replacement: empty pool");
    const auto target = static_cast<std::size_t>(cfg.ga.pop_size);
    const std::size_t best = best_index(pool, problem);

    std::vector<std::size_t> chosen(target);
    bool best_present = false;
    for (auto& c : chosen) {
        c = tournament_select_index(pool, cfg.ga.t_size, problem, rng);
        best_present |= c == best;
    }
    if (!best_present) chosen[rng.next_below(target)] = best;

    Population next;
    next.reserve(target);
    for (std::size_t c : chosen) next.push_back(pool[c]);
    return next;
}

RunRecord run_sea(const SeaConfig& cfg, const Problem& problem, std::uint64_t seed) {
    cfg.validate();
    if (cfg.ga.blocks_n != problem.phenotype_length) {
        throw std::invalid_argument("run_sea: blocks_n must equal the problem's phenotype length");
    }

    RandomSource rng(seed);
    RunRecord rec;
    rec.seed = seed;
    const int n = cfg.n_states();
    if (cfg.record_state_counts) rec.n_states = n;

    Population pop;
    pop.reserve(static_cast<std::size_t>(cfg.ga.pop_size));
    for (int i = 0; i < cfg.ga.pop_size; ++i) {
        const auto tag = static_cast<StateId>(rng.next_below(static_cast<std::size_t>(n)));
        BlockGenome g = cfg.conversions[static_cast<std::size_t>(tag)](random_genome(cfg.ga, rng));
        const Fitness f = evaluate_bbc(problem, g);
        pop.push_back(Individual{std::move(g), f, tag});
    }

    auto note = [&](int gen) {
        const Fitness best = pop[best_index(pop, problem)].fitness;
        rec.best_curve.push_back(best);
        if (cfg.record_state_counts) {
            std::vector<std::uint32_t> counts(static_cast<std::size_t>(n), 0);
            for (const Individual& ind : pop) ++counts[static_cast<std::size_t>(ind.state)];
            rec.state_counts.insert(rec.state_counts.end(), counts.begin(), counts.end());
        }
        if (is_optimal(problem, best)) {
            rec.success = true;
            rec.gen_to_opt = gen;
        }
        return rec.success;
    };

    if (!note(0)) {
        for (int gen = 1; gen <= cfg.ga.max_gen; ++gen) {
            const std::uint64_t base = rng.next_u64();
            auto groups = split(pop, n);
            for (int s = 0; s < n; ++s) {
                RandomSource group_rng(mix_seed(base, static_cast<std::uint64_t>(s)));
                groups[static_cast<std::size_t>(s)] =
                    state_generation(std::move(groups[static_cast<std::size_t>(s)]), cfg, problem,
                                     group_rng);
            }
            pop = merge(std::move(groups));
            mutate_states(pop, cfg, rng);
#ifndef NDEBUG
            for (const Individual& ind : pop) {
                assert(ind.fitness == evaluate_bbc(problem, ind.genome));
            }
#endif
            pop = replacement_and_elitism(std::move(pop), cfg, problem, rng);
            if (note(gen)) break;
        }
    }
    if (!rec.success) rec.gen_to_opt = cfg.ga.max_gen + 1;
    return rec;
}

} // namespace sea
