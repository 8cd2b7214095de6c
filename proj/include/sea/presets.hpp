#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sea/experiments.hpp"

namespace sea {

// A named, fully specified benchmark setup. The paper-P* presets are the
// documented best settings per problem; smoke is a fast configuration for CI
// and examples.
struct Preset {
    std::string name;
    ProblemId problem = ProblemId::OneMax;
    int max_gen = 3000;
    int pop_size = 100;
    int blocks_n = 100;
    int block_k = 1;
    int t_size = 2;
    double p_cross = 0.6;
    double p_mut = 1.0;
    double p_mut_per_bit = 0.05;
    double p_mut_state = 1.0;

    GaConfig ga_config() const;
    SeaConfig sea_config() const; // two-state block-coding setup
    Problem make_problem() const { return Problem::make(problem, blocks_n); }
};

const std::vector<Preset>& presets();
std::optional<Preset> find_preset(std::string_view name);

// The paper-P* row for a problem; used when only a problem name is given.
const Preset& default_preset_for(ProblemId id);

} // namespace sea
