#include "sea/presets.hpp"

#include <stdexcept>

namespace sea {

GaConfig Preset::ga_config() const {
    GaConfig ga;
    ga.max_gen = max_gen;
    ga.pop_size = pop_size;
    ga.blocks_n = blocks_n;
    ga.block_k = block_k;
    ga.t_size = t_size;
    ga.p_cross = p_cross;
    ga.p_mut = p_mut;
    ga.p_mut_per_bit = p_mut_per_bit;
    ga.elitism = true;
    return ga;
}

SeaConfig Preset::sea_config() const {
    return SeaConfig::bbc(ga_config(), p_mut_state);
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> table = {
        // name        problem                  maxGen popSize n    k  t  pCross pMut pMutPerBit pMutState
        {"paper-P1", ProblemId::OneMax,      3000,  100, 100, 19, 2, 0.6, 1.0, 0.9,  1.0},
        {"paper-P2", ProblemId::Needle,      3000,  100, 100, 19, 2, 0.6, 1.0, 0.9,  1.0},
        {"paper-P3", ProblemId::OnOff,       3000,  100, 100, 3,  2, 0.6, 1.0, 0.05, 0.85},
        {"paper-P4", ProblemId::Alternation, 30000, 10,  100, 3,  2, 0.6, 1.0, 0.05, 0.7},
        {"smoke",    ProblemId::OneMax,      300,   20,  20,  1,  2, 0.6, 1.0, 0.05, 0.5},
    };
    return table;
}

std::optional<Preset> find_preset(std::string_view name) {
    for (const Preset& p : presets()) {
        if (p.name == name) return p;
    }
    return std::nullopt;
}

const Preset& default_preset_for(ProblemId id) {
    for (const Preset& p : presets()) {
        if (p.problem == id && p.name != "smoke") return p;
    }
    throw std::logic_error("no default preset for problem");
}

} // namespace sea
