#include "sea/objectives.hpp"

#include <stdexcept>
#include <string>

namespace sea {

Problem Problem::make(ProblemId id, int phenotype_length) {
    if (phenotype_length < 1) throw std::invalid_argument("Problem: phenotype length must be positive");
    Problem p;
    p.id = id;
    p.phenotype_length = phenotype_length;
    switch (id) {
    case ProblemId::OneMax:
        p.direction = Direction::Maximize;
        p.optimum_fitness = phenotype_length;
        break;
    case ProblemId::Needle:
        p.direction = Direction::Maximize;
        p.optimum_fitness = phenotype_length;
        break;
    case ProblemId::OnOff:
        p.direction = Direction::Minimize;
        p.optimum_fitness = 0;
        break;
    case ProblemId::Alternation:
        if (phenotype_length < 2) {
            throw std::invalid_argument("Problem: alternation needs a length of at least 2");
        }
        p.direction = Direction::Maximize;
        p.optimum_fitness = phenotype_length - 1;
        break;
    }
    return p;
}

Problem Problem::from_name(std::string_view name, int phenotype_length) {
    if (name == "onemax") return make(ProblemId::OneMax, phenotype_length);
    if (name == "needle") return make(ProblemId::Needle, phenotype_length);
    if (name == "onoff") return make(ProblemId::OnOff, phenotype_length);
    if (name == "alternation") return make(ProblemId::Alternation, phenotype_length);
    throw std::invalid_argument("unknown problem name: " + std::string(name));
}

const char* Problem::name() const {
    switch (id) {
    case ProblemId::OneMax: return "onemax";
    case ProblemId::Needle: return "needle";
    case ProblemId::OnOff: return "onoff";
    case ProblemId::Alternation: return "alternation";
    }
    return "?";
}

Fitness one_max(const BitString& s) {
    return static_cast<Fitness>(s.count_ones());
}

Fitness needle(const BitString& s) {
    return s.count_ones() == s.size() ? static_cast<Fitness>(s.size()) : 1;
}

Fitness on_off(const BitString& s) {
    std::size_t mismatches = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        const std::uint8_t target = j % 2 == 0 ? 1 : 0;
        mismatches += s[j] != target;
    }
    return static_cast<Fitness>(mismatches);
}

Fitness alternation(const BitString& s) {
    if (s.size() < 2) throw std::invalid_argument("alternation: length must be >= 2");
    std::size_t changes = 0;
    for (std::size_t j = 0; j + 1 < s.size(); ++j) changes += s[j] != s[j + 1];
    return static_cast<Fitness>(changes);
}

Fitness evaluate(const Problem& p, const BitString& phenotype) {
    switch (p.id) {
    case ProblemId::OneMax: return one_max(phenotype);
    case ProblemId::Needle: return needle(phenotype);
    case ProblemId::OnOff: return on_off(phenotype);
    case ProblemId::Alternation: return alternation(phenotype);
    }
    throw std::logic_error("evaluate: bad problem id");
}

Fitness evaluate_bbc(const Problem& p, const BlockGenome& w) {
    if (w.blocks_n != p.phenotype_length) {
        throw std::invalid_argument("evaluate_bbc: genome block count does not match the problem length");
    }
    return evaluate(p, dec(w));
}

bool is_optimal(const Problem& p, Fitness value) {
    return value == p.optimum_fitness;
}

} // namespace sea
