#pragma once

#include <string_view>

#include "sea/bbc.hpp"

namespace sea {

enum class ProblemId { OneMax, Needle, OnOff, Alternation };
enum class Direction { Maximize, Minimize };

// All four benchmark functions are integer-valued; fitness is carried as a
// double but computed in integers, so equality tests are exact.
using Fitness = double;

struct Problem {
    ProblemId id = ProblemId::OneMax;
    Direction direction = Direction::Maximize;
    int phenotype_length = 0;
    Fitness optimum_fitness = 0;

    static Problem make(ProblemId id, int phenotype_length);
    static Problem from_name(std::string_view name, int phenotype_length);
    const char* name() const;
};

// Count of 1s.
Fitness one_max(const BitString& s);

// Length of s when s is all ones, 1 otherwise.
Fitness needle(const BitString& s);

// Hamming distance to the alternating target 1010...; for odd lengths the
// target is that string truncated. Minimized, optimum 0.
Fitness on_off(const BitString& s);

// Count of adjacent unequal bit pairs. Requires length >= 2; symmetric under
// bitwise complement, so both 1010... and 0101... are optimal.
Fitness alternation(const BitString& s);

Fitness evaluate(const Problem& p, const BitString& phenotype);

// Fitness of a block-coded genome: decode, then apply the problem's function.
// The genome must carry exactly phenotype_length blocks.
Fitness evaluate_bbc(const Problem& p, const BlockGenome& w);

// Exact comparison against the problem's known optimum.
bool is_optimal(const Problem& p, Fitness value);

// Strictly-better predicate under the problem's optimization direction.
inline bool better(const Problem& p, Fitness a, Fitness b) {
    return p.direction == Direction::Maximize ? a > b : a < b;
}

} // namespace sea
