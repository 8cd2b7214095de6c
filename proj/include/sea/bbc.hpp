#pragma once

#include <string>
#include <string_view>

#include "sea/bitstring.hpp"

namespace sea {

// The two coding regimes of binary block coding: encoding toward state Zero
// fills blocks with as many 0s as possible, state One with as many 1s.
enum class CodingState : int { Zero = 0, One = 1 };

inline CodingState complement(CodingState s) {
    return s == CodingState::Zero ? CodingState::One : CodingState::Zero;
}

// A bitstring structured as blocks_n contiguous blocks of block_k bits; block j
// occupies [j*k, (j+1)*k). Decoding maps each block to one phenotype bit by
// majority vote, so the genotype has length blocks_n * block_k.
struct BlockGenome {
    BitString bits;
    int blocks_n = 0;
    int block_k = 1;

    // Validates the block structure. block_k must be odd: the encoders split a
    // block into (k-1)/2 and (k+1)/2 halves, which only exist for odd k, and an
    // odd block size keeps the majority vote tie-free.
    static BlockGenome make(BitString bits, int block_k);
};

// Majority vote over a bitstring; ties resolve to 1. Empty input is an error.
int maj(const BitString& u);

// Per-block majority decode to the standard binary phenotype of length blocks_n.
BitString dec(const BlockGenome& w);

// Encodes phenotype x with block size k. A bit equal to the state value becomes
// a uniform block of that value; the opposite bit becomes (k-1)/2 state bits
// followed by (k+1)/2 complement bits, so dec(enc(x, k, s)) == x for both states.
BlockGenome enc(const BitString& x, int block_k, CodingState state);

// Re-encodes w into the given state's coding: enc(dec(w), k, state). The decoded
// phenotype, and hence any fitness computed through dec, is unchanged.
BlockGenome convert(const BlockGenome& w, CodingState state);

// Text round-trip. Output is '0'/'1' characters, optionally with '|' at block
// boundaries; parse ignores separators wherever they appear.
std::string to_text(const BlockGenome& w, bool separators = false);
BlockGenome from_text(std::string_view text, int block_k);

} // namespace sea
