#include "sea/bbc.hpp"

#include <stdexcept>

namespace sea {

BlockGenome BlockGenome::make(BitString bits, int block_k) {
    if (block_k < 1 || block_k % 2 == 0) {
        throw std::invalid_argument("BlockGenome: block size must be odd and >= 1");
    }
    if (bits.empty() || bits.size() % static_cast<std::size_t>(block_k) != 0) {
        throw std::invalid_argument("BlockGenome: length must be a positive multiple of the block size");
    }
    BlockGenome w;
    w.blocks_n = static_cast<int>(bits.size()) / block_k;
    w.block_k = block_k;
    w.bits = std::move(bits);
    return w;
}

int maj(const BitString& u) {
    if (u.empty()) throw std::invalid_argument("maj: empty input");
    const std::size_t ones = u.count_ones();
    const std::size_t zeros = u.size() - ones;
    return zeros > ones ? 0 : 1;
}

BitString dec(const BlockGenome& w) {
    const auto k = static_cast<std::size_t>(w.block_k);
    BitString x(static_cast<std::size_t>(w.blocks_n));
    for (int j = 0; j < w.blocks_n; ++j) {
        const std::size_t ones = w.bits.count_ones(j * k, (j + 1) * k);
        // zeros > ones resolves to 0, everything else (ties impossible, k odd) to 1
        x.set(static_cast<std::size_t>(j), 2 * ones >= k ? 1 : 0);
    }
    return x;
}

BlockGenome enc(const BitString& x, int block_k, CodingState state) {
    if (x.empty()) throw std::invalid_argument("enc: empty phenotype");
    if (block_k < 1 || block_k % 2 == 0) {
        throw std::invalid_argument("enc: block size must be odd and >= 1");
    }
    const auto k = static_cast<std::size_t>(block_k);
    const std::uint8_t i = state == CodingState::One ? 1 : 0;
    BitString bits(x.size() * k);
    for (std::size_t j = 0; j < x.size(); ++j) {
        const std::size_t base = j * k;
        if (x[j] == i) {
            for (std::size_t b = 0; b < k; ++b) bits.set(base + b, i);
        } else {
            const std::size_t head = (k - 1) / 2; // i repeated, then complement
            for (std::size_t b = 0; b < head; ++b) bits.set(base + b, i);
            for (std::size_t b = head; b < k; ++b) bits.set(base + b, 1 - i);
        }
    }
    return BlockGenome::make(std::move(bits), block_k);
}

BlockGenome convert(const BlockGenome& w, CodingState state) {
    return enc(dec(w), w.block_k, state);
}

std::string to_text(const BlockGenome& w, bool separators) {
    if (!separators) return w.bits.str();
    std::string s;
    s.reserve(w.bits.size() + static_cast<std::size_t>(w.blocks_n));
    for (std::size_t i = 0; i < w.bits.size(); ++i) {
        if (i != 0 && i % static_cast<std::size_t>(w.block_k) == 0) s.push_back('|');
        s.push_back(static_cast<char>('0' + w.bits[i]));
    }
    return s;
}

BlockGenome from_text(std::string_view text, int block_k) {
    return BlockGenome::make(BitString::parse(text), block_k);
}

} // namespace sea
