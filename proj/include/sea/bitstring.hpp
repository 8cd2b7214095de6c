#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sea {

// Fixed-length string of binary symbols. Stored one byte per bit: genomes are a
// few thousand bits and the genetic operators touch every position anyway, so a
// packed layout would complicate slicing for no measurable gain.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t length, std::uint8_t fill = 0)
        : bits_(length, fill ? 1 : 0) {}

    // Accepts '0' and '1'; '|' separators are skipped, anything else rejected.
    static BitString parse(std::string_view text) {
        BitString out;
        out.bits_.reserve(text.size());
        for (char c : text) {
            if (c == '0' || c == '1') {
                out.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
            } else if (c != '|') {
                throw std::invalid_argument("BitString::parse: invalid character");
            }
        }
        return out;
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, std::uint8_t value) { bits_[i] = value ? 1 : 0; }
    void flip(std::size_t i) { bits_[i] ^= 1u; }

    std::size_t count_ones() const { return count_ones(0, bits_.size()); }

    std::size_t count_ones(std::size_t begin, std::size_t end) const {
        std::size_t n = 0;
        for (std::size_t i = begin; i < end; ++i) n += bits_[i];
        return n;
    }

    std::string str() const {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
        return s;
    }

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

} // namespace sea
