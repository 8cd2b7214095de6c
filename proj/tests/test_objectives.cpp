#include <doctest.h>

#include <cstdint>
#include <set>

#include "sea/objectives.hpp"
#include "sea/rng.hpp"

using namespace sea;

namespace {

BitString bitstring_from_mask(unsigned mask, int length) {
    BitString s(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) s.set(static_cast<std::size_t>(i), (mask >> i) & 1u);
    return s;
}

int hamming(const BitString& a, const BitString& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

} // namespace

TEST_CASE("one_max counts ones") {
    CHECK(one_max(BitString::parse("111")) == 3);
    CHECK(one_max(BitString::parse("000")) == 0);
    CHECK(one_max(BitString(100, 1)) == 100);
}

TEST_CASE("needle is flat except at the all-ones string") {
    CHECK(needle(BitString::parse("1111")) == 4);
    CHECK(needle(BitString::parse("1110")) == 1);
    CHECK(needle(BitString::parse("0000")) == 1);
}

TEST_CASE("on_off measures distance to the alternating target") {
    CHECK(on_off(BitString::parse("1010")) == 0);
    CHECK(on_off(BitString::parse("0101")) == 4);
    CHECK(on_off(BitString::parse("1011")) == 1);
    // odd lengths use the truncated target 101
    CHECK(on_off(BitString::parse("101")) == 0);
    CHECK(on_off(BitString::parse("010")) == 3);
}

TEST_CASE("on_off bounds are attained") {
    for (int length : {4, 6, 10}) {
        for (unsigned mask = 0; mask < (1u << length); ++mask) {
            const Fitness f = on_off(bitstring_from_mask(mask, length));
            CHECK(f >= 0);
            CHECK(f <= length);
        }
    }
}

TEST_CASE("alternation counts adjacent changes") {
    CHECK(alternation(BitString::parse("1010")) == 3);
    CHECK(alternation(BitString::parse("0000")) == 0);
    CHECK(alternation(BitString::parse("0101")) == 3);
    CHECK_THROWS_AS(alternation(BitString::parse("1")), std::invalid_argument);
}

TEST_CASE("alternation is complement-symmetric, exhaustively at length 12") {
    for (int length : {2, 5, 12}) {
        for (unsigned mask = 0; mask < (1u << length); ++mask) {
            const unsigned flipped = ~mask & ((1u << length) - 1);
            CHECK(alternation(bitstring_from_mask(mask, length)) ==
                  alternation(bitstring_from_mask(flipped, length)));
        }
    }
}

TEST_CASE("strings with one alternation count share one fitness value") {
    const int length = 12;
    std::set<std::pair<int, Fitness>> seen;
    for (unsigned mask = 0; mask < (1u << length); ++mask) {
        const BitString s = bitstring_from_mask(mask, length);
        int changes = 0;
        for (int j = 0; j + 1 < length; ++j) changes += s[static_cast<std::size_t>(j)] != s[static_cast<std::size_t>(j + 1)];
        seen.emplace(changes, alternation(s));
    }
    std::set<int> classes;
    for (const auto& [changes, fitness] : seen) {
        CHECK(!classes.count(changes)); // one fitness per class
        classes.insert(changes);
    }
}

TEST_CASE("alternation fitness is uncorrelated with distance to one optimum") {
    // Over all 2^10 strings the covariance between fitness and Hamming distance
    // to 1010101010 is exactly zero: complementing a string keeps the fitness
    // and maps distance d to 10 - d. All sums are exact in integers.
    const int length = 10;
    const BitString target = BitString::parse("1010101010");
    std::int64_t sum_f = 0, sum_d = 0, sum_fd = 0;
    const std::int64_t count = 1 << length;
    for (unsigned mask = 0; mask < (1u << length); ++mask) {
        const BitString s = bitstring_from_mask(mask, length);
        const auto f = static_cast<std::int64_t>(alternation(s));
        const auto d = static_cast<std::int64_t>(hamming(s, target));
        sum_f += f;
        sum_d += d;
        sum_fd += f * d;
    }
    CHECK(count * sum_fd - sum_f * sum_d == 0);
}

TEST_CASE("problems carry direction and optimum") {
    const Problem p1 = Problem::make(ProblemId::OneMax, 100);
    CHECK(p1.direction == Direction::Maximize);
    CHECK(p1.optimum_fitness == 100);
    const Problem p2 = Problem::make(ProblemId::Needle, 100);
    CHECK(p2.optimum_fitness == 100);
    const Problem p3 = Problem::make(ProblemId::OnOff, 100);
    CHECK(p3.direction == Direction::Minimize);
    CHECK(p3.optimum_fitness == 0);
    const Problem p4 = Problem::make(ProblemId::Alternation, 100);
    CHECK(p4.optimum_fitness == 99);

    CHECK(Problem::from_name("onemax", 10).id == ProblemId::OneMax);
    CHECK(Problem::from_name("needle", 10).id == ProblemId::Needle);
    CHECK(Problem::from_name("onoff", 10).id == ProblemId::OnOff);
    CHECK(Problem::from_name("alternation", 10).id == ProblemId::Alternation);
    CHECK_THROWS_AS(Problem::from_name("nope", 10), std::invalid_argument);
    CHECK_THROWS_AS(Problem::make(ProblemId::Alternation, 1), std::invalid_argument);
}

TEST_CASE("is_optimal compares exactly") {
    CHECK(is_optimal(Problem::make(ProblemId::OneMax, 100), 100));
    CHECK(is_optimal(Problem::make(ProblemId::Alternation, 100), 99));
    CHECK(!is_optimal(Problem::make(ProblemId::OnOff, 100), 1));
}

TEST_CASE("better respects the optimization direction") {
    const Problem maxp = Problem::make(ProblemId::OneMax, 4);
    const Problem minp = Problem::make(ProblemId::OnOff, 4);
    CHECK(better(maxp, 3, 2));
    CHECK(!better(maxp, 2, 2));
    CHECK(better(minp, 1, 2));
    CHECK(!better(minp, 2, 1));
}

TEST_CASE("block-coded evaluation decodes first") {
    const Problem ones2 = Problem::make(ProblemId::OneMax, 2);
    CHECK(evaluate_bbc(ones2, enc(BitString::parse("11"), 3, CodingState::One)) == 2);

    const Problem onoff4 = Problem::make(ProblemId::OnOff, 4);
    CHECK(evaluate_bbc(onoff4, enc(BitString::parse("1010"), 3, CodingState::Zero)) == 0);

    const Problem needle100 = Problem::make(ProblemId::Needle, 100);
    BitString almost(100, 1);
    almost.set(31, 0);
    CHECK(evaluate_bbc(needle100, enc(almost, 3, CodingState::One)) == 1);

    CHECK_THROWS_AS(evaluate_bbc(ones2, enc(BitString::parse("111"), 3, CodingState::One)),
                    std::invalid_argument);
}

TEST_CASE("block-coded evaluation is invariant under conversion") {
    RandomSource rng(11);
    const int n = 20, k = 3;
    const Problem problems[] = {
        Problem::make(ProblemId::OneMax, n),
        Problem::make(ProblemId::Needle, n),
        Problem::make(ProblemId::OnOff, n),
        Problem::make(ProblemId::Alternation, n),
    };
    for (int trial = 0; trial < 500; ++trial) {
        BitString bits(static_cast<std::size_t>(n * k));
        for (std::size_t i = 0; i < bits.size(); ++i) bits.set(i, rng.next_bool(0.5));
        const BlockGenome w = BlockGenome::make(std::move(bits), k);
        for (const Problem& p : problems) {
            const Fitness f = evaluate_bbc(p, w);
            CHECK(evaluate_bbc(p, convert(w, CodingState::Zero)) == f);
            CHECK(evaluate_bbc(p, convert(w, CodingState::One)) == f);
        }
    }
}
