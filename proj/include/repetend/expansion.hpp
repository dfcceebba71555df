#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "repetend/core_arith.hpp"

namespace repetend {

using Digit = std::uint32_t;
using Word = std::vector<Digit>;

inline constexpr std::uint64_t kDefaultDigitBudget = 1'000'000;

// Reduced fraction a/b with 0 < a, b >= 2, gcd(a,b) = 1.
struct Fraction {
    Int num;
    Int den;

    // Validates the invariants; improper a >= b is rejected unless allow_improper.
    static Fraction make(Int a, Int b, bool allow_improper = false);

    bool proper() const { return num < den; }
    bool operator==(const Fraction&) const = default;
};

struct DigitStream {
    Word digits;                  // x_1 .. x_count
    std::vector<Int> remainders;  // r_1 .. r_count
};

struct ExpansionSummary {
    Int base;
    Int integer_part;  // nonzero only for improper input
    Word transient;    // length f
    Word repetend;     // empty iff terminating
    Int period;        // ord_g(b'), 0 iff terminating
    std::optional<Fraction> reduced;  // purely periodic equivalent; absent when b'=1
    GSplit split;
};

// List numbers of consecutive j-words of the enlarged repetend.
struct WordSeq {
    unsigned j = 1;
    std::vector<Int> list_numbers;  // length ord_g(b), entries in [0, g^j)
};

struct RemainderSeq {
    unsigned j = 1;
    std::vector<Int> remainders;  // length ord_g(b), pairwise distinct, first = a
};

// First `count` digits and remainders of the base-g long division of frac.
// b need not be coprime to g.
DigitStream digits(const Fraction& frac, const Int& g, std::uint64_t count);

// Transient, repetend and purely periodic reduction of frac in base g.
ExpansionSummary summary(const Fraction& frac, const Int& g,
                         std::uint64_t digit_budget = kDefaultDigitBudget);

// Repetend followed by its own first j-1 digits. Requires gcd(den, g) = 1.
Word enlarged_repetend(const Fraction& frac, const Int& g, unsigned j,
                       std::uint64_t digit_budget = kDefaultDigitBudget);

WordSeq word_sequence(const Fraction& frac, const Int& g, unsigned j,
                      std::uint64_t digit_budget = kDefaultDigitBudget);

RemainderSeq remainder_sequence(const Fraction& frac, const Int& g, unsigned j,
                                std::uint64_t digit_budget = kDefaultDigitBudget);

// floor(r * g^j / b): the j-word found j steps after remainder r.
Int word_from_remainder(const Int& r, const Int& b, const Int& g, unsigned j);

template <typename Seq>
Seq rotate_left(Seq word, std::size_t n) {
    if (word.empty()) return word;
    n %= word.size();
    std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(n), word.end());
    return word;
}

}  // namespace repetend
