#pragma once

#include <cstdint>
#include <vector>

#include "repetend/expansion.hpp"

namespace repetend {

inline constexpr std::uint64_t kDefaultCellCap = 10'000'000;

// Absolute counts of all g^j j-words in the enlarged repetend of frac.
struct FrequencyVector {
    Fraction frac;
    Int g;
    unsigned j = 1;
    std::vector<Int> counts;  // indexed by list number, length g^j
    Int total;                // = ord_g(den) = sum of counts
};

struct StatsReport {
    Int min_count;
    Int max_count;
    Int oscillation;            // max - min
    std::vector<Rat> relative;  // exact nu(s)/total, sums to 1
    bool full_complexity = false;
};

// Counts over the plain (non-enlarged) repetend; total = ord - (j-1).
struct TrimmedStats {
    std::vector<Int> counts;
    Int total;
    std::vector<Rat> relative;
};

FrequencyVector frequency_vector(const Fraction& frac, const Int& g, unsigned j,
                                 std::uint64_t digit_budget = kDefaultDigitBudget,
                                 std::uint64_t cell_cap = kDefaultCellCap);

StatsReport stats(const FrequencyVector& vec);

// Recounts by direct enumeration of the windows fully inside the repetend.
TrimmedStats trimmed_stats(const FrequencyVector& vec,
                           std::uint64_t digit_budget = kDefaultDigitBudget);

}  // namespace repetend
