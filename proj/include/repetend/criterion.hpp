#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "repetend/expansion.hpp"

namespace repetend {

// t_s = first t in [0, b) with floor(t*g^j/b) = s, closed by t_{g^j} = b.
struct MasterSequence {
    Int g;
    Int b;
    unsigned j = 1;
    Int h1;             // (ceil(b/g^j)*g^j) mod b
    std::vector<Int> t; // length g^j + 1, strictly increasing, t.front()=0, t.back()=b
};

// Sorted power residues of a modulo b with sentinels -1 and b, and their gap.
struct GapProfile {
    Fraction frac;
    Int coverage_length;            // d = N+1 if b'=1 else N+ord_g(b')
    std::vector<Int> residues_sorted; // includes sentinels -1 and b
    Int gap;                        // G
};

struct IntervalWitness {
    bool ok = false;
    std::optional<std::size_t> first_empty_interval; // s with [t_s, t_{s+1}) empty
    std::vector<Int> occupancy;                      // residues per interval
    bool width_condition = false;                    // g^j <= b
};

enum class Bucket { complexity, undecided_region, no_complexity };

struct CriterionVerdict {
    Bucket bucket = Bucket::undecided_region;
    bool resolved = false;
    bool complexity = false;  // final answer once resolved
    Int gap;
    Int block_floor;          // floor(b/g^j)
    std::optional<IntervalWitness> witness;  // present when the bucket alone did not decide
};

// Multiset of counts of the sequence (floor(t*z/m)) for t = 0..m-1.
struct FloorMultiplicity {
    std::map<Int, Int> counts;  // element -> multiplicity
    Int u;                      // (m/d) mod (z/d), d = gcd(z,m)
    Int d;
    Int heavy_count;            // observed number of elements at ceil(m/z)
};

MasterSequence master_sequence(const Int& g, const Int& b, unsigned j);

GapProfile gap_profile(const Fraction& frac, const Int& g,
                       std::uint64_t digit_budget = kDefaultDigitBudget);

IntervalWitness interval_check(const Fraction& frac, const Int& g, unsigned j,
                               std::uint64_t digit_budget = kDefaultDigitBudget);

CriterionVerdict criterion(const Fraction& frac, const Int& g, unsigned j,
                           std::uint64_t digit_budget = kDefaultDigitBudget);

FloorMultiplicity floor_multiplicity(const Int& z, const Int& m,
                                     std::uint64_t budget = 10'000'000);

}  // namespace repetend
