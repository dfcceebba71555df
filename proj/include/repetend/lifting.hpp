#pragma once

#include <cstdint>
#include <vector>

#include "repetend/expansion.hpp"

namespace repetend {

inline constexpr unsigned kDefaultStabilizationCap = 64;

// ord_g(b^k) for k = 1..k_max plus the stabilization constant c_g(b).
struct OrderTower {
    Int g;
    Int b;
    std::vector<Int> orders;     // orders[k-1] = ord_g(b^k)
    std::vector<Int> step_gcds;  // d_k = gcd(h_k, b) for k = 1..k_max-1
    unsigned c = 1;              // c_g(b)
};

// Decomposition of every remainder of a/b^{k+t} over the remainders of a/b^k.
struct LiftWitness {
    unsigned k = 1;
    unsigned t = 1;
    struct Entry {
        Int lifted;             // r'_v
        std::size_t base_index; // i with v = i + m*ord_g(b^k)
        Int m;
        Int n;                  // r'_v = r_i + n*b^k
    };
    std::vector<Entry> entries;  // indexed by v
};

OrderTower order_tower(const Int& g, const Int& b, unsigned k_max,
                       unsigned stabilization_cap = kDefaultStabilizationCap);

// Smallest c with ord_g(b^{c+t}) = b^t ord_g(b^c) for all t >= 1.
unsigned c_of_b(const Int& g, const Int& b,
                unsigned stabilization_cap = kDefaultStabilizationCap);

// Lifts the remainder sequence of a/b^k to a/b^{k+t} and decomposes every
// lifted remainder. Refuses k < c_g(b).
LiftWitness lift_remainders(const Int& a, const Int& b, unsigned k, const Int& g,
                            unsigned t,
                            std::uint64_t digit_budget = kDefaultDigitBudget);

// Image of a word set under s |-> (1/b^t)(s - n) mod g^j, n = 0..b^t-1.
// Returned sorted and deduplicated.
std::vector<Int> lift_word_set(const std::vector<Int>& words, const Int& g,
                               const Int& b, unsigned j, unsigned t);

// The g^j x b^t matrix e_{s,n} = (1/b^t)(s - n) mod g^j.
std::vector<std::vector<Int>> e_matrix(const Int& g, const Int& b, unsigned j,
                                       unsigned t,
                                       std::uint64_t cell_cap = 10'000'000);

}  // namespace repetend
