#pragma once

#include <cstdint>
#include <vector>

#include "repetend/wordstats.hpp"

namespace repetend {

inline constexpr std::uint64_t kDefaultMatrixCap = 4096;  // largest allowed g^j

// W_t with V_{k+t} = V_k * W_t. Entries are floor(b^t/g^j) or that +1; the
// +1 entries form a cyclic block of u_t rows per column.
struct TransitionMatrix {
    Int g;
    Int b;
    unsigned j = 1;
    unsigned t = 1;
    Int u_t;         // b^t mod g^j
    Int base_entry;  // floor(b^t / g^j)
    std::vector<std::vector<Int>> entries;  // g^j x g^j
};

enum class EvolveMethod { closed_form, matrix };

// Oscillation bound C_g(a/b, j) from the t0 sampled levels k = c..c+t0-1.
struct OscillationBound {
    Fraction frac;
    Int g;
    unsigned j = 1;
    unsigned c = 1;            // c_g(b)
    Int t0;                    // ord of b modulo g^j
    std::vector<Int> samples;  // sigma at k = c .. c+t0-1
    Int bound;                 // max of samples
};

struct ConvergenceRecord {
    unsigned k = 1;
    Int reduced_num;   // numerator over b'^k after the g-free reduction
    Int ord;           // ord_g(b'^k)
    Int sigma;
    Rat sigma_over_ord;
    Rat max_deviation;          // max_s |nu(s)/ord - 1/g^j|, enlarged repetend
    Rat trimmed_max_deviation;  // same over the plain repetend
    bool full_complexity = false;
    Rat envelope;               // C_g / ord, zero when k < c_g(b')
};

TransitionMatrix transition_matrix(const Int& g, const Int& b, unsigned j,
                                   unsigned t,
                                   std::uint64_t matrix_cap = kDefaultMatrixCap);

// V_{k+t} from V_k. The closed form touches u_t summands per output entry;
// the matrix path materializes W_t. Verifies k >= c_g(b) unless unchecked.
FrequencyVector evolve(const FrequencyVector& vec, const Int& b, unsigned k,
                       unsigned t, EvolveMethod method = EvolveMethod::closed_form,
                       bool unchecked = false,
                       std::uint64_t matrix_cap = kDefaultMatrixCap,
                       std::uint64_t* work_counter = nullptr);

// Block rule at t against the exact t-th power of W_1.
bool matrix_power_check(const Int& g, const Int& b, unsigned j, unsigned t,
                        std::uint64_t matrix_cap = kDefaultMatrixCap);

OscillationBound oscillation_bound(const Fraction& frac, const Int& g, unsigned j,
                                   std::uint64_t digit_budget = kDefaultDigitBudget);

// Per-k frequency statistics of a_k/b^k (g-free reduced when gcd(g,b) != 1).
// numerators.size() == 1 fixes the numerator for every k; otherwise it must
// cover k_min..k_max.
std::vector<ConvergenceRecord> convergence_report(
    const std::vector<Int>& numerators, const Int& g, const Int& b, unsigned j,
    unsigned k_min, unsigned k_max,
    std::uint64_t digit_budget = kDefaultDigitBudget);

}  // namespace repetend
