#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "repetend/errors.hpp"

namespace repetend {

using Int = mpz_class;
using Rat = mpq_class;

// Prime power p^e with trial-division-certified p.
struct PrimePower {
    Int prime;
    unsigned exponent = 0;
};

// Decomposition g = g_free * prod p_i^{g_exp_i}, b = b_free * prod p_i^{b_exp_i}
// over the primes p_i dividing both g and b. transient_len is the length f of
// the non-periodic digit prefix of any a/b in base g.
struct GSplit {
    struct SharedPrime {
        Int prime;
        unsigned g_exp = 0;
        unsigned b_exp = 0;
    };
    Int g_free;  // g'
    Int b_free;  // b'
    std::vector<SharedPrime> shared;
    unsigned transient_len = 0;  // f = min{m : m*g_i >= b_i for all i}
};

inline constexpr std::uint64_t kDefaultTrialBound = 10'000'000;
inline constexpr std::uint64_t kDefaultOrderStepCap = 100'000'000;

Int gcd(const Int& x, const Int& y);

// base^exp mod modulus, modulus >= 2.
Int mod_pow(const Int& base, const Int& exp, const Int& modulus);

// y with x*y == 1 (mod modulus); throws std::domain_error when no inverse exists.
Int mod_inverse(const Int& x, const Int& modulus);

// Smallest n >= 1 with x^n == 1 (mod modulus). Requires gcd(x, modulus) = 1.
// For modulus <= 10^12 refines divisors of the Carmichael function; above that
// multiplies iteratively and throws budget_error past step_cap.
Int multiplicative_order(const Int& x, const Int& modulus,
                         std::uint64_t step_cap = kDefaultOrderStepCap);

// Complete factorization by trial division, primes ascending. Throws
// budget_error when a cofactor cannot be certified within trial_bound.
std::vector<PrimePower> factorize(const Int& n,
                                  std::uint64_t trial_bound = kDefaultTrialBound);

// Carmichael function lambda(n), from the factorization of n.
Int carmichael(const Int& n, std::uint64_t trial_bound = kDefaultTrialBound);

GSplit g_split(const Int& g, const Int& b,
               std::uint64_t trial_bound = kDefaultTrialBound);

}  // namespace repetend
