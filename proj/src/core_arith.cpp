#include "repetend/core_arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace repetend {

Int gcd(const Int& x, const Int& y) {
    if (x < 0 || y < 0) throw std::domain_error("gcd: negative argument");
    if (x == 0 && y == 0) throw std::domain_error("gcd: both arguments zero");
    Int r;
    mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
}

Int mod_pow(const Int& base, const Int& exp, const Int& modulus) {
    if (modulus < 2) throw std::domain_error("mod_pow: modulus < 2");
    if (exp < 0) throw std::domain_error("mod_pow: negative exponent");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Int mod_inverse(const Int& x, const Int& modulus) {
    if (modulus < 2) throw std::domain_error("mod_inverse: modulus < 2");
    Int r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: argument not invertible");
    return r;
}

std::vector<PrimePower> factorize(const Int& n, std::uint64_t trial_bound) {
    if (n < 2) throw std::domain_error("factorize: n < 2");
    std::vector<PrimePower> out;
    Int rest = n;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (std::uint64_t p = 5; p <= trial_bound && rest > 1; p += 6) {
        if (Int(p) * p > rest) break;
        strip(Int(p));
        strip(Int(p + 2));
    }
    if (rest > 1) {
        // No divisor <= trial_bound remains, so rest is prime iff
        // rest <= trial_bound^2.
        Int bound = Int(trial_bound) * trial_bound;
        if (rest > bound)
            throw budget_error("factorize: cofactor " + rest.get_str() +
                               " not certified within trial bound");
        out.push_back({rest, 1});
    }
    return out;
}

Int carmichael(const Int& n, std::uint64_t trial_bound) {
    if (n == 1) return 1;
    Int lam = 1;
    for (const auto& pp : factorize(n, trial_bound)) {
        Int contrib;
        if (pp.prime == 2) {
            if (pp.exponent == 1)
                contrib = 1;
            else if (pp.exponent == 2)
                contrib = 2;
            else {
                contrib = 1;
                mpz_mul_2exp(contrib.get_mpz_t(), contrib.get_mpz_t(), pp.exponent - 2);
            }
        } else {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent - 1);
            contrib = pe * (pp.prime - 1);
        }
        mpz_lcm(lam.get_mpz_t(), lam.get_mpz_t(), contrib.get_mpz_t());
    }
    return lam;
}

Int multiplicative_order(const Int& x, const Int& modulus, std::uint64_t step_cap) {
    if (modulus < 2) throw std::domain_error("multiplicative_order: modulus < 2");
    if (gcd(((x % modulus) + modulus) % modulus, modulus) != 1)
        throw std::domain_error("multiplicative_order: arguments not coprime");

    if (modulus <= Int("1000000000000")) {
        // Divisor refinement over the factored Carmichael function.
        Int n = carmichael(modulus);
        if (n == 1) return 1;
        for (const auto& pp : factorize(n)) {
            for (unsigned e = 0; e < pp.exponent; ++e) {
                Int candidate = n / pp.prime;
                if (mod_pow(x, candidate, modulus) == 1)
                    n = candidate;
                else
                    break;
            }
        }
        return n;
    }

    // Large modulus: iterate until the cap.
    Int acc = mod_pow(x, 1, modulus);
    Int base = acc;
    for (std::uint64_t n = 1; n <= step_cap; ++n) {
        if (acc == 1) return Int(static_cast<unsigned long>(n));
        acc = acc * base % modulus;
    }
    throw budget_error("multiplicative_order: step cap exceeded");
}

GSplit g_split(const Int& g, const Int& b, std::uint64_t trial_bound) {
    if (g < 2 || b < 2) throw std::domain_error("g_split: g and b must be >= 2");
    GSplit out;
    out.g_free = g;
    out.b_free = b;
    unsigned f = 0;
    for (const auto& pp : factorize(g, trial_bound)) {
        unsigned b_exp = 0;
        while (mpz_divisible_p(out.b_free.get_mpz_t(), pp.prime.get_mpz_t())) {
            out.b_free /= pp.prime;
            ++b_exp;
        }
        if (b_exp == 0) continue;
        for (unsigned e = 0; e < pp.exponent; ++e) out.g_free /= pp.prime;
        out.shared.push_back({pp.prime, pp.exponent, b_exp});
        // ceil(b_exp / g_exp)
        unsigned need = (b_exp + pp.exponent - 1) / pp.exponent;
        f = std::max(f, need);
    }
    out.transient_len = f;
    return out;
}

}  // namespace repetend
