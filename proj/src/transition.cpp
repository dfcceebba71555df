#include "repetend/transition.hpp"

#include <stdexcept>

#include "repetend/lifting.hpp"

namespace repetend {

namespace {

Int pow_int(const Int& x, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

std::size_t checked_dim(const Int& g, unsigned j, std::uint64_t matrix_cap) {
    Int gj = pow_int(g, j);
    if (gj > Int(static_cast<unsigned long>(matrix_cap)))
        throw cap_error("matrix dimension g^j = " + gj.get_str() + " exceeds cap");
    return static_cast<std::size_t>(gj.get_ui());
}

std::vector<std::vector<Int>> mat_mul(const std::vector<std::vector<Int>>& a,
                                      const std::vector<std::vector<Int>>& b) {
    std::size_t n = a.size();
    std::vector<std::vector<Int>> out(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t c = 0; c < n; ++c) out[i][c] += a[i][l] * b[l][c];
        }
    return out;
}

}  // namespace

TransitionMatrix transition_matrix(const Int& g, const Int& b, unsigned j,
                                   unsigned t, std::uint64_t matrix_cap) {
    if (t == 0) throw std::domain_error("transition_matrix: t must be positive");
    if (gcd(g, b) != 1) throw std::domain_error("transition_matrix: gcd(g, b) != 1");
    std::size_t dim = checked_dim(g, j, matrix_cap);
    Int gj(static_cast<unsigned long>(dim));
    Int bt = pow_int(b, t);

    TransitionMatrix out;
    out.g = g;
    out.b = b;
    out.j = j;
    out.t = t;
    out.u_t = mod_pow(b, Int(static_cast<unsigned long>(t)), gj);
    out.base_entry = bt / gj;
    out.entries.assign(dim, std::vector<Int>(dim, out.base_entry));
    // Column s' carries +1 on the u_t rows starting at s'*u_t (mod g^j).
    unsigned long u = out.u_t.get_ui();
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t start = static_cast<std::size_t>(
            Int(Int(static_cast<unsigned long>(col)) * out.u_t % gj).get_ui());
        for (unsigned long x = 0; x < u; ++x)
            out.entries[(start + x) % dim][col] += 1;
    }
    return out;
}

FrequencyVector evolve(const FrequencyVector& vec, const Int& b, unsigned k,
                       unsigned t, EvolveMethod method, bool unchecked,
                       std::uint64_t matrix_cap, std::uint64_t* work_counter) {
    if (vec.counts.empty()) throw std::domain_error("evolve: empty vector");
    if (pow_int(b, k) != vec.frac.den)
        throw std::domain_error("evolve: denominator is not b^k");
    if (!unchecked) {
        unsigned c = c_of_b(vec.g, b);
        if (k < c)
            throw std::domain_error("evolve: k < c_g(b) = " + std::to_string(c) +
                                    "; pass unchecked to override");
    }

    FrequencyVector out;
    out.frac = Fraction{vec.frac.num, vec.frac.den * pow_int(b, t)};
    out.g = vec.g;
    out.j = vec.j;
    if (t == 0) {
        out.counts = vec.counts;
        out.total = vec.total;
        return out;
    }

    std::size_t dim = vec.counts.size();
    Int gj(static_cast<unsigned long>(dim));
    Int bt = pow_int(b, t);
    out.total = vec.total * bt;
    out.counts.assign(dim, Int(0));
    std::uint64_t work = 0;

    if (method == EvolveMethod::closed_form) {
        Int q = bt / gj;
        Int u = mod_pow(b, Int(static_cast<unsigned long>(t)), gj);
        unsigned long ul = u.get_ui();
        for (std::size_t sp = 0; sp < dim; ++sp) {
            Int acc = q * vec.total;
            std::size_t start = static_cast<std::size_t>(
                Int(Int(static_cast<unsigned long>(sp)) * u % gj).get_ui());
            for (unsigned long x = 0; x < ul; ++x) {
                acc += vec.counts[(start + x) % dim];
                ++work;
            }
            out.counts[sp] = acc;
            ++work;
        }
    } else {
        TransitionMatrix w = transition_matrix(vec.g, b, vec.j, t, matrix_cap);
        for (std::size_t sp = 0; sp < dim; ++sp) {
            Int acc = 0;
            for (std::size_t s = 0; s < dim; ++s) {
                acc += vec.counts[s] * w.entries[s][sp];
                ++work;
            }
            out.counts[sp] = acc;
        }
    }
    if (work_counter) *work_counter = work;
    return out;
}

bool matrix_power_check(const Int& g, const Int& b, unsigned j, unsigned t,
                        std::uint64_t matrix_cap) {
    TransitionMatrix w1 = transition_matrix(g, b, j, 1, matrix_cap);
    std::vector<std::vector<Int>> acc = w1.entries;
    for (unsigned i = 1; i < t; ++i) acc = mat_mul(acc, w1.entries);
    return acc == transition_matrix(g, b, j, t, matrix_cap).entries;
}

OscillationBound oscillation_bound(const Fraction& frac, const Int& g, unsigned j,
                                   std::uint64_t digit_budget) {
    if (gcd(frac.den, g) != 1)
        throw std::domain_error("oscillation_bound: gcd(den, g) != 1");
    OscillationBound out;
    out.frac = frac;
    out.g = g;
    out.j = j;
    out.c = c_of_b(g, frac.den);
    Int gj = pow_int(g, j);
    out.t0 = gj == 1 ? Int(1) : multiplicative_order(frac.den, gj);

    for (Int tt = 0; tt < out.t0; ++tt) {
        unsigned k = out.c + static_cast<unsigned>(tt.get_ui());
        Fraction level{frac.num, pow_int(frac.den, k)};
        FrequencyVector v = frequency_vector(level, g, j, digit_budget);
        out.samples.push_back(stats(v).oscillation);
    }
    out.bound = *std::max_element(out.samples.begin(), out.samples.end());
    return out;
}

std::vector<ConvergenceRecord> convergence_report(
    const std::vector<Int>& numerators, const Int& g, const Int& b, unsigned j,
    unsigned k_min, unsigned k_max, std::uint64_t digit_budget) {
    if (numerators.empty()) throw std::domain_error("convergence_report: no numerators");
    if (k_min == 0 || k_max < k_min)
        throw std::domain_error("convergence_report: bad k range");
    if (numerators.size() != 1 && numerators.size() < k_max - k_min + 1)
        throw std::domain_error("convergence_report: numerator list does not cover k range");

    GSplit split = g_split(g, b);
    if (split.b_free == 1)
        throw std::domain_error(
            "convergence_report: all prime factors of b divide g; expansion is "
            "eventually constant");
    const Int& bp = split.b_free;

    // Multiplier of the g-free reduction: one factor per level k.
    Int mult = pow_int(split.g_free, split.transient_len);
    for (const auto& sp : split.shared)
        mult *= pow_int(sp.prime,
                        split.transient_len * sp.g_exp - sp.b_exp);

    Int gj = pow_int(g, j);
    Rat target(1, gj);
    target.canonicalize();

    // The envelope bound applies to a fixed numerator over a
    // g-coprime denominator; report it only in that case.
    bool with_envelope = numerators.size() == 1 && bp == b;
    unsigned c = with_envelope ? c_of_b(g, bp) : 0;
    Int bound = 0;

    std::vector<ConvergenceRecord> out;
    for (unsigned k = k_min; k <= k_max; ++k) {
        const Int& a_k = numerators.size() == 1 ? numerators.front()
                                                : numerators[k - k_min];
        if (gcd(a_k, b) != 1)
            throw std::domain_error("convergence_report: numerator not coprime to b");
        Int bpk = pow_int(bp, k);
        Int reduced = a_k % bpk * mod_pow(mult, Int(static_cast<unsigned long>(k)), bpk) % bpk;

        ConvergenceRecord rec;
        rec.k = k;
        rec.reduced_num = reduced;
        Fraction frac{reduced, bpk};
        FrequencyVector v = frequency_vector(frac, g, j, digit_budget);
        StatsReport st = stats(v);
        rec.ord = v.total;
        rec.sigma = st.oscillation;
        rec.sigma_over_ord = Rat(rec.sigma, rec.ord);
        rec.sigma_over_ord.canonicalize();
        rec.full_complexity = st.full_complexity;

        Rat max_dev = 0;
        for (const Rat& r : st.relative) {
            Rat dev = abs(r - target);
            if (dev > max_dev) max_dev = dev;
        }
        rec.max_deviation = max_dev;

        TrimmedStats tr = trimmed_stats(v, digit_budget);
        Rat tmax = 0;
        for (const Rat& r : tr.relative) {
            Rat dev = abs(r - target);
            if (dev > tmax) tmax = dev;
        }
        rec.trimmed_max_deviation = tmax;

        if (with_envelope && k >= c) {
            if (bound == 0)
                bound = oscillation_bound(Fraction{numerators.front() % b, b}, g, j,
                                          digit_budget)
                            .bound;
            rec.envelope = Rat(bound, rec.ord);
            rec.envelope.canonicalize();
        } else {
            rec.envelope = 0;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace repetend
