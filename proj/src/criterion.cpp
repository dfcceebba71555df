#include "repetend/criterion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace repetend {

namespace {

Int pow_int(const Int& x, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

// Sorted deduplicated residues a*g^i mod b for i < coverage_length, no sentinels.
std::vector<Int> inner_residues(const Fraction& frac, const Int& g,
                                std::uint64_t digit_budget, Int* coverage_out) {
    GSplit split = g_split(g, frac.den);
    Int d;
    if (split.b_free == 1) {
        d = split.transient_len + 1;
    } else {
        Int ord = multiplicative_order(g, split.b_free);
        d = split.transient_len + ord;
    }
    if (d > Int(static_cast<unsigned long>(digit_budget)))
        throw budget_error("gap coverage length exceeds digit budget");
    std::set<Int> acc;
    Int r = frac.num % frac.den;
    for (Int i = 0; i < d; ++i) {
        acc.insert(r);
        r = r * g % frac.den;
    }
    if (coverage_out) *coverage_out = d;
    return {acc.begin(), acc.end()};
}

}  // namespace

MasterSequence master_sequence(const Int& g, const Int& b, unsigned j) {
    if (j == 0) throw std::domain_error("master_sequence: j must be positive");
    Int gj = pow_int(g, j);
    if (gj > b) throw std::domain_error("master_sequence: requires g^j <= b");
    MasterSequence out;
    out.g = g;
    out.b = b;
    out.j = j;
    // h_1 = (ceil(b/g^j) * g^j) mod b
    Int ceil_q = (b + gj - 1) / gj;
    out.h1 = ceil_q * gj % b;
    out.t.reserve(gj.get_ui() + 1);
    for (Int s = 0; s <= gj; ++s)
        out.t.push_back((s * b + (s * out.h1 % gj)) / gj);
    return out;
}

GapProfile gap_profile(const Fraction& frac, const Int& g,
                       std::uint64_t digit_budget) {
    GapProfile out;
    out.frac = frac;
    std::vector<Int> res = inner_residues(frac, g, digit_budget, &out.coverage_length);
    out.residues_sorted.reserve(res.size() + 2);
    out.residues_sorted.push_back(-1);
    out.residues_sorted.insert(out.residues_sorted.end(), res.begin(), res.end());
    out.residues_sorted.push_back(frac.den);
    out.gap = 0;
    for (std::size_t i = 1; i < out.residues_sorted.size(); ++i) {
        Int step = out.residues_sorted[i] - out.residues_sorted[i - 1];
        if (step > out.gap) out.gap = step;
    }
    return out;
}

IntervalWitness interval_check(const Fraction& frac, const Int& g, unsigned j,
                               std::uint64_t digit_budget) {
    IntervalWitness out;
    Int gj = pow_int(g, j);
    out.width_condition = gj <= frac.den;
    if (!out.width_condition) {
        out.ok = false;
        return out;
    }
    MasterSequence ms = master_sequence(g, frac.den, j);
    std::vector<Int> res = inner_residues(frac, g, digit_budget, nullptr);

    out.occupancy.assign(ms.t.size() - 1, Int(0));
    std::size_t s = 0;
    for (const Int& r : res) {  // res sorted ascending, r in [0, b)
        while (ms.t[s + 1] <= r) ++s;
        out.occupancy[s] += 1;
    }
    out.ok = true;
    for (std::size_t i = 0; i < out.occupancy.size(); ++i) {
        if (out.occupancy[i] == 0) {
            out.ok = false;
            out.first_empty_interval = i;
            break;
        }
    }
    return out;
}

CriterionVerdict criterion(const Fraction& frac, const Int& g, unsigned j,
                           std::uint64_t digit_budget) {
    CriterionVerdict out;
    GapProfile gp = gap_profile(frac, g, digit_budget);
    out.gap = gp.gap;
    Int gj = pow_int(g, j);
    out.block_floor = frac.den / gj;

    if (out.block_floor >= out.gap) {
        out.bucket = Bucket::complexity;
        out.resolved = true;
        out.complexity = true;
    } else if (2 * out.block_floor <= out.gap - 2) {
        out.bucket = Bucket::no_complexity;
        out.resolved = true;
        out.complexity = false;
    } else {
        out.bucket = Bucket::undecided_region;
        out.witness = interval_check(frac, g, j, digit_budget);
        out.resolved = true;
        out.complexity = out.witness->ok;
    }
    return out;
}

FloorMultiplicity floor_multiplicity(const Int& z, const Int& m, std::uint64_t budget) {
    if (z <= 0 || m <= 0) throw std::domain_error("floor_multiplicity: z, m must be positive");
    if (z > m) throw std::domain_error("floor_multiplicity: requires z <= m");
    if (m > Int(static_cast<unsigned long>(budget)))
        throw budget_error("floor_multiplicity: m exceeds budget");
    FloorMultiplicity out;
    out.d = gcd(z, m);
    out.u = (m / out.d) % (z / out.d);
    for (Int t = 0; t < m; ++t) out.counts[t * z / m] += 1;
    Int heavy = (m + z - 1) / z;  // ceil(m/z)
    out.heavy_count = 0;
    for (const auto& [elem, cnt] : out.counts)
        if (cnt == heavy) out.heavy_count += 1;
    // When z | m the two candidate counts coincide; every element is "heavy".
    return out;
}

}  // namespace repetend
