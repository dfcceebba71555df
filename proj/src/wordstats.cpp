#include "repetend/wordstats.hpp"

#include <stdexcept>

namespace repetend {

namespace {

std::size_t checked_word_count(const Int& g, unsigned j, std::uint64_t cell_cap) {
    Int gj;
    mpz_pow_ui(gj.get_mpz_t(), g.get_mpz_t(), j);
    if (gj > Int(static_cast<unsigned long>(cell_cap)))
        throw cap_error("word count g^j = " + gj.get_str() + " exceeds cell cap");
    return static_cast<std::size_t>(gj.get_ui());
}

std::vector<Rat> relatives(const std::vector<Int>& counts, const Int& total) {
    std::vector<Rat> rel;
    rel.reserve(counts.size());
    for (const Int& c : counts) {
        Rat r(c, total);
        r.canonicalize();
        rel.push_back(r);
    }
    return rel;
}

}  // namespace

FrequencyVector frequency_vector(const Fraction& frac, const Int& g, unsigned j,
                                 std::uint64_t digit_budget,
                                 std::uint64_t cell_cap) {
    if (j == 0) throw std::domain_error("frequency_vector: j must be positive");
    std::size_t words = checked_word_count(g, j, cell_cap);
    Word w = enlarged_repetend(frac, g, j, digit_budget);

    FrequencyVector out;
    out.frac = frac;
    out.g = g;
    out.j = j;
    out.counts.assign(words, Int(0));
    // Rolling window value modulo g^j over the enlarged repetend.
    Int gj(static_cast<unsigned long>(words));
    Int window = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        window = (window * g + w[i]) % gj;
        if (i + 1 >= j) out.counts[window.get_ui()] += 1;
    }
    out.total = Int(static_cast<unsigned long>(w.size() - (j - 1)));
    return out;
}

StatsReport stats(const FrequencyVector& vec) {
    StatsReport out;
    out.min_count = vec.counts.front();
    out.max_count = vec.counts.front();
    for (const Int& c : vec.counts) {
        if (c < out.min_count) out.min_count = c;
        if (c > out.max_count) out.max_count = c;
    }
    out.oscillation = out.max_count - out.min_count;
    out.relative = relatives(vec.counts, vec.total);
    out.full_complexity = out.min_count > 0;
    return out;
}

TrimmedStats trimmed_stats(const FrequencyVector& vec, std::uint64_t digit_budget) {
    Int trimmed_total = vec.total - (vec.j - 1);
    if (trimmed_total <= 0)
        throw std::domain_error("trimmed_stats: repetend shorter than j");

    // Direct enumeration of the windows fully inside the plain repetend.
    Word w = enlarged_repetend(vec.frac, vec.g, 1, digit_budget);
    Int gj;
    mpz_pow_ui(gj.get_mpz_t(), vec.g.get_mpz_t(), vec.j);
    TrimmedStats out;
    out.counts.assign(vec.counts.size(), Int(0));
    Int window = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        window = (window * vec.g + w[i]) % gj;
        if (i + 1 >= vec.j) out.counts[window.get_ui()] += 1;
    }
    out.total = trimmed_total;
    out.relative = relatives(out.counts, out.total);
    return out;
}

}  // namespace repetend
