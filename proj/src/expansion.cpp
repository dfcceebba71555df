#include "repetend/expansion.hpp"

#include <stdexcept>

namespace repetend {

namespace {

Digit to_digit(const Int& v) { return static_cast<Digit>(v.get_ui()); }

void require_base(const Int& g) {
    if (g < 2) throw std::domain_error("base must be >= 2");
    if (!g.fits_uint_p()) throw std::domain_error("base too large for digit storage");
}

// ord_g(b) with the digit budget applied up front.
Int checked_order(const Int& g, const Int& b, unsigned j, std::uint64_t budget) {
    if (gcd(g, b) != 1)
        throw std::domain_error("expansion is not purely periodic: gcd(den, g) != 1");
    Int ord = multiplicative_order(g, b);
    if (ord + j - 1 > Int(static_cast<unsigned long>(budget)))
        throw budget_error("digit budget exceeded: need " + Int(ord + j - 1).get_str() +
                           " digits");
    return ord;
}

}  // namespace

Fraction Fraction::make(Int a, Int b, bool allow_improper) {
    if (b < 2) throw std::domain_error("Fraction: denominator must be >= 2");
    if (a <= 0) throw std::domain_error("Fraction: numerator must be positive");
    if (!allow_improper && a >= b)
        throw std::domain_error("Fraction: improper fraction");
    if (gcd(a, b) != 1) throw std::domain_error("Fraction: not in lowest terms");
    return Fraction{std::move(a), std::move(b)};
}

DigitStream digits(const Fraction& frac, const Int& g, std::uint64_t count) {
    require_base(g);
    if (count == 0) throw std::domain_error("digits: count must be positive");
    if (!frac.proper()) throw std::domain_error("digits: fraction must be proper");
    DigitStream out;
    out.digits.reserve(count);
    out.remainders.reserve(count);
    Int r = frac.num;
    for (std::uint64_t i = 0; i < count; ++i) {
        Int scaled = r * g;
        Int q = scaled / frac.den;
        r = scaled - q * frac.den;
        out.digits.push_back(to_digit(q));
        out.remainders.push_back(r);
    }
    return out;
}

ExpansionSummary summary(const Fraction& frac, const Int& g,
                         std::uint64_t digit_budget) {
    require_base(g);
    ExpansionSummary out;
    out.base = g;
    out.integer_part = frac.num / frac.den;
    Int a = frac.num % frac.den;
    Fraction proper{a, frac.den};
    out.split = g_split(g, frac.den);
    unsigned f = out.split.transient_len;

    if (f > 0) out.transient = digits(proper, g, f).digits;

    const Int& b_free = out.split.b_free;
    if (b_free == 1) {
        out.period = 0;
        return out;
    }

    // Strip the primes shared with g: a * g'^f * prod p_i^{f*g_i - b_i} mod b'.
    Int reduced_num = a;
    Int gf;
    mpz_pow_ui(gf.get_mpz_t(), out.split.g_free.get_mpz_t(), f);
    reduced_num = reduced_num * gf % b_free;
    for (const auto& sp : out.split.shared) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), sp.prime.get_mpz_t(),
                   static_cast<unsigned long>(f) * sp.g_exp - sp.b_exp);
        reduced_num = reduced_num * pe % b_free;
    }
    out.reduced = Fraction{reduced_num, b_free};
    out.period = checked_order(g, b_free, 1, digit_budget);
    out.repetend =
        digits(*out.reduced, g, out.period.get_ui()).digits;
    return out;
}

Word enlarged_repetend(const Fraction& frac, const Int& g, unsigned j,
                       std::uint64_t digit_budget) {
    require_base(g);
    if (j == 0) throw std::domain_error("enlarged_repetend: j must be positive");
    if (!frac.proper()) throw std::domain_error("enlarged_repetend: fraction must be proper");
    Int ord = checked_order(g, frac.den, j, digit_budget);
    Word w = digits(frac, g, ord.get_ui()).digits;
    w.reserve(w.size() + j - 1);
    for (unsigned i = 0; i + 1 < j; ++i) w.push_back(w[i]);
    return w;
}

WordSeq word_sequence(const Fraction& frac, const Int& g, unsigned j,
                      std::uint64_t digit_budget) {
    Word w = enlarged_repetend(frac, g, j, digit_budget);
    Int gj;
    mpz_pow_ui(gj.get_mpz_t(), g.get_mpz_t(), j);
    WordSeq out;
    out.j = j;
    out.list_numbers.reserve(w.size() - (j - 1));
    Int window = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        window = (window * g + w[i]) % gj;
        if (i + 1 >= j) out.list_numbers.push_back(window);
    }
    return out;
}

RemainderSeq remainder_sequence(const Fraction& frac, const Int& g, unsigned j,
                                std::uint64_t digit_budget) {
    require_base(g);
    if (j == 0) throw std::domain_error("remainder_sequence: j must be positive");
    if (!frac.proper())
        throw std::domain_error("remainder_sequence: fraction must be proper");
    Int ord = checked_order(g, frac.den, j, digit_budget);
    RemainderSeq out;
    out.j = j;
    out.remainders.reserve(ord.get_ui());
    Int r = frac.num;
    for (unsigned long i = 0; i < ord.get_ui(); ++i) {
        out.remainders.push_back(r);
        r = r * g % frac.den;
    }
    return out;
}

Int word_from_remainder(const Int& r, const Int& b, const Int& g, unsigned j) {
    require_base(g);
    if (r <= 0 || r >= b) throw std::domain_error("word_from_remainder: remainder out of range");
    if (gcd(g, b) != 1)
        throw std::domain_error("word_from_remainder: gcd(b, g) != 1");
    Int gj;
    mpz_pow_ui(gj.get_mpz_t(), g.get_mpz_t(), j);
    return r * gj / b;
}

}  // namespace repetend
