#include "repetend/expansion.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"

using namespace repetend;

namespace {

Word word_of(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(static_cast<Digit>(c - '0'));
    return w;
}

Fraction random_proper(std::mt19937_64& rng, unsigned long max_den) {
    for (;;) {
        unsigned long bu = 2 + rng() % (max_den - 1);
        unsigned long au = 1 + rng() % (bu - 1 + (bu == 2));
        Int a = au, b = bu;
        if (a < b && gcd(a, b) == 1) return Fraction::make(a, b);
    }
}

}  // namespace

TEST_CASE("Fraction validation") {
    CHECK_THROWS_AS(Fraction::make(2, 4), std::domain_error);
    CHECK_THROWS_AS(Fraction::make(5, 3), std::domain_error);
    CHECK_NOTHROW(Fraction::make(5, 3, /*allow_improper=*/true));
    CHECK_THROWS_AS(Fraction::make(0, 3), std::domain_error);
    CHECK_THROWS_AS(Fraction::make(1, 1), std::domain_error);
}

TEST_CASE("digits examples") {
    auto d = digits(Fraction::make(7, 13), 3, 6);
    CHECK(d.digits == word_of("112112"));

    auto t = digits(Fraction::make(1, 2), 2, 3);
    CHECK(t.digits == word_of("100"));
    CHECK(t.remainders == std::vector<Int>{0, 0, 0});

    auto m = digits(Fraction::make(1, 12), 10, 5);
    CHECK(m.digits == word_of("08333"));

    CHECK_THROWS_AS(digits(Fraction::make(1, 3), 2, 0), std::domain_error);
}

TEST_CASE("summary examples") {
    auto s = summary(Fraction::make(7, 13), 3);
    CHECK(s.transient.empty());
    CHECK(s.repetend == word_of("112"));
    CHECK(s.period == 3);
    REQUIRE(s.reduced.has_value());
    CHECK(*s.reduced == Fraction::make(7, 13));

    auto q = summary(Fraction::make(1, 12), 10);
    CHECK(q.transient == word_of("08"));
    CHECK(q.repetend == word_of("3"));
    CHECK(q.period == 1);
    REQUIRE(q.reduced.has_value());
    CHECK(*q.reduced == Fraction::make(1, 3));

    auto term = summary(Fraction::make(1, 8), 2);
    CHECK(term.transient == word_of("001"));
    CHECK(term.repetend.empty());
    CHECK(term.period == 0);
    CHECK_FALSE(term.reduced.has_value());
}

TEST_CASE("summary of improper input reports the integer part") {
    auto s = summary(Fraction::make(20, 13, true), 3);
    CHECK(s.integer_part == 1);
    CHECK(s.repetend == summary(Fraction::make(7, 13), 3).repetend);
}

TEST_CASE("enlarged_repetend examples") {
    CHECK(enlarged_repetend(Fraction::make(7, 13), 3, 2) == word_of("1121"));
    CHECK(enlarged_repetend(Fraction::make(7, 13), 3, 1) == word_of("112"));

    Word f169 = enlarged_repetend(Fraction::make(7, 169), 3, 2);
    Word expected = word_of("0010100120211001021111201222012102122220");
    CHECK(f169 == expected);

    CHECK_THROWS_AS(enlarged_repetend(Fraction::make(1, 12), 10, 2), std::domain_error);
}

TEST_CASE("word_sequence examples") {
    auto w = word_sequence(Fraction::make(7, 13), 3, 2);
    CHECK(w.list_numbers == std::vector<Int>{4, 5, 7});

    auto w1 = word_sequence(Fraction::make(7, 13), 3, 1);
    CHECK(w1.list_numbers == std::vector<Int>{1, 1, 2});

    auto big = word_sequence(Fraction::make(7, 169), 3, 2);
    std::vector<Int> expected{0, 1, 3, 1, 3, 0, 1, 5, 6, 2, 7, 4, 3, 0, 1, 3, 2, 7, 4, 4,
                              4, 5, 6, 1, 5, 8, 8, 6, 1, 5, 7, 3, 2, 7, 5, 8, 8, 8, 6};
    CHECK(big.list_numbers == expected);
}

TEST_CASE("remainder_sequence examples") {
    auto r = remainder_sequence(Fraction::make(7, 13), 3, 2);
    CHECK(r.remainders == std::vector<Int>{7, 8, 11});

    auto r43 = remainder_sequence(Fraction::make(1, 43), 2, 1);
    CHECK(r43.remainders.size() == 14);
    std::set<Int> sorted(r43.remainders.begin(), r43.remainders.end());
    std::set<Int> expected{1, 2, 4, 8, 11, 16, 21, 22, 27, 32, 35, 39, 41, 42};
    CHECK(sorted == expected);
    CHECK(r43.remainders.front() == 1);
}

TEST_CASE("word_from_remainder examples") {
    CHECK(word_from_remainder(7, 13, 3, 2) == 4);
    CHECK(word_from_remainder(8, 13, 3, 2) == 5);
    CHECK(word_from_remainder(11, 13, 3, 2) == 7);
    CHECK_THROWS_AS(word_from_remainder(0, 13, 3, 2), std::domain_error);
    CHECK_THROWS_AS(word_from_remainder(13, 13, 3, 2), std::domain_error);
}

TEST_CASE("rotate_left") {
    CHECK(rotate_left(word_of("1121"), 1) == word_of("1211"));
    Word w = word_of("012345");
    CHECK(rotate_left(w, w.size()) == w);
    CHECK(rotate_left(w, 0) == w);
}

TEST_CASE("expansion agrees with the long-division oracle") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 200; ++i) {
        Fraction f = random_proper(rng, 500);
        Int g = 2 + static_cast<unsigned long>(rng() % 9);
        auto s = summary(f, g);
        auto e = oracle::expand(f.num, f.den, g);
        CHECK(s.transient == e.transient);
        CHECK(s.repetend == e.repetend);
    }
}

TEST_CASE("digit budget is a hard error, not truncation") {
    // ord_2(3^12) = 2*3^11 = 354294 > budget 1000
    Int den;
    mpz_pow_ui(den.get_mpz_t(), Int(3).get_mpz_t(), 12);
    CHECK_THROWS_AS(enlarged_repetend(Fraction::make(1, den), 2, 1, 1000), budget_error);
}
