#include "repetend/transition.hpp"

#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "fixtures.hpp"

using namespace repetend;

namespace {

Int pow_int(unsigned long x, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), Int(x).get_mpz_t(), e);
    return r;
}

}  // namespace

TEST_CASE("transition_matrix matches the printed W_1") {
    auto w = transition_matrix(3, 13, 2, 1);
    CHECK(w.u_t == 4);
    CHECK(w.base_entry == 1);
    REQUIRE(w.entries.size() == 9);
    for (std::size_t s = 0; s < 9; ++s)
        for (std::size_t c = 0; c < 9; ++c)
            CHECK(w.entries[s][c] == fixtures::kW1[s][c]);
}

TEST_CASE("W_{t0} has identity block structure") {
    // ord of 13 mod 9 is 3
    auto w = transition_matrix(3, 13, 2, 3);
    CHECK(w.u_t == 1);
    for (std::size_t s = 0; s < 9; ++s)
        for (std::size_t c = 0; c < 9; ++c)
            CHECK(w.entries[s][c] == w.base_entry + (s == c ? 1 : 0));
}

TEST_CASE("row and column sums equal b^t, entries take two values") {
    std::mt19937_64 rng(909);
    int done = 0;
    while (done < 30) {
        unsigned long g = 2 + rng() % 4;
        unsigned long b = 2 + rng() % 30;
        unsigned j = 1 + rng() % 2;
        unsigned t = 1 + rng() % 3;
        if (gcd(Int(g), Int(b)) != 1) continue;
        Int gj = pow_int(g, j);
        if (gj > 100) continue;
        auto w = transition_matrix(g, b, j, t);
        Int bt = pow_int(b, t);
        Int q = bt / gj;
        std::vector<Int> colsum(w.entries.size(), Int(0));
        for (std::size_t s = 0; s < w.entries.size(); ++s) {
            Int rowsum = 0;
            for (std::size_t c = 0; c < w.entries.size(); ++c) {
                const Int& e = w.entries[s][c];
                CHECK((e == q || e == q + 1));
                rowsum += e;
                colsum[c] += e;
            }
            CHECK(rowsum == bt);
        }
        for (const Int& cs : colsum) CHECK(cs == bt);
        // W_t - H is 0/1 with exactly u_t ones per column
        for (std::size_t c = 0; c < w.entries.size(); ++c) {
            Int ones = 0;
            for (std::size_t s = 0; s < w.entries.size(); ++s)
                ones += w.entries[s][c] - q;
            CHECK(ones == w.u_t);
        }
        ++done;
    }
}

TEST_CASE("evolve reproduces V_2 and V_5") {
    auto v1 = frequency_vector(Fraction::make(7, 13), 3, 2);

    auto v2 = evolve(v1, 13, 1, 1);
    CHECK(v2.counts == std::vector<Int>{3, 6, 3, 5, 4, 5, 4, 4, 5});
    CHECK(v2.frac.den == 169);

    auto v5 = evolve(v1, 13, 1, 4);
    CHECK(v5.counts ==
          std::vector<Int>{9519, 9522, 9519, 9521, 9520, 9521, 9520, 9520, 9521});
    CHECK(v5.total == 85683);

    auto v5m = evolve(v1, 13, 1, 4, EvolveMethod::matrix);
    CHECK(v5m.counts == v5.counts);

    auto same = evolve(v1, 13, 1, 0);
    CHECK(same.counts == v1.counts);
}

TEST_CASE("evolve verifies the k >= c_g(b) hypothesis") {
    // c_3(26) = 3 but k = 1
    auto v = frequency_vector(Fraction::make(1, 26), 3, 2);
    CHECK_THROWS_AS(evolve(v, 26, 1, 1), std::domain_error);
    CHECK_NOTHROW(evolve(v, 26, 1, 1, EvolveMethod::closed_form, /*unchecked=*/true));
}

TEST_CASE("matrix_power_check") {
    CHECK(matrix_power_check(3, 13, 2, 2));
    CHECK(matrix_power_check(3, 13, 2, 1));
    CHECK(matrix_power_check(2, 5, 2, 3));
    CHECK(matrix_power_check(2, 7, 3, 4));
}

TEST_CASE("oscillation_bound of 7/13") {
    auto ob = oscillation_bound(Fraction::make(7, 13), 3, 2);
    CHECK(ob.t0 == 3);
    CHECK(ob.samples == std::vector<Int>{1, 3, 2});
    CHECK(ob.bound == 3);
    CHECK(ob.c == 1);

    auto obj1 = oscillation_bound(Fraction::make(7, 13), 3, 1);
    CHECK(obj1.t0 == 1);
    CHECK(obj1.bound == 2);  // repetend 112 has digit counts (0,2,1)
}

TEST_CASE("convergence_report for 7/13^k") {
    auto recs = convergence_report({7}, 3, 13, 2, 1, 5);
    REQUIRE(recs.size() == 5);
    std::vector<long> ords{3, 39, 507, 6591, 85683};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(recs[i].ord == ords[i]);
        CHECK(recs[i].reduced_num == 7);
    }
    // k=1: max deviation |1/3 - 1/9| = 2/9
    CHECK(recs[0].max_deviation == Rat(2, 9));
    // k=2: 6/39 - 1/9
    CHECK(recs[1].max_deviation == Rat(6, 39) - Rat(1, 9));
    CHECK_FALSE(recs[0].full_complexity);
    CHECK(recs[1].full_complexity);  // first full complexity at k=2
    for (const auto& r : recs) {
        CHECK(r.envelope == Rat(3) / r.ord);
        CHECK(r.max_deviation <= r.envelope);
    }
}

TEST_CASE("convergence_report reduces through the g-free part") {
    // 7/12^k in base 10 reduces to numerators over 3^k
    auto recs = convergence_report({7}, 10, 12, 1, 1, 3);
    REQUIRE(recs.size() == 3);
    for (const auto& r : recs) {
        Int bpk = pow_int(3, r.k);
        // reduced numerator must reproduce the repetend of 7/12^k
        Fraction orig = Fraction::make(7 % (pow_int(12, r.k)), pow_int(12, r.k));
        auto s = summary(orig, 10);
        Fraction red{r.reduced_num, bpk};
        auto sr = summary(red, 10);
        CHECK(s.repetend == sr.repetend);
    }
    CHECK_THROWS_AS(convergence_report({1}, 10, 8, 1, 1, 2), std::domain_error);
}

TEST_CASE("frequency differences repeat t0 levels apart") {
    // t0 = 3 for b=13, g^j=9: V_{k+3} - V_k differences match
    Int d1 = pow_int(13, 1), d4 = pow_int(13, 4);
    auto va = frequency_vector(Fraction::make(7, d1), 3, 2);
    auto vb = frequency_vector(Fraction::make(7, d4), 3, 2);
    for (std::size_t s = 0; s < 9; ++s)
        for (std::size_t sp = 0; sp < 9; ++sp)
            CHECK(va.counts[s] - va.counts[sp] == vb.counts[s] - vb.counts[sp]);
}
