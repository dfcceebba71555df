#include "repetend/lifting.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace repetend {

namespace {

// One order-tower step: d_k = gcd(h_k, b) from ord_k, without materializing g^ord.
Int step_gcd(const Int& g, const Int& b, unsigned k, const Int& ord_k) {
    Int bk, bk1;
    mpz_pow_ui(bk.get_mpz_t(), b.get_mpz_t(), k);
    bk1 = bk * b;
    Int h_mod_b = (mod_pow(g, ord_k, bk1) - 1) / bk;  // exact: g^ord == 1 mod b^k
    if (h_mod_b == 0) return b;
    return gcd(h_mod_b, b);
}

struct TowerScan {
    std::vector<Int> orders;
    std::vector<Int> step_gcds;
    unsigned c = 1;
};

// Iterates the order tower until the stabilization rule fires: d_k = 1 at two
// consecutive indices with the larger one >= 3 certifies that every later
// step multiplies the order by the full b. Then c = 1 + max{k : d_k != 1}.
TowerScan scan_tower(const Int& g, const Int& b, unsigned k_max, unsigned cap) {
    if (gcd(g, b) != 1) throw std::domain_error("order tower: gcd(g, b) != 1");
    TowerScan out;
    Int ord = multiplicative_order(g, b);
    out.orders.push_back(ord);
    unsigned last_nontrivial = 0;
    bool stabilized = false;
    Int prev_d = 0;
    for (unsigned k = 1; !stabilized || out.orders.size() < k_max; ++k) {
        if (k > cap)
            throw budget_error("order tower: stabilization cap exceeded for b=" +
                               b.get_str());
        Int d = step_gcd(g, b, k, ord);
        if (d != 1) last_nontrivial = k;
        if (k >= 3 && d == 1 && prev_d == 1) stabilized = true;
        prev_d = d;
        ord *= b / d;
        if (out.orders.size() < k_max) {
            out.step_gcds.push_back(d);
            out.orders.push_back(ord);
        }
    }
    out.c = std::max(1u, last_nontrivial + 1);
    return out;
}

Int pow_int(const Int& x, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

}  // namespace

OrderTower order_tower(const Int& g, const Int& b, unsigned k_max,
                       unsigned stabilization_cap) {
    if (k_max == 0) throw std::domain_error("order_tower: k_max must be positive");
    TowerScan scan = scan_tower(g, b, k_max, stabilization_cap);
    OrderTower out;
    out.g = g;
    out.b = b;
    out.orders = std::move(scan.orders);
    out.step_gcds = std::move(scan.step_gcds);
    out.c = scan.c;
    return out;
}

unsigned c_of_b(const Int& g, const Int& b, unsigned stabilization_cap) {
    return scan_tower(g, b, 1, stabilization_cap).c;
}

LiftWitness lift_remainders(const Int& a, const Int& b, unsigned k, const Int& g,
                            unsigned t, std::uint64_t digit_budget) {
    if (k == 0 || t == 0) throw std::domain_error("lift_remainders: k, t must be positive");
    unsigned c = c_of_b(g, b);
    if (k < c)
        throw std::domain_error("lift_remainders: k < c_g(b) = " + std::to_string(c) +
                                ", hypothesis not met");
    Int bk = pow_int(b, k);
    Fraction base = Fraction::make(a, bk);
    Int ord_k = multiplicative_order(g, bk);
    Int bt = pow_int(b, t);
    Int lifted_len = bt * ord_k;
    if (lifted_len > Int(static_cast<unsigned long>(digit_budget)))
        throw budget_error("lift_remainders: lifted length " + lifted_len.get_str() +
                           " exceeds budget");

    std::vector<Int> base_remainders = remainder_sequence(base, g, 1, digit_budget).remainders;

    LiftWitness out;
    out.k = k;
    out.t = t;
    out.entries.reserve(lifted_len.get_ui());
    Int bkt = bk * bt;
    Int r = a % bkt;
    unsigned long ord = ord_k.get_ui();
    for (unsigned long v = 0; v < lifted_len.get_ui(); ++v) {
        std::size_t i = v % ord;
        Int diff = r - base_remainders[i];
        Int n = diff / bk;
        if (n * bk != diff || n < 0 || n >= bt)
            throw std::logic_error("lift_remainders: decomposition failed at v=" +
                                   std::to_string(v));
        out.entries.push_back({r, i, Int(static_cast<unsigned long>(v / ord)), n});
        r = r * g % bkt;
    }
    return out;
}

std::vector<Int> lift_word_set(const std::vector<Int>& words, const Int& g,
                               const Int& b, unsigned j, unsigned t) {
    Int gj = pow_int(g, j);
    Int bt = pow_int(b, t);
    Int inv = mod_inverse(mod_pow(b, Int(static_cast<unsigned long>(t)), gj), gj);
    // Only n mod g^j matters; when b^t >= g^j the shift covers every residue.
    Int n_limit = bt < gj ? bt : gj;
    std::set<Int> acc;
    for (const Int& s : words) {
        for (Int n = 0; n < n_limit; ++n) {
            Int e = (s - n) % gj;
            if (e < 0) e += gj;
            acc.insert(e * inv % gj);
        }
    }
    return {acc.begin(), acc.end()};
}

std::vector<std::vector<Int>> e_matrix(const Int& g, const Int& b, unsigned j,
                                       unsigned t, std::uint64_t cell_cap) {
    Int gj = pow_int(g, j);
    Int bt = pow_int(b, t);
    if (gj * bt > Int(static_cast<unsigned long>(cell_cap)))
        throw cap_error("e_matrix: g^j * b^t exceeds cell cap");
    Int inv = mod_inverse(mod_pow(b, Int(static_cast<unsigned long>(t)), gj), gj);
    std::vector<std::vector<Int>> out(gj.get_ui());
    for (unsigned long s = 0; s < gj.get_ui(); ++s) {
        auto& row = out[s];
        row.reserve(bt.get_ui());
        for (Int n = 0; n < bt; ++n) {
            Int e = (Int(static_cast<unsigned long>(s)) - n) % gj;
            if (e < 0) e += gj;
            row.push_back(e * inv % gj);
        }
    }
    return out;
}

}  // namespace repetend
