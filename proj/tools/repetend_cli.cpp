// Command-line surface over the repetend library.
//
// JSON output is canonical: keys sorted, every big integer rendered as a
// decimal string, no timestamps. Identical configs produce identical bytes,
// which is why timings appear only under `bench` (its records are expected
// to vary run to run).
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "repetend/criterion.hpp"
#include "repetend/lifting.hpp"
#include "repetend/transition.hpp"

using json = nlohmann::json;
using namespace repetend;

namespace {

struct Globals {
    std::string format = "json";
    std::uint64_t digit_budget = kDefaultDigitBudget;
    std::uint64_t matrix_cap = kDefaultMatrixCap;
    unsigned precision = 12;
    std::uint64_t seed = 1;
};

Int pow_int(const Int& x, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

json jint(const Int& x) { return x.get_str(); }

json jints(const std::vector<Int>& xs) {
    json a = json::array();
    for (const Int& x : xs) a.push_back(jint(x));
    return a;
}

// Digits as one string for g <= 10, dot-separated otherwise.
std::string word_str(const Word& w, const Int& g) {
    std::string out;
    bool wide = g > 10;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (wide && i > 0) out.push_back('.');
        if (wide)
            out += std::to_string(w[i]);
        else
            out.push_back(static_cast<char>('0' + w[i]));
    }
    return out;
}

// Exact decimal rendering, round half up.
std::string rat_decimal(const Rat& r, unsigned prec) {
    Rat x = r;
    bool neg = x < 0;
    if (neg) x = -x;
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, prec);
    Int num = x.get_num() * scale;
    Int q = num / x.get_den();
    if ((num % x.get_den()) * 2 >= x.get_den()) q += 1;
    Int ip = q / scale, fp = q % scale;
    std::string f = fp.get_str();
    f.insert(f.begin(), prec - f.size(), '0');
    return (neg ? "-" : "") + ip.get_str() + "." + f;
}

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("not an integer: " + s);
    }
}

void emit(const Globals& gl, const std::string& command, const json& config,
          const json& result, const json& diagnostics,
          const std::vector<std::string>& table_lines) {
    if (gl.format == "json") {
        json root;
        root["command"] = command;
        root["config"] = config;
        root["result"] = result;
        root["diagnostics"] = diagnostics;
        std::cout << root.dump(2) << "\n";
    } else {
        for (const auto& line : table_lines) std::cout << line << "\n";
    }
}

json diag_zero() { return json{{"budget_used", jint(0)}}; }

std::string bucket_name(Bucket b) {
    switch (b) {
        case Bucket::complexity: return "complexity";
        case Bucket::no_complexity: return "no-complexity";
        default: return "undecided-region";
    }
}

// ---- expand ----------------------------------------------------------------

int cmd_expand(const Globals& gl, const Int& g, const Int& a, const Int& b) {
    Fraction f = Fraction::make(a, b, /*allow_improper=*/true);
    ExpansionSummary s = summary(f, g, gl.digit_budget);

    std::uint64_t preview_len = 64;
    auto d = digits(f, g, preview_len);

    json cfg{{"g", jint(g)}, {"num", jint(a)}, {"den", jint(b)}};
    json res;
    res["integer_part"] = jint(s.integer_part);
    res["transient"] = word_str(s.transient, g);
    res["repetend"] = word_str(s.repetend, g);
    res["period"] = jint(s.period);
    res["terminating"] = s.repetend.empty();
    if (s.reduced)
        res["reduced"] = json{{"num", jint(s.reduced->num)},
                              {"den", jint(s.reduced->den)}};
    else
        res["reduced"] = nullptr;
    res["g_free_part"] = jint(s.split.b_free);
    res["transient_length"] = s.split.transient_len;
    res["digits_preview"] = word_str(d.digits, g);

    json diag{{"budget_used",
               jint(s.period + static_cast<long>(s.transient.size()))}};

    std::vector<std::string> lines;
    lines.push_back("expansion of " + a.get_str() + "/" + b.get_str() +
                    " in base " + g.get_str());
    lines.push_back("  integer part: " + s.integer_part.get_str());
    lines.push_back("  transient:    " + word_str(s.transient, g));
    lines.push_back("  repetend:     " + word_str(s.repetend, g));
    lines.push_back("  period:       " + s.period.get_str());
    if (s.reduced)
        lines.push_back("  reduced:      " + s.reduced->num.get_str() + "/" +
                        s.reduced->den.get_str());
    emit(gl, "expand", cfg, res, diag, lines);
    return 0;
}

// ---- words -----------------------------------------------------------------

int cmd_words(const Globals& gl, const Int& g, const Int& a, const Int& b,
              unsigned j) {
    Fraction f = Fraction::make(a, b);
    auto seq = word_sequence(f, g, j, gl.digit_budget);
    auto vec = frequency_vector(f, g, j, gl.digit_budget);
    auto st = stats(vec);

    json cfg{{"g", jint(g)}, {"num", jint(a)}, {"den", jint(b)}, {"j", j}};
    json res;
    res["list_numbers"] = jints(seq.list_numbers);
    res["counts"] = jints(vec.counts);
    res["total"] = jint(vec.total);
    res["min_count"] = jint(st.min_count);
    res["max_count"] = jint(st.max_count);
    res["oscillation"] = jint(st.oscillation);
    res["full_complexity"] = st.full_complexity;
    json rel = json::array();
    for (const Rat& r : st.relative) rel.push_back(rat_decimal(r, gl.precision));
    res["relative"] = rel;

    json diag{{"budget_used", jint(vec.total + j - 1)}};

    std::vector<std::string> lines;
    lines.push_back("j-word statistics of " + a.get_str() + "/" + b.get_str() +
                    " in base " + g.get_str() + ", j=" + std::to_string(j));
    std::string nums = "  sequence:";
    for (const Int& s : seq.list_numbers) nums += " " + s.get_str();
    lines.push_back(nums);
    std::string cts = "  counts:  ";
    for (const Int& c : vec.counts) cts += " " + c.get_str();
    lines.push_back(cts);
    lines.push_back("  oscillation: " + st.oscillation.get_str());
    lines.push_back(std::string("  full complexity: ") +
                    (st.full_complexity ? "yes" : "no"));
    emit(gl, "words", cfg, res, diag, lines);
    return 0;
}

// ---- cgb -------------------------------------------------------------------

int cmd_cgb(const Globals& gl, const std::vector<std::string>& gs,
            unsigned long b_max) {
    std::vector<Int> bases;
    for (const auto& s : gs) bases.push_back(parse_int(s));
    if (bases.empty()) bases = {2, 3, 5, 7, 10};

    json cfg;
    {
        json ga = json::array();
        for (const Int& g : bases) ga.push_back(jint(g));
        cfg["g"] = ga;
        cfg["b_max"] = b_max;
    }
    json rows = json::array();
    std::vector<std::string> lines;
    {
        std::string head = "   b";
        for (const Int& g : bases) head += "  g=" + g.get_str();
        lines.push_back(head);
    }
    for (unsigned long b = 2; b <= b_max; ++b) {
        json row;
        row["b"] = jint(b);
        json cells = json::array();
        std::string line = (b < 10 ? "   " : (b < 100 ? "  " : " ")) +
                           std::to_string(b);
        for (const Int& g : bases) {
            if (gcd(g, Int(b)) != 1) {
                cells.push_back(nullptr);
                line += "    .";
            } else {
                unsigned c = c_of_b(g, b);
                cells.push_back(c);
                line += "    " + std::to_string(c);
            }
        }
        row["c"] = cells;
        rows.push_back(row);
        lines.push_back(line);
    }
    json res{{"rows", rows}};
    json diag{{"budget_used", jint(0)}};
    emit(gl, "cgb", cfg, res, diag, lines);
    return 0;
}

// ---- transition ------------------------------------------------------------

int cmd_transition(const Globals& gl, const Int& g, const Int& b, unsigned j,
                   unsigned t) {
    auto w = transition_matrix(g, b, j, t, gl.matrix_cap);
    json cfg{{"g", jint(g)}, {"b", jint(b)}, {"j", j}, {"t", t}};
    json res;
    res["u_t"] = jint(w.u_t);
    res["base_entry"] = jint(w.base_entry);
    json rows = json::array();
    for (const auto& r : w.entries) rows.push_back(jints(r));
    res["entries"] = rows;

    std::vector<std::string> lines;
    lines.push_back("W_" + std::to_string(t) + " for g=" + g.get_str() +
                    ", b=" + b.get_str() + ", j=" + std::to_string(j) +
                    "  (u_t=" + w.u_t.get_str() + ")");
    for (const auto& r : w.entries) {
        std::string line = " ";
        for (const Int& e : r) line += " " + e.get_str();
        lines.push_back(line);
    }
    emit(gl, "transition", cfg, res, diag_zero(), lines);
    return 0;
}

// ---- evolve ----------------------------------------------------------------

int cmd_evolve(const Globals& gl, const Int& g, const Int& a, const Int& b,
               unsigned j, unsigned k_max, const std::string& method) {
    json cfg{{"g", jint(g)}, {"num", jint(a)}, {"den", jint(b)},
             {"j", j},       {"k_max", k_max}, {"method", method}};

    auto direct = convergence_report({a}, g, b, j, 1, k_max, gl.digit_budget);

    bool coprime = gcd(g, b) == 1;
    unsigned c = coprime ? c_of_b(g, b) : 0;
    bool matrix_possible = coprime && c <= k_max;

    // Closed-form path: enumerate once at k=c, evolve level by level.
    std::vector<std::vector<Int>> matrix_counts(k_max + 1);
    if ((method == "matrix" || method == "both") && matrix_possible) {
        auto v = frequency_vector(Fraction::make(a % pow_int(b, c), pow_int(b, c)),
                                  g, j, gl.digit_budget);
        matrix_counts[c] = v.counts;
        for (unsigned k = c; k < k_max; ++k) {
            v = evolve(v, b, k, 1, EvolveMethod::closed_form, false, gl.matrix_cap);
            matrix_counts[k + 1] = v.counts;
        }
    }

    bool mismatch = false;
    json rows = json::array();
    std::vector<std::string> lines;
    lines.push_back("frequency vectors of " + a.get_str() + "/" + b.get_str() +
                    "^k in base " + g.get_str() + ", j=" + std::to_string(j));
    std::uint64_t digits_used = 0;
    for (const auto& rec : direct) {
        json row;
        row["k"] = rec.k;
        row["ord"] = jint(rec.ord);
        row["sigma"] = jint(rec.sigma);
        row["full_complexity"] = rec.full_complexity;
        row["max_deviation"] = rat_decimal(rec.max_deviation, gl.precision);
        digits_used += rec.ord.get_ui();

        Fraction fk = Fraction::make(rec.reduced_num,
                                     pow_int(g_split(g, b).b_free, rec.k));
        std::vector<Int> counts;
        if (method != "matrix" || matrix_counts[rec.k].empty())
            counts = frequency_vector(fk, g, j, gl.digit_budget).counts;
        if (!matrix_counts[rec.k].empty()) {
            if (method == "both" && !counts.empty() &&
                counts != matrix_counts[rec.k])
                mismatch = true;
            if (counts.empty()) counts = matrix_counts[rec.k];
            row["paths"] = "both";
        } else {
            row["paths"] = "direct";
            if (method == "matrix")
                row["notice"] = coprime ? "level below c_g(b), direct only"
                                        : "b shares a factor with g, direct only";
        }
        row["counts"] = jints(counts);
        rows.push_back(row);

        std::string line = "  V_" + std::to_string(rec.k) + " = (";
        for (std::size_t i = 0; i < counts.size(); ++i)
            line += (i ? "," : "") + counts[i].get_str();
        line += ")  sigma=" + rec.sigma.get_str();
        lines.push_back(line);
    }

    json res;
    res["rows"] = rows;
    res["c"] = coprime ? json(c) : json(nullptr);
    res["agreement"] = !mismatch;
    json diag{{"budget_used", jint(static_cast<unsigned long>(digits_used))}};
    if (mismatch) lines.push_back("MISMATCH between direct and matrix paths");
    emit(gl, "evolve", cfg, res, diag, lines);
    return mismatch ? 1 : 0;
}

// ---- criterion -------------------------------------------------------------

int cmd_criterion(const Globals& gl, const Int& g, const Int& a, const Int& b,
                  unsigned j) {
    Fraction f = Fraction::make(a, b);
    auto verdict = criterion(f, g, j, gl.digit_budget);
    auto gp = gap_profile(f, g, gl.digit_budget);

    json cfg{{"g", jint(g)}, {"num", jint(a)}, {"den", jint(b)}, {"j", j}};
    json res;
    res["bucket"] = bucket_name(verdict.bucket);
    res["resolved"] = verdict.resolved;
    res["complexity"] = verdict.complexity;
    res["gap"] = jint(verdict.gap);
    res["block_floor"] = jint(verdict.block_floor);
    res["residues"] = jints(gp.residues_sorted);
    if (pow_int(g, j) <= b) {
        auto ms = master_sequence(g, b, j);
        json widths = json::array();
        for (std::size_t s = 0; s + 1 < ms.t.size(); ++s)
            widths.push_back(jint(ms.t[s + 1] - ms.t[s]));
        res["block_widths"] = widths;
    } else {
        res["block_widths"] = nullptr;
    }
    if (verdict.witness) {
        json w;
        w["ok"] = verdict.witness->ok;
        w["width_condition"] = verdict.witness->width_condition;
        if (verdict.witness->first_empty_interval)
            w["first_empty_interval"] =
                static_cast<std::uint64_t>(*verdict.witness->first_empty_interval);
        else
            w["first_empty_interval"] = nullptr;
        res["interval_witness"] = w;
    } else {
        res["interval_witness"] = nullptr;
    }

    std::vector<std::string> lines;
    lines.push_back("criterion for " + a.get_str() + "/" + b.get_str() +
                    " in base " + g.get_str() + ", j=" + std::to_string(j));
    lines.push_back("  gap G:        " + verdict.gap.get_str());
    lines.push_back("  floor(b/g^j): " + verdict.block_floor.get_str());
    lines.push_back("  bucket:       " + bucket_name(verdict.bucket));
    lines.push_back(std::string("  full complexity: ") +
                    (verdict.complexity ? "yes" : "no"));
    json diag{{"budget_used", jint(gp.coverage_length)}};
    emit(gl, "criterion", cfg, res, diag, lines);
    return 0;
}

// ---- lift ------------------------------------------------------------------

int cmd_lift(const Globals& gl, const Int& g, const Int& a, const Int& b,
             unsigned k, unsigned t, unsigned j) {
    auto w = lift_remainders(a, b, k, g, t, gl.digit_budget);

    json cfg{{"g", jint(g)}, {"num", jint(a)}, {"den", jint(b)},
             {"k", k},       {"t", t},         {"j", j}};
    json res;
    res["entry_count"] = static_cast<std::uint64_t>(w.entries.size());
    json preview = json::array();
    std::size_t shown = std::min<std::size_t>(w.entries.size(), 32);
    for (std::size_t v = 0; v < shown; ++v) {
        const auto& e = w.entries[v];
        preview.push_back(json{{"v", static_cast<std::uint64_t>(v)},
                               {"lifted", jint(e.lifted)},
                               {"base_index",
                                static_cast<std::uint64_t>(e.base_index)},
                               {"m", jint(e.m)},
                               {"n", jint(e.n)}});
    }
    res["entries_preview"] = preview;

    if (j > 0) {
        auto vk = frequency_vector(Fraction::make(a % pow_int(b, k), pow_int(b, k)),
                                   g, j, gl.digit_budget);
        std::vector<Int> words;
        for (std::size_t s = 0; s < vk.counts.size(); ++s)
            if (vk.counts[s] > 0) words.push_back(Int(static_cast<unsigned long>(s)));
        res["word_set"] = jints(words);
        res["lifted_word_set"] = jints(lift_word_set(words, g, b, j, t));
    }

    std::vector<std::string> lines;
    lines.push_back("lift of " + a.get_str() + "/" + b.get_str() + "^" +
                    std::to_string(k) + " to level " + std::to_string(k + t));
    lines.push_back("  lifted remainders: " + std::to_string(w.entries.size()));
    for (std::size_t v = 0; v < shown; ++v) {
        const auto& e = w.entries[v];
        lines.push_back("  r'_" + std::to_string(v) + " = " + e.lifted.get_str() +
                        " = r_" + std::to_string(e.base_index) + " + " +
                        e.n.get_str() + "*b^k");
    }
    json diag{{"budget_used",
               jint(static_cast<unsigned long>(w.entries.size()))}};
    emit(gl, "lift", cfg, res, diag, lines);
    return 0;
}

// ---- bench -----------------------------------------------------------------

struct BenchCase {
    Int g, a, b;
    unsigned j, k, t;
};

json run_bench_case(const BenchCase& bc, const Globals& gl, bool& agreement,
                    std::vector<std::string>& lines) {
    using clock = std::chrono::steady_clock;
    Int den_k = pow_int(bc.b, bc.k), den_kt = pow_int(bc.b, bc.k + bc.t);

    auto t0 = clock::now();
    auto direct = frequency_vector(Fraction::make(bc.a % den_kt, den_kt), bc.g,
                                   bc.j, gl.digit_budget);
    auto t1 = clock::now();
    auto vk = frequency_vector(Fraction::make(bc.a % den_k, den_k), bc.g, bc.j,
                               gl.digit_budget);
    std::uint64_t matrix_work = 0;
    auto t2 = clock::now();
    auto evolved = evolve(vk, bc.b, bc.k, bc.t, EvolveMethod::closed_form, false,
                          gl.matrix_cap, &matrix_work);
    auto t3 = clock::now();

    bool ok = evolved.counts == direct.counts;
    agreement = agreement && ok;

    auto ms = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };
    std::string id = "g=" + bc.g.get_str() + ",a=" + bc.a.get_str() + ",b=" +
                     bc.b.get_str() + ",j=" + std::to_string(bc.j) + ",k=" +
                     std::to_string(bc.k) + ",t=" + std::to_string(bc.t);
    json rec;
    rec["id"] = id;
    rec["direct_work"] = jint(direct.total);  // digits generated
    rec["matrix_work"] = matrix_work;         // closed-form summand additions
    rec["direct_time_ms"] = ms(t0, t1);
    rec["matrix_time_ms"] = ms(t2, t3);
    rec["agreement"] = ok;
    lines.push_back("  " + id + "  direct_work=" + direct.total.get_str() +
                    " matrix_work=" + std::to_string(matrix_work) +
                    (ok ? "  ok" : "  DISAGREEMENT"));
    return rec;
}

int cmd_bench(const Globals& gl, const std::vector<std::string>& gs,
              const std::vector<std::string>& as,
              const std::vector<std::string>& bs, unsigned j, unsigned k,
              unsigned t, unsigned cases) {
    std::vector<BenchCase> list;
    if (!gs.empty()) {
        list.push_back({parse_int(gs[0]), parse_int(as.at(0)), parse_int(bs.at(0)),
                        j, k, t});
    } else {
        std::mt19937_64 rng(gl.seed);
        while (list.size() < cases) {
            BenchCase bc;
            unsigned long g = 2 + rng() % 9;
            unsigned long b = 2 + rng() % 49;
            unsigned long a = 1 + rng() % (b - 1 + (b == 2));
            if (gcd(Int(g), Int(b)) != 1 || gcd(Int(a), Int(b)) != 1) continue;
            bc.g = g;
            bc.a = a;
            bc.b = b;
            bc.j = 1 + rng() % 3;
            if (pow_int(bc.g, bc.j) > 1000) continue;
            bc.k = c_of_b(bc.g, bc.b);
            bc.t = rng() % 3;
            if (order_tower(bc.g, bc.b, bc.k + bc.t + 1)
                    .orders[bc.k + bc.t - 1] > 500'000)
                continue;
            list.push_back(bc);
        }
    }

    json cfg;
    cfg["cases"] = static_cast<std::uint64_t>(list.size());
    cfg["seed"] = gl.seed;
    bool agreement = true;
    json records = json::array();
    std::vector<std::string> lines;
    lines.push_back("bench: closed-form evolution vs direct enumeration");
    for (const auto& bc : list)
        records.push_back(run_bench_case(bc, gl, agreement, lines));
    json res;
    res["records"] = records;
    res["agreement"] = agreement;
    lines.push_back(agreement ? "all cases agree" : "DISAGREEMENT detected");
    json diag{{"budget_used", jint(0)}};
    emit(gl, "bench", cfg, res, diag, lines);
    return agreement ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact g-ary repetend toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals gl;
    app.add_option("--format", gl.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--digit-budget", gl.digit_budget, "max digits per expansion")
        ->envname("REPETEND_DIGIT_BUDGET");
    app.add_option("--matrix-cap", gl.matrix_cap, "largest allowed g^j");
    app.add_option("--precision", gl.precision, "decimal digits for ratios");
    app.add_option("--seed", gl.seed, "seed for generated case batches");

    std::string g_s = "10", a_s = "1", b_s = "2";
    unsigned j = 1, k = 1, t = 1, k_max = 5, cases = 100;
    unsigned long b_max = 100;
    std::string method = "both";
    std::vector<std::string> g_list, a_list, b_list;

    auto* expand = app.add_subcommand("expand", "transient, repetend and period");
    expand->add_option("--g", g_s, "base")->required();
    expand->add_option("--num", a_s, "numerator")->required();
    expand->add_option("--den", b_s, "denominator")->required();

    auto* words = app.add_subcommand("words", "j-word sequence and frequencies");
    words->add_option("--g", g_s)->required();
    words->add_option("--num", a_s)->required();
    words->add_option("--den", b_s)->required();
    words->add_option("--j", j)->required();

    auto* cgb = app.add_subcommand("cgb", "stabilization constant table");
    cgb->add_option("--g", g_list, "bases (default 2 3 5 7 10)");
    cgb->add_option("--b-max", b_max, "largest b");

    auto* transition = app.add_subcommand("transition", "transition matrix W_t");
    transition->add_option("--g", g_s)->required();
    transition->add_option("--b", b_s)->required();
    transition->add_option("--j", j)->required();
    transition->add_option("--t", t);

    auto* evolve_cmd = app.add_subcommand("evolve", "per-level frequency vectors");
    evolve_cmd->add_option("--g", g_s)->required();
    evolve_cmd->add_option("--num", a_s)->required();
    evolve_cmd->add_option("--den", b_s)->required();
    evolve_cmd->add_option("--j", j)->required();
    evolve_cmd->add_option("--k-max", k_max);
    evolve_cmd->add_option("--method", method)
        ->check(CLI::IsMember({"both", "matrix", "direct"}));

    auto* crit = app.add_subcommand("criterion", "full-complexity trichotomy");
    crit->add_option("--g", g_s)->required();
    crit->add_option("--num", a_s)->required();
    crit->add_option("--den", b_s)->required();
    crit->add_option("--j", j)->required();

    auto* lift = app.add_subcommand("lift", "remainder and word-set lifting");
    lift->add_option("--g", g_s)->required();
    lift->add_option("--num", a_s)->required();
    lift->add_option("--den", b_s)->required();
    lift->add_option("--k", k);
    lift->add_option("--t", t);
    lift->add_option("--j", j, "also lift the j-word set (0 = skip)");

    auto* bench = app.add_subcommand("bench", "closed form vs direct enumeration");
    bench->add_option("--g", g_list, "base of a single explicit case");
    bench->add_option("--num", a_list);
    bench->add_option("--den", b_list);
    bench->add_option("--j", j);
    bench->add_option("--k", k);
    bench->add_option("--t", t);
    bench->add_option("--cases", cases, "size of the seeded batch");

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed())
            return cmd_expand(gl, parse_int(g_s), parse_int(a_s), parse_int(b_s));
        if (words->parsed())
            return cmd_words(gl, parse_int(g_s), parse_int(a_s), parse_int(b_s), j);
        if (cgb->parsed()) return cmd_cgb(gl, g_list, b_max);
        if (transition->parsed())
            return cmd_transition(gl, parse_int(g_s), parse_int(b_s), j, t);
        if (evolve_cmd->parsed())
            return cmd_evolve(gl, parse_int(g_s), parse_int(a_s), parse_int(b_s),
                              j, k_max, method);
        if (crit->parsed())
            return cmd_criterion(gl, parse_int(g_s), parse_int(a_s),
                                 parse_int(b_s), j);
        if (lift->parsed())
            return cmd_lift(gl, parse_int(g_s), parse_int(a_s), parse_int(b_s), k,
                            t, j);
        if (bench->parsed())
            return cmd_bench(gl, g_list, a_list, b_list, j, k, t, cases);
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 1;
    } catch (const cap_error& e) {
        std::cerr << "cap error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
