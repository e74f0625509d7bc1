#include "thompsonv/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "support.hpp"
#include "support2v.hpp"
#include "support_circuits.hpp"
#include "support_monoid.hpp"
#include "thompsonv/brin2v.hpp"
#include "thompsonv/circuits.hpp"
#include "thompsonv/codes.hpp"
#include "thompsonv/fixators.hpp"
#include "thompsonv/monoid.hpp"
#include "thompsonv/recognizer.hpp"

namespace thompsonv {

namespace ts = testsupport;

namespace {

// Wall-clock budgets in seconds, one per criterion.
constexpr double kLimit[11] = {0, 1, 60, 60, 60, 60, 120, 120, 60, 60, 60};
// Recognizer work bound: steps <= c (input symbols + pushes).
constexpr std::size_t kRecognizerConstant = 2;

std::vector<GenWord> words_up_to(const GenSet& s, std::size_t maxlen) {
    std::vector<GenWord> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() == maxlen) continue;
        for (const auto& n : s.names())
            for (bool inv : {false, true}) out.push_back(concat(out[i], {Token::gen(n, inv)}));
    }
    return out;
}

std::vector<BitString> strings_between(std::size_t lo, std::size_t hi) {
    std::vector<BitString> out;
    for (std::size_t l = lo; l <= hi; ++l)
        for (auto& x : all_words(l)) out.push_back(x);
    return out;
}

struct Tally {
    std::ostringstream text;
    bool ok = true;
    // Records "name=count"; the criterion holds only if every such count is zero.
    void zero(const std::string& name, std::size_t count) {
        sep();
        text << name << "=" << count;
        ok = ok && count == 0;
    }
    void info(const std::string& name, const std::string& value) {
        sep();
        text << name << "=" << value;
    }
    void require(const std::string& name, bool cond) {
        sep();
        text << name << "=" << (cond ? "yes" : "no");
        ok = ok && cond;
    }
    void sep() {
        if (text.tellp() > 0) text << ", ";
    }
};

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

NTable ntable(std::initializer_list<std::pair<const char*, const char*>> rows, NFlavor fl) {
    std::vector<std::pair<Tuple, Tuple>> out;
    for (auto [a, b] : rows) out.emplace_back(Tuple::parse(a), Tuple::parse(b));
    return NTable::validate(out, fl);
}

void worked_example(Tally& t) {
    auto F = ntable({{"(0,0)", "(0,0)"}, {"(1,0)", "(1,0)"}, {"(0,1)", "(0,1)"}, {"(1,10)", "(1,11)"}, {"(1,11)", "(1,10)"}},
                    NFlavor::Group);
    auto F1 = ntable({{"(e,0)", "(e,0)"}, {"(0,1)", "(0,1)"}, {"(1,10)", "(1,11)"}, {"(1,11)", "(1,10)"}}, NFlavor::Group);
    auto F2 = ntable({{"(0,e)", "(0,e)"}, {"(1,0)", "(1,0)"}, {"(1,10)", "(1,11)"}, {"(1,11)", "(1,10)"}}, NFlavor::Group);
    auto F12 = ntable({{"(e,0)", "(e,0)"}, {"(0,e)", "(0,e)"}, {"(1,10)", "(1,11)"}, {"(1,11)", "(1,10)"}},
                      NFlavor::Extension);
    t.require("F->F12", maximal_extension_n(F) == F12);
    t.require("F1->F12", maximal_extension_n(F1) == F12);
    t.require("F2->F12", maximal_extension_n(F2) == F12);
}

void three_deciders(Tally& t, std::mt19937_64& rng) {
    auto s = GenSet::standard();
    std::size_t univ = 0, comm = 0, comm_yes = 0, oracle = 0, cases = 0;
    auto strs = strings_between(0, 2);
    for (const auto& w : words_up_to(s, 3)) {
        std::size_t th = long_input_threshold(w, s);
        for (const auto& x : strs)
            for (const auto& y : strs) {
                bool a = evaluate(w, x, y, s);
                univ += a != evaluate_universal(w, x, y, s);
                bool c = eval_via_commutation(w, x, y, s);
                comm += a != c;
                comm_yes += c && !a;
                oracle += a != ts::naive_eval(w, x, y, s, th > x.size() ? th - x.size() : 0);
                ++cases;
            }
    }
    std::size_t positives = 0;
    for (int n = 0; n < 10000; ++n) {
        auto w = ts::random_word(rng, s, rng() % 7);
        BitString x = ts::random_bits(rng, rng() % 6);
        auto img = apply(word_to_element(w, s), x);
        BitString y = ts::random_bits(rng, rng() % 6);
        if (img.has_value() && img.value.size() <= 5 && rng() % 2) y = img.value;
        bool a = evaluate(w, x, y, s);
        univ += a != evaluate_universal(w, x, y, s);
        bool c = eval_via_commutation(w, x, y, s);
        comm += a != c;
        comm_yes += c && !a;
        positives += a;
        ++cases;
    }
    t.zero("table/universal", univ);
    t.zero("table/commutation", comm);
    t.info("of which commutation says yes", std::to_string(comm_yes));
    t.zero("table/brute-force (exhaustive part)", oracle);
    t.info("instances", std::to_string(cases));
    t.info("random positives", std::to_string(positives));
}

void long_inputs(Tally& t, std::mt19937_64& rng) {
    auto s = GenSet::standard();
    std::size_t not_long = 0, eval_mismatch = 0, naive_mismatch = 0, longs = 0;
    for (int n = 0; n < 10000; ++n) {
        auto w = ts::random_word(rng, s, rng() % 7, 3);
        std::size_t th = long_input_threshold(w, s);
        std::size_t len = (n % 2) ? th + rng() % 3 : rng() % (th + 3);
        BitString x = ts::random_bits(rng, len);
        InputClass c = classify_input(w, x, s);
        if (x.size() >= th && c != InputClass::Long) ++not_long;
        if (c != InputClass::Long) continue;
        ++longs;
        auto seq = sequential_apply(w, x, s);
        auto naive = ts::naive_sequential(w, x, s);
        if (!seq.has_value() || !naive || !(seq.value == *naive)) {
            ++naive_mismatch;
            continue;
        }
        // the value, and a neighbour that must be rejected
        BitString other = seq.value.empty() ? BitString("0") : seq.value.prefix(seq.value.size() - 1);
        if (!evaluate(w, x, seq.value, s) || evaluate(w, x, other, s)) ++eval_mismatch;
    }
    t.zero("above threshold but not Long", not_long);
    t.zero("Long but sequential != brute force", naive_mismatch);
    t.zero("Long but evaluate != sequential", eval_mismatch);
    t.require("short witness a^-1 a at e", classify_input(parse_word("a^-1 a"), BitString(), s) == InputClass::Short);
    t.info("Long inputs", std::to_string(longs));
}

void recognizers(Tally& t) {
    auto s = GenSet::standard();
    Recognizer fwd(s), rev(s, true);
    auto strs = strings_between(0, 4);
    std::size_t fwd_bad = 0, rev_bad = 0, over = 0, accepted = 0;
    double fitted = 0;
    for (const auto& w : words_up_to(s, 3)) {
        if (w.empty()) continue;  // the stream needs at least one generator
        for (const auto& x : strs) {
            auto seq = ts::naive_sequential(w, x, s);
            for (const auto& y : strs) {
                bool want = seq && *seq == y;
                auto a = fwd.run(lv_stream(x, w, y));
                fwd_bad += a.accepted != want;
                rev_bad += rev.run(lv_rev_stream(y, w, x)).accepted != want;
                double ratio = double(a.steps) / double(a.input_symbols + a.pushes);
                fitted = std::max(fitted, ratio);
                over += a.steps > kRecognizerConstant * (a.input_symbols + a.pushes);
                accepted += want;
            }
        }
    }
    t.zero("forward disagreements", fwd_bad);
    t.zero("reverse disagreements", rev_bad);
    t.zero("step bound violations (c=" + std::to_string(kRecognizerConstant) + ")", over);
    t.info("fitted c", fixed(fitted, 3));
    t.info("accepted", std::to_string(accepted));
}

void complements(Tally& t) {
    auto codes = ts::all_prefix_codes(4);
    std::size_t kraft = 0, cover = 0, overlap = 0, deeper = 0, not_equal = 0, candidates = 0;
    for (const auto& w : codes) {
        auto p = PrefixCode::validate(w);
        auto q = complement(p);
        std::vector<BitString> u = p.members();
        u.insert(u.end(), q.begin(), q.end());
        kraft += kraft_sum(u) != 1;
        cover += !ts::covers_exactly_once(u);
        for (const auto& x : q) overlap += p.contains(x);
        if (!p.empty() && !p.is_maximal()) {
            ++candidates;
            deeper += q.maxlen() > p.maxlen();
            not_equal += q.maxlen() != p.maxlen();
        }
    }
    std::size_t single = 0;
    for (std::size_t n = 1; n <= 8; ++n)
        for (const auto& u : all_words(n)) single += complement_single(u).size() != n;
    t.info("codes", std::to_string(codes.size()));
    t.zero("kraft(P u P') != 1", kraft);
    t.zero("not covering exactly once", cover);
    t.zero("P' meets P", overlap);
    t.zero("maxlen(P') > maxlen(P)", deeper);
    t.zero("maxlen(P') != maxlen(P)", not_equal);
    t.info("nonempty non-maximal codes", std::to_string(candidates));
    t.zero("|complement_single(u)| != |u|", single);
}

PrefixCode random_partial_code(std::mt19937_64& rng, std::size_t L) {
    while (true) {
        auto full = ts::random_maximal_code(rng, 8, L);
        std::vector<BitString> keep;
        for (auto& w : full)
            if (rng() % 2) keep.push_back(w);
        if (!keep.empty() && keep.size() < full.size()) return PrefixCode::validate(keep);
    }
}

void commutation(Tally& t, std::mt19937_64& rng) {
    auto s = GenSet::standard();
    std::vector<PrefixCode> codes;
    for (auto& w : ts::all_prefix_codes(2)) {
        auto c = PrefixCode::validate(w);
        if (!c.empty() && !c.is_maximal()) codes.push_back(c);
    }
    std::size_t fix_bad = 0, fix_cases = 0;
    for (const auto& g : ts::all_elements(2))
        for (const auto& p : codes) {
            fix_bad += commutation_membership(g, p, s).member != pfix_membership_direct(g, p);
            ++fix_cases;
        }
    for (int n = 0; n < 500; ++n) {
        auto p = random_partial_code(rng, 4);
        VTable g = ts::random_element(rng, 4);
        if (n % 2) g = fixator_image(fixator_basis(p), g);
        fix_bad += commutation_membership(g, p, s).member != pfix_membership_direct(g, p);
        ++fix_cases;
    }
    std::size_t eval_bad = 0, false_yes = 0, positives = 0;
    for (int n = 0; n < 500; ++n) {
        VTable g = ts::random_element(rng, 4);
        BitString x = ts::random_bits(rng, 1 + rng() % 3);
        BitString y = ts::random_bits(rng, 1 + rng() % 3);
        auto img = apply(g, x);
        if (rng() % 2 && img.has_value() && !img.value.empty() && img.value.size() <= 3) y = img.value;
        bool want = eval_oracle(g, x, y);
        bool got = eval_via_commutation(g, x, y, s);
        eval_bad += want != got;
        false_yes += got && !want;
        positives += want;
    }
    t.zero("membership disagreements", fix_bad);
    t.info("membership cases", std::to_string(fix_cases));
    t.zero("evaluation disagreements", eval_bad);
    t.info("of which commutation says yes, g(x) != y", std::to_string(false_yes));
    t.info("evaluation positives", std::to_string(positives));
}

void circuits(Tally& t, std::mt19937_64& rng) {
    GenSet gadgets = gadget_genset();
    std::size_t sim_bad = 0, not_long = 0, too_big = 0;
    double fitted = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Circuit c = random_circuit(rng, 6, 4, 12);
        auto r = compile_circuit(c);
        for (const auto& x : all_words(c.inputs)) {
            BitString in = BitString("0") + x;
            auto got = ts::naive_sequential(r.word, in, gadgets);
            sim_bad += !(got && *got == BitString("0") + ts::oracle_eval(c, x) + x);
            not_long += classify_input(r.word, in, gadgets) != InputClass::Long;
        }
        double cube = double(c.size()) * double(c.size()) * double(c.size());
        fitted = std::max(fitted, double(r.size) / cube);
        too_big += double(r.size) > circuit_size_constant * cube;
    }
    t.zero("simulation failures", sim_bad);
    t.zero("0x not Long", not_long);
    t.zero("size above c|C|^3 (c=" + fixed(circuit_size_constant, 0) + ")", too_big);
    t.info("fitted c", fixed(fitted, 2));
}

void two_v(Tally& t, std::mt19937_64& rng) {
    using ts::le;
    auto small = ts::tuples_upto(2), big = ts::tuples_upto(4);
    std::size_t join_bad = 0;
    for (auto& u : small)
        for (auto& v : small) {
            auto j = join(u, v);
            std::optional<Tuple> least;
            bool common = false;
            for (auto& z : big)
                if (le(u, z) && le(v, z)) {
                    common = true;
                    if (!least || le(z, *least)) least = z;
                }
            if (j.has_value() != common || (j && !(*j == *least))) ++join_bad;
        }

    std::size_t ess_bad = 0, ess_codes = 0;
    auto check = [&](const TupleCode& p) {
        bool a = is_essential(p), b = is_essential_by_depth(p), o = ts::essential_oracle(p);
        ess_bad += (a != b) || (a != o);
        ++ess_codes;
    };
    for (std::size_t i = 0; i < small.size(); ++i) {
        check({small[i]});
        for (std::size_t j = i + 1; j < small.size(); ++j) {
            if (!code_flavor_checks({small[i], small[j]}).initial_factor) continue;
            check({small[i], small[j]});
            for (std::size_t k = j + 1; k < small.size(); ++k) {
                TupleCode c{small[i], small[j], small[k]};
                if (code_flavor_checks(c).initial_factor) check(c);
            }
        }
    }
    for (int n = 0; n < 500; ++n) check(ts::random_if_code(rng, 3));

    std::size_t q_bad = 0;
    for (int n = 0; n < 200; ++n) {
        NTable f = NTable::identity(2);
        if (n % 4 == 0) {
            f = ts::random_group_table(rng, rng() % 6, 3);
        } else {
            auto d = ts::random_if_code(rng, 2), r = ts::random_if_code(rng, 2);
            std::size_t k = std::min(d.size(), r.size());
            std::shuffle(r.begin(), r.end(), rng);
            std::vector<std::pair<Tuple, Tuple>> pairs;
            for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(d[i], r[i]);
            f = NTable::raw(pairs);
        }
        auto a = table_checks(f), b = table_checks_by_depth(f);
        q_bad += a.function != b.function || a.injective != b.injective || a.total != b.total ||
                 a.surjective != b.surjective || a.group != b.group;
    }

    GenSet std1 = GenSet::standard();
    GenSet2 g2 = embed_genset(std1);
    std::size_t emb_bad = 0, emb_yes = 0;
    for (int n = 0; n < 200; ++n) {
        GenWord w = ts::random_word(rng, std1, 1 + rng() % 3, 3);
        BitString x = ts::random_bits(rng, rng() % 5);
        BitString y = ts::random_bits(rng, rng() % 5);
        if (rng() % 2) {
            BitString xl = x + BitString::zeros(12);
            auto r = sequential_apply(w, xl, std1);
            if (r.has_value()) {
                x = xl;
                y = r.value;
            }
        }
        bool v = evaluate(w, x, y, std1);
        bool v2 = eval2v(embed_v_to_2v(w), Tuple({x, BitString()}), Tuple({y, BitString()}), g2);
        emb_bad += v != v2;
        emb_yes += v;
    }

    // the literal complement construction, reported only
    std::size_t literal_gaps = 0, pairs = 0;
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i + 1; j < small.size(); ++j) {
            TupleCode c{small[i], small[j]};
            if (!code_flavor_checks(c).initial_factor) continue;
            auto q = complement_init_literal(c);
            c.insert(c.end(), q.begin(), q.end());
            ++pairs;
            literal_gaps += !ts::essential_oracle(c);
        }

    t.zero("join characterization", join_bad);
    t.zero("essentiality disagreements", ess_bad);
    t.info("codes", std::to_string(ess_codes));
    t.zero("Q1-Q5 vs depth", q_bad);
    t.zero("embedding disagreements", emb_bad);
    t.info("embedding positives", std::to_string(emb_yes));
    t.info("literal complement leaves gaps", std::to_string(literal_gaps) + "/" + std::to_string(pairs));
}

void factorization(Tally& t, std::mt19937_64& rng) {
    std::size_t bad = 0, over = 0, maxt = 0;
    for (int n = 0; n < 500; ++n) {
        auto g = ts::random_element(rng, 4, 12);
        auto fw = factor_pipeline(g);
        bad += !equals(multiply_out(fw), g);
        over += fw.transpositions() > 3 * fw.perm_size;
        maxt = std::max(maxt, fw.transpositions());
    }
    t.zero("round-trip failures", bad);
    t.zero("more than 3n transpositions", over);
    t.info("most transpositions", std::to_string(maxt));
}

void monoid(Tally& t, std::mt19937_64& rng) {
    MonoidSet std1 = MonoidSet::standard();
    std::size_t dec_bad = 0;
    for (std::size_t lu = 0; lu <= 3; ++lu)
        for (std::size_t lv = 0; lv <= 3; ++lv)
            for (const auto& u : all_words(lu))
                for (const auto& v : all_words(lv)) {
                    GenWord w = decompose_pushpop(v, u);
                    dec_bad += !action_equal_m(word_to_mtable(w, std1), bracket(v, u), lu + lv + 1);
                }
    MonoidSet g = ts::test_set();
    const auto& names = g.names();
    std::size_t red_bad = 0, positives = 0;
    for (int n = 0; n < 500; ++n) {
        GenWord w;
        std::size_t len = rng() % 5;
        for (std::size_t i = 0; i < len; ++i) w.push_back(Token::gen(names[rng() % names.size()]));
        BitString x = ts::random_bits(rng, rng() % 4);
        BitString y = ts::random_bits(rng, rng() % 5);
        if (rng() % 2)
            if (auto v = ts::guess_value(w, x)) y = *v;
        bool want = ts::oracle_eval(w, x, y);
        red_bad += eval_reduction_check(w, x, y, reduction_depth(w, x, y, g), g) != want;
        positives += want;
    }
    t.zero("decomposition failures", dec_bad);
    t.zero("reduction disagreements", red_bad);
    t.info("positives", std::to_string(positives));
}

const char* kTitles[11] = {"",
                           "worked 2V maximal extension example",
                           "three deciders for V evaluation",
                           "long-input semantics",
                           "recognizers vs sequential application",
                           "complementary prefix codes",
                           "commutation tests",
                           "circuit compiler",
                           "2V suite",
                           "factorization round trip",
                           "monoid identities"};

}  // namespace

const std::map<int, std::string>& known_unattainable() {
    static const std::map<int, std::string> k = {
        {2, "the coset test decides 'g maps the x-cylinder onto the y-cylinder', not g(x) = y "
            "(e.g. g = {00->01, 01->00, 1->1}, x = y = 0)"},
        {5, "maxlen(P') = maxlen(P) is false; only <= holds (P = {0000, 0001} gives maxlen 3)"},
        {6, "the evaluation half uses the same coset test as criterion 2"},
    };
    return k;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
    if (id < 1 || id > 10) throw Error(ErrorKind::ParseError, "no acceptance criterion " + std::to_string(id));
    std::mt19937_64 rng(seed * 1000 + static_cast<std::uint64_t>(id));
    Tally t;
    auto start = std::chrono::steady_clock::now();
    switch (id) {
        case 1: worked_example(t); break;
        case 2: three_deciders(t, rng); break;
        case 3: long_inputs(t, rng); break;
        case 4: recognizers(t); break;
        case 5: complements(t); break;
        case 6: commutation(t, rng); break;
        case 7: circuits(t, rng); break;
        case 8: two_v(t, rng); break;
        case 9: factorization(t, rng); break;
        case 10: monoid(t, rng); break;
    }
    CriterionResult r;
    r.id = id;
    r.title = kTitles[id];
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.time_limit = kLimit[id];
    if (r.seconds > r.time_limit) t.info("over time limit", fixed(r.time_limit, 0) + " s");
    r.pass = t.ok && r.seconds <= r.time_limit;
    r.detail = t.text.str();
    auto k = known_unattainable().find(id);
    if (k != known_unattainable().end()) r.known = k->second;
    return r;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream o;
    o << "criterion " << (r.id < 10 ? " " : "") << r.id << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.title
      << "  (" << fixed(r.seconds, 2) << " s)  " << r.detail;
    if (!r.pass && !r.known.empty()) o << "  [expected: " << r.known << "]";
    return o.str();
}

std::vector<CriterionResult> run_acceptance(std::ostream& log, std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 10; ++id) {
        out.push_back(run_criterion(id, seed));
        log << format_result(out.back()) << std::endl;
    }
    return out;
}

bool acceptance_ok(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass && r.known.empty()) return false;
    return true;
}

}  // namespace thompsonv
