#include <doctest.h>

#include <map>
#include <sstream>

#include "support.hpp"
#include "thompsonv/eval.hpp"

using namespace thompsonv;
using testsupport::bs;
using testsupport::table;

namespace {

GenSet gamma_set() {
    GenSet g;
    g.add("g", table({{"0", "00"}, {"10", "01"}, {"11", "1"}}));
    return g;
}

// Expand single letters into words over the standard pair: C = b^4, C^-1 = b^2,
// the involution commuting with C = b^3, D = a.
GenWord expand(const std::string& letters) {
    std::string out;
    for (char ch : letters) {
        switch (ch) {
            case 'C': out += " b b b b"; break;
            case 'c': out += " b b"; break;
            case 'P': out += " b b b"; break;
            case 'D': out += " a"; break;
            case 'd': out += " a^-1"; break;
        }
    }
    return parse_word(out);
}

}  // namespace

TEST_CASE("tau tables") {
    CHECK(tau_table(1) == table({{"00", "00"}, {"01", "10"}, {"10", "01"}, {"11", "11"}}));
    CHECK(apply(tau_table(2), bs("1")).kind == ApplyOutcome::Kind::TooShort);
    CHECK(apply(tau_table(2), bs("0101")).is(bs("0011")));
    CHECK(apply(tau_table(2), bs("010")).is(bs("001")));
    for (unsigned i = 1; i <= 6; ++i)
        for (const auto& x : all_words(i + 3)) {
            std::string s = x.str();
            std::swap(s[i - 1], s[i]);
            REQUIRE(apply(tau_table(i), x).is(BitString(s)));
        }
}

TEST_CASE("tau wire encoding") {
    CHECK(encode_tau(2) == "abbba");
    CHECK(decode_tau("abba") == Token::tau(1));
    try {
        decode_tau("aba");
        FAIL("expected MalformedEncoding");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedEncoding);
    }
    for (unsigned i = 1; i <= 64; ++i) REQUIRE(decode_tau(encode_tau(i)) == Token::tau(i));
    CHECK_THROWS_AS(decode_tau("abbb"), Error);
    CHECK(parse_word("abbba g^-1 t3") == GenWord{Token::tau(2), Token::gen("g", true), Token::tau(3)});
}

TEST_CASE("words to elements") {
    auto g = gamma_set();
    CHECK(word_to_element(parse_word("g g^-1"), g) == VTable::identity());
    CHECK(word_to_element({}, g) == VTable::identity());
    CHECK(word_to_element(parse_word("t1 t1"), g) == VTable::identity());
    CHECK_THROWS_AS(word_to_element(parse_word("h"), g), Error);
    CHECK(word_size(parse_word("g t4 g^-1")) == 7);
    CHECK(maxindex_tau(parse_word("g t4 t2")) == 5);
    CHECK(maxindex_tau(parse_word("g")) == 0);
}

TEST_CASE("sequential application and classes") {
    auto g = gamma_set();
    CHECK(sequential_apply(parse_word("g"), bs("10"), g).is(bs("01")));
    CHECK_FALSE(sequential_apply(parse_word("g^-1 g"), bs("e"), g).has_value());
    CHECK(word_to_element(parse_word("g^-1 g"), g) == VTable::identity());
    CHECK_FALSE(sequential_apply(parse_word("t1"), bs("0"), g).has_value());
    CHECK(classify_input(parse_word("g^-1 g"), bs("e"), g) == InputClass::Short);
    CHECK(classify_input(parse_word("g"), bs("10"), g) == InputClass::Long);
    CHECK(classify_input(parse_word("g"), bs("e"), g) == InputClass::TooShort);
}

TEST_CASE("long input threshold") {
    auto g = gamma_set();
    CHECK(g.c_gamma() == 2);
    CHECK(long_input_threshold(parse_word("g g g"), g) == 6);
    CHECK(long_input_threshold(parse_word("g t4"), g) == 10);
    CHECK(long_input_threshold({}, g) == 0);
}

TEST_CASE("evaluation examples") {
    auto g = gamma_set();
    CHECK(evaluate(parse_word("g^-1 g"), bs("e"), bs("e"), g));
    CHECK(evaluate(parse_word("g"), bs("10"), bs("01"), g));
    CHECK_FALSE(evaluate(parse_word("g"), bs("e"), bs("e"), g));
    CHECK(evaluate_universal(parse_word("g^-1 g"), bs("e"), bs("e"), g));
    CHECK(evaluate_universal(parse_word("g"), bs("10"), bs("01"), g));
    CHECK_FALSE(evaluate_universal(parse_word("g"), bs("10"), bs("10"), g));
}

TEST_CASE("word problem examples") {
    auto g = gamma_set();
    CHECK(word_problem(parse_word("g g^-1"), g));
    CHECK_FALSE(word_problem(parse_word("t1"), g));
    CHECK(word_problem_via_eval(parse_word("g g^-1"), 3, g));
    CHECK_FALSE(word_problem_via_eval(parse_word("t1"), 2, g));
    CHECK_FALSE(evaluate(parse_word("t1"), bs("01"), bs("01"), g));
    std::mt19937_64 rng(21);
    auto s = GenSet::standard();
    for (int n = 0; n < 500; ++n) {
        auto w = testsupport::random_word(rng, s, rng() % 7, 2);
        // random words rarely vanish; append the inverse of a prefix half the time
        if (n % 2) w = concat(w, inverse_word(w));
        bool wp = word_problem(w, s);
        REQUIRE(evaluate(w, BitString(), BitString(), s) == wp);
        REQUIRE(word_problem_via_eval(w, 0, s) == wp);
        REQUIRE(word_problem_via_eval(w, rng() % 4, s) == wp);
    }
}

TEST_CASE("standard generating set reaches the usual generators of V") {
    auto s = GenSet::standard();
    auto A = table({{"0", "00"}, {"10", "01"}, {"11", "1"}});
    auto B = table({{"0", "0"}, {"10", "100"}, {"110", "101"}, {"111", "11"}});
    auto C = table({{"0", "11"}, {"10", "0"}, {"11", "10"}});
    auto P0 = table({{"0", "10"}, {"10", "0"}, {"11", "11"}});
    CHECK(word_to_element(expand("C"), s) == C);
    CHECK(word_to_element(expand("cDD"), s) == A);
    CHECK(word_to_element(expand("Cd"), s) == B);
    CHECK(word_to_element(expand("CDDCDPDDCDCdPdCDCDPdCDDC"), s) == P0);
    CHECK(word_problem(parse_word("a a a a"), s));
    CHECK(word_problem(parse_word("b b b b b b"), s));
}

TEST_CASE("genset text format") {
    std::istringstream in("# pair\n[a]\nn=1\n0 -> 1\n1 -> 0\n\n[c]\nn=1\ne -> e\n");
    auto g = read_genset(in);
    CHECK(g.names() == std::vector<std::string>{"a", "c"});
    std::istringstream again(write_genset(GenSet::standard()));
    auto s = read_genset(again);
    CHECK(s.table("b") == GenSet::standard().table("b"));
    CHECK(s.table("a", true) == inverse(GenSet::standard().table("a")));
}

TEST_CASE("decider agreement, exhaustive small range") {
    auto s = GenSet::standard();
    std::vector<GenWord> words{{}};
    for (std::size_t len = 1; len <= 4; ++len) {
        std::vector<GenWord> next;
        for (const auto& w : words)
            if (w.size() == len - 1)
                for (const auto& n : s.names())
                    for (bool inv : {false, true}) next.push_back(concat(w, {Token::gen(n, inv)}));
        words.insert(words.end(), next.begin(), next.end());
    }
    REQUIRE(words.size() == 341);
    std::vector<BitString> strs;
    for (std::size_t l = 0; l <= 3; ++l)
        for (auto& x : all_words(l)) strs.push_back(x);
    for (const auto& w : words) {
        VTable e = word_to_element(w, s);
        for (const auto& x : strs) {
            auto seq = sequential_apply(w, x, s);
            for (const auto& y : strs) {
                bool a = eval_oracle(e, x, y);
                bool b = evaluate_universal(w, x, y, s);
                REQUIRE(a == b);
                if (seq.has_value()) REQUIRE(a == (seq.value == y));
                if (w.size() <= 2) {
                    std::size_t K = long_input_threshold(w, s) > x.size() ? long_input_threshold(w, s) - x.size() : 0;
                    REQUIRE(a == testsupport::naive_eval(w, x, y, s, K));
                }
            }
        }
    }
}

TEST_CASE("decider agreement, random instances") {
    auto s = GenSet::standard();
    std::mt19937_64 rng(22);
    int positives = 0;
    for (int n = 0; n < 10000; ++n) {
        auto w = testsupport::random_word(rng, s, 1 + rng() % 8, (n % 3 == 0) ? 3 : 0);
        BitString x = testsupport::random_bits(rng, rng() % 7);
        VTable e = word_to_element(w, s);
        auto img = apply(e, x);
        BitString y = (img.has_value() && rng() % 2) ? img.value : testsupport::random_bits(rng, rng() % 7);
        bool a = evaluate(w, x, y, s);
        REQUIRE(a == evaluate_universal(w, x, y, s));
        positives += a;
        auto seq = sequential_apply(w, x, s);
        if (seq.has_value()) {
            REQUIRE(classify_input(w, x, s) == InputClass::Long);
            REQUIRE(a == (seq.value == y));
        }
    }
    CHECK(positives > 1000);
}

TEST_CASE("long input threshold is sufficient") {
    auto s = GenSet::standard();
    std::mt19937_64 rng(23);
    for (int n = 0; n < 10000; ++n) {
        auto w = testsupport::random_word(rng, s, rng() % 7, 4);
        std::size_t t = long_input_threshold(w, s);
        BitString x = testsupport::random_bits(rng, t + rng() % 3);
        REQUIRE(classify_input(w, x, s) == InputClass::Long);
        REQUIRE(testsupport::naive_sequential(w, x, s).has_value());
    }
}
