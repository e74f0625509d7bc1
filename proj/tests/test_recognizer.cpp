#include <doctest.h>

#include "support.hpp"
#include "thompsonv/recognizer.hpp"

using namespace thompsonv;
using testsupport::bs;

namespace {

GenSet gamma_set() {
    GenSet g;
    g.add("g", testsupport::table({{"0", "00"}, {"10", "01"}, {"11", "1"}}));
    return g;
}

std::vector<GenWord> words_up_to(const GenSet& s, std::size_t maxlen) {
    std::vector<GenWord> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() == maxlen) continue;
        for (const auto& n : s.names())
            for (bool inv : {false, true}) out.push_back(concat(out[i], {Token::gen(n, inv)}));
    }
    out.erase(out.begin());
    return out;
}

std::vector<BitString> strings_up_to(std::size_t n) {
    std::vector<BitString> out;
    for (std::size_t l = 0; l <= n; ++l)
        for (auto& x : all_words(l)) out.push_back(x);
    return out;
}

}  // namespace

TEST_CASE("forward examples") {
    Recognizer r(gamma_set());
    CHECK(r.run("01 g 01").accepted);
    CHECK(r.run("0 g 00").accepted);
    for (const char* y : {"", "1", "00", "01", "11"}) CHECK_FALSE(r.run(std::string("1 g ") + y).accepted);
    CHECK_FALSE(r.run("01 g 011").accepted);
    CHECK_FALSE(r.run("01 g 0").accepted);
}

TEST_CASE("reverse examples") {
    Recognizer r(gamma_set(), true);
    CHECK(r.run("10 g 10").accepted);
    CHECK_FALSE(r.run("10 g 11").accepted);
    CHECK(r.run(lv_rev_stream(bs("01"), parse_word("g"), bs("10"))).accepted);
}

TEST_CASE("format errors") {
    Recognizer r(gamma_set());
    for (const char* bad : {"", "0101", "01 g 0 g", "01 h 0", "01 t1 0"}) {
        try {
            r.run(bad);
            FAIL("expected FormatError for '" << bad << "'");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::FormatError);
        }
    }
    Recognizer rev(gamma_set(), true);
    CHECK_THROWS_AS(rev.run("01 10"), Error);
    // format is still checked after an early reject
    CHECK_THROWS_AS(r.run("1 g 0 g"), Error);
}

TEST_CASE("stream builders keep application order") {
    auto w = parse_word("a b^-1");
    CHECK(lv_stream(bs("01"), w, bs("1")) == "10 b^-1 a 1");
    CHECK(lv_rev_stream(bs("01"), w, bs("1")) == "10 a b^-1 1");
    CHECK(lv_stream(BitString(), w, BitString()) == "b^-1 a ");
}

TEST_CASE("both machines agree with sequential application, exhaustive") {
    auto s = GenSet::standard();
    Recognizer fwd(s), rev(s, true);
    auto ws = words_up_to(s, 3);
    REQUIRE(ws.size() == 84);
    auto strs = strings_up_to(4);
    std::size_t accepted = 0;
    for (const auto& w : ws)
        for (const auto& x : strs) {
            auto seq = testsupport::naive_sequential(w, x, s);
            for (const auto& y : strs) {
                bool want = seq && *seq == y;
                auto a = fwd.run(lv_stream(x, w, y));
                REQUIRE(a.accepted == want);
                REQUIRE(rev.run(lv_rev_stream(y, w, x)).accepted == want);
                REQUIRE(a.steps <= 2 * (a.input_symbols + a.pushes));
                accepted += want;
            }
        }
    CHECK(accepted > 1000);
}

TEST_CASE("trace: cursor never moves left, pops never outnumber pushes") {
    auto s = GenSet::standard();
    Recognizer fwd(s);
    std::mt19937_64 rng(31);
    for (int n = 0; n < 500; ++n) {
        auto w = testsupport::random_word(rng, s, 1 + rng() % 6, 0);
        BitString x = testsupport::random_bits(rng, rng() % 12);
        auto seq = sequential_apply(w, x, s);
        BitString y = seq.has_value() ? seq.value : testsupport::random_bits(rng, rng() % 6);
        auto r = fwd.run(lv_stream(x, w, y), true);
        REQUIRE(r.accepted == seq.is(y));
        REQUIRE(r.trace.size() == r.steps);
        std::size_t cur = 0, pops = 0, pushes = 0;
        for (const auto& e : r.trace) {
            REQUIRE(e.cursor >= cur);
            cur = e.cursor;
            if (e.op == Recognizer::Event::Op::Pop) ++pops;
            if (e.op == Recognizer::Event::Op::Push) ++pushes;
            REQUIRE(pops <= pushes);
        }
        REQUIRE(pushes == r.pushes);
    }
}
