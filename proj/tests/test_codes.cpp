#include <doctest.h>

#include "support.hpp"
#include "thompsonv/codes.hpp"

using namespace thompsonv;
using testsupport::bs;

static std::vector<BitString> words(std::initializer_list<const char*> l) {
    std::vector<BitString> out;
    for (auto s : l) out.push_back(bs(s));
    return out;
}

TEST_CASE("prefix relation") {
    CHECK(is_prefix(bs("e"), bs("01")));
    CHECK(is_prefix(bs("01"), bs("01")));
    CHECK_FALSE(is_prefix(bs("10"), bs("01")));
}

TEST_CASE("prefix relation matches cylinder inclusion at depth 8") {
    for (std::size_t lu = 0; lu <= 6; ++lu)
        for (const auto& u : all_words(lu))
            for (std::size_t lv = 0; lv <= 6; ++lv)
                for (const auto& v : all_words(lv)) {
                    bool all = true;
                    for (const auto& z : all_words(8 - lv)) {
                        BitString ext = v + z;
                        if (ext.str().compare(0, u.size(), u.str()) != 0) { all = false; break; }
                    }
                    REQUIRE(is_prefix(u, v) == all);
                }
}

TEST_CASE("validate and kraft") {
    auto c = PrefixCode::validate(words({"0", "10", "11"}));
    CHECK(c.is_maximal());
    CHECK(c.kraft() == 1);
    auto s = PrefixCode::validate(words({"01"}));
    CHECK(s.kraft() == Rational(1, 4));
    CHECK_FALSE(s.is_maximal());
    try {
        PrefixCode::validate(words({"0", "01"}));
        FAIL("expected a prefix violation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PrefixViolation);
        CHECK(std::string(e.what()).find("0 is a prefix of 01") != std::string::npos);
    }
    CHECK(PrefixCode().kraft() == 0);
}

TEST_CASE("complement examples") {
    CHECK(complement(PrefixCode::validate(words({"01"}))).members() == words({"00", "1"}));
    CHECK(complement(PrefixCode::validate(words({"0", "10", "11"}))).empty());
    CHECK(complement(PrefixCode()).members() == words({"e"}));
    CHECK(complement_single(bs("11")).members() == words({"0", "10"}));
    CHECK(complement_single(bs("0")).members() == words({"1"}));
    CHECK(complement_single(bs("010")).members() == words({"00", "011", "1"}));
    CHECK_THROWS_AS(complement_single(BitString()), Error);
}

TEST_CASE("complement of every code with maxlen <= 4") {
    auto codes = testsupport::all_prefix_codes(4);
    CHECK(codes.size() == 458330);
    for (const auto& w : codes) {
        auto p = PrefixCode::validate(w);
        auto q = complement(p);
        std::vector<BitString> u = p.members();
        u.insert(u.end(), q.begin(), q.end());
        REQUIRE(kraft_sum(u) == 1);
        REQUIRE(testsupport::covers_exactly_once(u));
        for (const auto& x : q) REQUIRE_FALSE(p.contains(x));
        if (!p.empty() && !p.is_maximal()) REQUIRE(q.maxlen() <= p.maxlen());
    }
}

TEST_CASE("complement can be strictly shallower than the code") {
    // equality of maxlen fails as soon as the deepest words come as a sibling pair
    auto p = PrefixCode::validate(words({"0000", "0001"}));
    auto q = complement(p);
    CHECK(q.members() == words({"001", "01", "1"}));
    CHECK(q.maxlen() == 3);
}

TEST_CASE("single-word complement agrees with the general one") {
    for (std::size_t n = 1; n <= 8; ++n)
        for (const auto& u : all_words(n)) {
            auto c = complement_single(u);
            REQUIRE(c.size() == n);
            REQUIRE(c.maxlen() == n);
            if (n <= 6) REQUIRE(c == complement(PrefixCode::validate({u})));
        }
}

TEST_CASE("equalized complements") {
    auto [qu, qv] = equalize_complements(bs("11"), bs("0"));
    CHECK(qu.members() == words({"0", "10"}));
    CHECK(qv.members() == words({"10", "11"}));
    auto [a, b] = equalize_complements(bs("0"), bs("1"));
    CHECK(a.members() == words({"1"}));
    CHECK(b.members() == words({"0"}));
    for (std::size_t lu = 1; lu <= 5; ++lu)
        for (std::size_t lv = 1; lv <= 5; ++lv)
            for (const auto& u : all_words(lu))
                for (const auto& v : all_words(lv)) {
                    auto [x, y] = equalize_complements(u, v);
                    REQUIRE(x.size() == std::max(lu, lv));
                    REQUIRE(y.size() == x.size());
                    auto ux = x.members();
                    ux.push_back(u);
                    auto vy = y.members();
                    vy.push_back(v);
                    REQUIRE(testsupport::covers_exactly_once(ux));
                    REQUIRE(testsupport::covers_exactly_once(vy));
                }
}

TEST_CASE("dictionary order output is deterministic") {
    auto p = PrefixCode::validate(words({"0110", "1", "00"}));
    CHECK(complement(p).members() == complement(p).members());
    CHECK(p.members() == words({"00", "0110", "1"}));
    CHECK(bs("e") < bs("0"));
    CHECK(bs("0") < bs("00"));
    CHECK(bs("01") < bs("1"));
}

TEST_CASE("code text format") {
    std::istringstream in("# a code\n0\n10\ne_is_not_here\n");
    CHECK_THROWS_AS(read_code(in), Error);
    std::istringstream ok("# a code\n11\n0 10\n");
    auto c = read_code(ok);
    CHECK(c.members() == words({"0", "10", "11"}));
    CHECK(write_code(c) == "0\n10\n11\n");
    std::istringstream eps("e\n");
    CHECK(read_code(eps).members() == words({"e"}));
}
