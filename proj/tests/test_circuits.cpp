#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "support_circuits.hpp"
#include "thompsonv/circuits.hpp"

using namespace thompsonv;
using testsupport::bs;
using testsupport::naive_sequential;
using testsupport::oracle_eval;
using testsupport::truth;

namespace {

Circuit parse(const char* text) {
    std::istringstream in(text);
    return read_circuit(in);
}

const GenSet gadgets = gadget_genset();

}  // namespace

TEST_CASE("circuit evaluation examples") {
    CHECK(circuit_eval(parse("inputs 2\nlayer AND\noutputs 1\n"), bs("11")) == bs("1"));
    CHECK(circuit_eval(parse("inputs 1\nlayer NOT\n"), bs("0")) == bs("1"));
    auto fa = parse("inputs 1\nlayer FORK\nlayer AND\noutputs 1\n");
    CHECK(circuit_eval(fa, bs("1")) == bs("1"));
    CHECK(circuit_eval(fa, bs("0")) == bs("0"));
    CHECK_THROWS_AS(circuit_eval(fa, bs("10")), Error);
}

TEST_CASE("circuit file format") {
    auto c = parse("# comment\ninputs 3\nlayer AND ID  # trailing\nlayer SWAP\noutputs 2\n");
    CHECK(c.inputs == 3);
    CHECK(c.size() == 3);
    CHECK(c.outputs() == 2);
    CHECK(write_circuit(c) == "inputs 3\nlayer AND ID\nlayer SWAP\noutputs 2\n");
    CHECK(parse(write_circuit(c).c_str()).layers == c.layers);
    CHECK_THROWS_AS(parse("inputs 3\nlayer AND\n"), Error);
    CHECK_THROWS_AS(parse("inputs 2\nlayer AND\noutputs 2\n"), Error);
    CHECK_THROWS_AS(parse("inputs 2\nlayer NAND\n"), Error);
    CHECK_THROWS_AS(parse("layer NOT\n"), Error);
    CHECK_THROWS_AS(parse("inputs 1\n"), Error);
}

TEST_CASE("gadgets: defining equation on every input and valid completion") {
    for (Gate g : {Gate::And, Gate::Or, Gate::Not, Gate::Fork, Gate::Swap, Gate::Id}) {
        INFO(gate_name(g));
        VTable t = gate_gadget(g);
        CHECK(testsupport::covers_exactly_once(t.domain()));
        CHECK(testsupport::covers_exactly_once(t.image()));
        for (const auto& x : all_words(gate_in(g))) {
            auto want = BitString("0") + truth(g, x) + x;
            CHECK(testsupport::scan_apply(t.pairs(), BitString("0") + x) == want);
            CHECK(testsupport::scan_apply(t.pairs(), BitString("0") + x + bs("10")) == want + bs("10"));
        }
    }
    VTable n = gate_gadget(Gate::Not);
    CHECK(apply(n, bs("00")).is(bs("010")));
    CHECK(apply(n, bs("01")).is(bs("001")));
    VTable id = gate_gadget(Gate::Id);
    CHECK(apply(id, bs("01")).is(bs("011")));
    CHECK(apply(id, bs("00")).is(bs("000")));
    VTable a = gate_gadget(Gate::And);
    CHECK(apply(a, bs("0110")).is(bs("01110")));
    CHECK(apply(a, bs("0011")).is(bs("00011")));
}

TEST_CASE("gadgets for two-output functions") {
    auto f = [](const BitString& x) { return x + x; };
    VTable t = simulation_gadget(2, f);
    for (const auto& x : all_words(2)) CHECK(apply(t, BitString("0") + x).is(BitString("0") + x + x + x));
}

TEST_CASE("sigma shift moves the j-th symbol to the front") {
    CHECK(word_text(sigma_shift(2)) == word_text(GenWord{Token::tau(1)}));
    CHECK(sigma_shift(4).size() == 3);
    CHECK_THROWS(sigma_shift(1));
    for (std::size_t j = 2; j <= 4; ++j)
        for (std::size_t len = j; len <= 5; ++len)
            for (const auto& x : all_words(len)) {
                std::string s = x.str();
                std::string want = s.substr(j - 1, 1) + s.substr(0, j - 1) + s.substr(j);
                CHECK(naive_sequential(sigma_shift(j), x, gadgets) == BitString(want));
            }
}

TEST_CASE("single layers") {
    auto check_layer = [](std::vector<Gate> layer, std::size_t w) {
        GenWord word = compile_layer(layer, w);
        Circuit c{w, {layer}};
        for (const auto& y : all_words(w))
            for (const auto& tail : {bs(""), bs("1"), bs("010")}) {
                auto got = naive_sequential(word, BitString("0") + y + tail, gadgets);
                CHECK(got == BitString("0") + oracle_eval(c, y) + y + tail);
            }
    };
    check_layer({Gate::Not}, 1);
    check_layer({Gate::And}, 2);
    check_layer({Gate::Not, Gate::Not}, 2);
    check_layer({Gate::Fork, Gate::Swap, Gate::Or}, 5);
    check_layer({Gate::Id, Gate::And, Gate::Fork}, 4);
    CHECK(compile_layer({Gate::Not}, 1) == GenWord{Token::gen("NOT")});
    CHECK_THROWS_AS(compile_layer({Gate::And}, 3), Error);
}

TEST_CASE("compiled circuits: examples") {
    auto and1 = parse("inputs 2\nlayer AND\n");
    auto r = compile_circuit(and1);
    CHECK(naive_sequential(r.word, bs("011"), gadgets) == bs("0111"));
    CHECK(sequential_apply(r.word, bs("011"), gadgets).is(bs("0111")));
    CHECK(r.z_length == 4);
    CHECK(r.size == word_size(r.word));

    auto copy = parse("inputs 3\nlayer ID ID ID\n");
    for (const auto& x : all_words(3))
        CHECK(sequential_apply(compile_circuit(copy).word, BitString("0") + x, gadgets).is(BitString("0") + x + x));

    auto two = parse("inputs 3\nlayer AND NOT\nlayer OR\n");
    auto r2 = compile_circuit(two);
    CHECK(r2.widths == std::vector<std::size_t>{3, 2, 1});
    CHECK(r2.z_length == 1 + 1 + 3 + 2);
    for (const auto& x : all_words(3))
        CHECK(sequential_apply(r2.word, BitString("0") + x, gadgets).is(BitString("0") + oracle_eval(two, x) + x));
}

TEST_CASE("cvp reduction examples") {
    auto c = parse("inputs 2\nlayer AND\n");
    auto inst = cvp_reduce(c, bs("11"), bs("1"));
    CHECK(inst.input == bs("011"));
    CHECK(inst.target == bs("0111"));
    CHECK(cvp_decide(c, bs("11"), bs("1")));
    CHECK_FALSE(cvp_decide(c, bs("10"), bs("1")));
    CHECK_FALSE(cvp_decide(c, bs("1"), bs("1")));
    CHECK_FALSE(cvp_decide(c, bs("11"), bs("11")));
}

TEST_CASE("random circuits: simulation, reduction and size") {
    std::mt19937_64 rng(0xc1c1);
    double worst = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Circuit c = random_circuit(rng, 6, 4, 12);
        REQUIRE(c.inputs <= 6);
        REQUIRE(c.layers.size() <= 4);
        REQUIRE(c.size() <= 12);
        INFO(write_circuit(c));
        auto r = compile_circuit(c);
        for (const auto& x : all_words(c.inputs)) {
            auto fx = oracle_eval(c, x);
            auto got = naive_sequential(r.word, BitString("0") + x, gadgets);
            REQUIRE(got == BitString("0") + fx + x);
            CHECK(classify_input(r.word, BitString("0") + x, gadgets) == InputClass::Long);
            if (trial % 10 == 0)
                for (const auto& y : all_words(c.outputs())) CHECK(cvp_decide(c, x, y) == (fx == y));
        }
        double n = static_cast<double>(c.size());
        worst = std::max(worst, r.size / (n * n * n));
    }
    MESSAGE("fitted size constant " << worst);
    CHECK(worst <= circuit_size_constant);
}
