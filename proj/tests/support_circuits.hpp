#pragma once
// Circuit semantics written out as truth tables, kept apart from the library's gate code.

#include <string>

#include "thompsonv/circuits.hpp"

namespace testsupport {

using thompsonv::BitString;
using thompsonv::Circuit;
using thompsonv::Gate;
using thompsonv::gate_in;

inline BitString bits(const char* s) { return thompsonv::BitString::parse_text(s); }

// Ad hoc gate semantics written out as truth tables, kept apart from gate_eval.
inline BitString truth(Gate g, const BitString& x) {
    std::string s = x.str();
    if (g == Gate::And) return bits(s == "11" ? "1" : "0");
    if (g == Gate::Or) return bits(s == "00" ? "0" : "1");
    if (g == Gate::Not) return bits(s == "0" ? "1" : "0");
    if (g == Gate::Fork) return bits(s == "0" ? "00" : "11");
    if (g == Gate::Swap) return BitString(std::string{s[1], s[0]});
    return x;
}

inline BitString oracle_eval(const Circuit& c, BitString x) {
    for (const auto& layer : c.layers) {
        std::string next;
        std::size_t at = 0;
        for (Gate g : layer) {
            next += truth(g, BitString(x.str().substr(at, gate_in(g)))).str();
            at += gate_in(g);
        }
        x = BitString(next);
    }
    return x;
}

}  // namespace testsupport
