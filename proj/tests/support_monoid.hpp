#pragma once
// Monoid words run as literal string rewriting, for checking the table arithmetic.

#include <map>
#include <optional>
#include <string>

#include "thompsonv/monoid.hpp"

namespace testsupport {

using namespace thompsonv;

// Each token as a literal (u, v): strip u from the front, put v there instead.
inline const std::map<std::string, std::pair<std::string, std::string>> kRewrites = {
    {"push0", {"", "0"}}, {"push1", {"", "1"}}, {"pop0", {"0", ""}},   {"pop1", {"1", ""}},
    {"b1", {"0", "10"}},  {"b2", {"11", ""}},   {"b3", {"01", "0"}},   {"b4", {"1", "11"}},
};

inline MonoidSet test_set() {
    MonoidSet s = MonoidSet::standard();
    for (const char* n : {"b1", "b2", "b3", "b4"}) {
        auto [u, v] = kRewrites.at(n);
        s.add(n, bracket(BitString(v), BitString(u)));
    }
    return s;
}

inline std::optional<std::string> rewrite_seq(const GenWord& w, std::string s) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        auto [u, v] = kRewrites.at(it->name);
        if (s.compare(0, u.size(), u) != 0 || s.size() < u.size()) return std::nullopt;
        s = v + s.substr(u.size());
    }
    return s;
}

inline std::size_t consumed(const GenWord& w) {
    std::size_t k = 0;
    for (const auto& t : w) k += kRewrites.at(t.name).first.size();
    return k;
}

// E_w(x) = y by brute force: every xz with |z| = total pop length goes to yz.
inline bool oracle_eval(const GenWord& w, const BitString& x, const BitString& y) {
    std::size_t k = consumed(w);
    for (const auto& z : all_words(k)) {
        auto r = rewrite_seq(w, x.str() + z.str());
        if (!r || *r != y.str() + z.str()) return false;
    }
    return true;
}

// Value of E_w on x read off the all-zero extension, when it looks like a shift.
inline std::optional<BitString> guess_value(const GenWord& w, const BitString& x) {
    std::size_t k = consumed(w);
    auto r = rewrite_seq(w, x.str() + std::string(k, '0'));
    if (!r || r->size() < k) return std::nullopt;
    return BitString(r->substr(0, r->size() - k));
}

}  // namespace testsupport
