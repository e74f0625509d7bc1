#pragma once
// Brute-force helpers for pairs of binary words, shared by the 2V tests and the acceptance runner.

#include <algorithm>
#include <random>
#include <vector>

#include "thompsonv/brin2v.hpp"

namespace testsupport {

using thompsonv::Tuple;
using thompsonv::TupleCode;
using thompsonv::NTable;
using thompsonv::NFlavor;
using thompsonv::all_words;
using thompsonv::BitString;
using thompsonv::minimal_elements;
using thompsonv::maxlen;

// Every pair with both coordinates of length <= L.
inline std::vector<Tuple> tuples_upto(std::size_t L) {
    std::vector<BitString> words;
    for (std::size_t l = 0; l <= L; ++l)
        for (auto& w : all_words(l)) words.push_back(w);
    std::vector<Tuple> out;
    for (auto& a : words)
        for (auto& b : words) out.push_back(Tuple({a, b}));
    return out;
}

inline bool le(const Tuple& u, const Tuple& v) {
    for (std::size_t i = 0; i < u.n(); ++i)
        if (!(v.c[i].str().rfind(u.c[i].str(), 0) == 0)) return false;
    return true;
}

inline std::vector<Tuple> depth_tuples(std::size_t L) {
    std::vector<Tuple> out;
    for (auto& a : all_words(L))
        for (auto& b : all_words(L)) out.push_back(Tuple({a, b}));
    return out;
}

inline bool essential_oracle(const TupleCode& p) {
    if (p.empty()) return false;
    for (auto& x : depth_tuples(maxlen(p)))
        if (std::none_of(p.begin(), p.end(), [&](const Tuple& q) { return le(q, x); })) return false;
    return true;
}

// Random maximal joinless code: split a member in one coordinate, `splits` times.
inline TupleCode random_mj(std::mt19937_64& rng, std::size_t splits, std::size_t cap) {
    TupleCode c{Tuple::empty(2)};
    for (std::size_t k = 0; k < splits; ++k) {
        for (int tries = 0; tries < 50; ++tries) {
            std::size_t idx = rng() % c.size(), i = rng() % 2;
            if (c[idx].c[i].size() >= cap) continue;
            Tuple t = c[idx];
            c.erase(c.begin() + static_cast<long>(idx));
            c.push_back(t + Tuple::unit(2, i, 0));
            c.push_back(t + Tuple::unit(2, i, 1));
            break;
        }
    }
    return c;
}

inline NTable random_group_table(std::mt19937_64& rng, std::size_t splits, std::size_t cap) {
    while (true) {
        auto d = random_mj(rng, splits, cap), r = random_mj(rng, splits, cap);
        if (d.size() != r.size()) continue;
        std::shuffle(r.begin(), r.end(), rng);
        std::vector<std::pair<Tuple, Tuple>> pairs;
        for (std::size_t i = 0; i < d.size(); ++i) pairs.emplace_back(d[i], r[i]);
        return NTable::validate(pairs);
    }
}

// A random initial factor code with coordinates of length <= cap: often essential and
// not joinless (minimal elements of a union of maximal joinless codes), sometimes thinned.
inline TupleCode random_if_code(std::mt19937_64& rng, std::size_t cap) {
    TupleCode u = random_mj(rng, 1 + rng() % 4, cap);
    if (rng() % 2) {
        auto v = random_mj(rng, 1 + rng() % 4, cap);
        u.insert(u.end(), v.begin(), v.end());
    }
    u = minimal_elements(u);
    if (rng() % 3 == 0 && u.size() > 1) u.erase(u.begin() + static_cast<long>(rng() % u.size()));
    return u;
}

}  // namespace testsupport
