#pragma once
// Brute-force oracles and random generators shared by the test binaries. Nothing here
// calls into the library's lookup or composition code, so agreement is meaningful.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "thompsonv/eval.hpp"
#include "thompsonv/vtable.hpp"

namespace testsupport {

using thompsonv::BitString;
using thompsonv::WordPair;

inline BitString bs(const char* s) { return thompsonv::BitString::parse_text(s); }

inline std::vector<WordPair> rows(std::initializer_list<std::pair<const char*, const char*>> r) {
    std::vector<WordPair> out;
    for (auto [a, b] : r) out.emplace_back(bs(a), bs(b));
    return out;
}

inline thompsonv::VTable table(std::initializer_list<std::pair<const char*, const char*>> r) {
    return thompsonv::VTable::validate(rows(r));
}

// Linear scan over the raw pairs: the image of x, if some domain word prefixes x.
inline std::optional<BitString> scan_apply(const std::vector<WordPair>& pairs, const BitString& x) {
    for (const auto& [d, i] : pairs)
        if (d.size() <= x.size() && x.str().compare(0, d.size(), d.str()) == 0)
            return i + x.suffix_from(d.size());
    return std::nullopt;
}

// Every word of length L has exactly one prefix among the words (L >= their maxlen).
inline bool covers_exactly_once(const std::vector<BitString>& words) {
    std::size_t L = 0;
    for (const auto& w : words) L = std::max(L, w.size());
    for (unsigned long long v = 0; v < (1ULL << L); ++v) {
        std::string x(L, '0');
        for (std::size_t i = 0; i < L; ++i)
            if ((v >> (L - 1 - i)) & 1) x[i] = '1';
        int hits = 0;
        for (const auto& w : words)
            if (x.compare(0, w.size(), w.str()) == 0) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

inline bool pairwise_prefix_free(const std::vector<BitString>& words) {
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j)
            if (i != j && words[i].is_prefix_of(words[j])) return false;
    return true;
}

inline BitString random_bits(std::mt19937_64& rng, std::size_t n) {
    std::string s(n, '0');
    for (auto& c : s) c = (rng() & 1) ? '1' : '0';
    return BitString(s);
}

// Random maximal prefix code with at most `max_size` members, all of length <= maxlen.
inline std::vector<BitString> random_maximal_code(std::mt19937_64& rng, std::size_t max_size, std::size_t maxlen) {
    std::vector<BitString> c{BitString()};
    std::size_t target = 1 + rng() % max_size;
    for (int tries = 0; c.size() < target && tries < 200; ++tries) {
        std::size_t k = rng() % c.size();
        if (c[k].size() >= maxlen) continue;
        BitString x = c[k];
        c.erase(c.begin() + k);
        c.push_back(x.with(0));
        c.push_back(x.with(1));
    }
    return c;
}

// Split a maximal code (keeping it maximal) until it has n members, within maxlen if possible.
inline std::vector<BitString> grow_code(std::mt19937_64& rng, std::vector<BitString> c, std::size_t n) {
    while (c.size() < n) {
        std::size_t k = rng() % c.size();
        BitString x = c[k];
        c.erase(c.begin() + k);
        c.push_back(x.with(0));
        c.push_back(x.with(1));
    }
    return c;
}

// Random element of V whose codes have words of length <= maxlen.
inline thompsonv::VTable random_element(std::mt19937_64& rng, std::size_t maxlen, std::size_t max_size = 8) {
    while (true) {
        auto d = random_maximal_code(rng, max_size, maxlen);
        auto i = random_maximal_code(rng, max_size, maxlen);
        if (d.size() != i.size()) continue;
        std::shuffle(i.begin(), i.end(), rng);
        std::vector<WordPair> p;
        for (std::size_t k = 0; k < d.size(); ++k) p.emplace_back(d[k], i[k]);
        return thompsonv::VTable::validate(std::move(p));
    }
}

// All maximal prefix codes with words of length <= maxlen.
inline std::vector<std::vector<BitString>> all_maximal_codes(std::size_t maxlen) {
    if (maxlen == 0) return {{BitString()}};
    auto sub = all_maximal_codes(maxlen - 1);
    std::vector<std::vector<BitString>> out{{BitString()}};
    for (const auto& l : sub)
        for (const auto& r : sub) {
            std::vector<BitString> c;
            for (const auto& w : l) c.push_back(BitString("0") + w);
            for (const auto& w : r) c.push_back(BitString("1") + w);
            out.push_back(std::move(c));
        }
    return out;
}

// Every prefix code (maximal or not, possibly empty) with words of length <= maxlen.
inline std::vector<std::vector<BitString>> all_prefix_codes(std::size_t maxlen) {
    if (maxlen == 0) return {{}, {BitString()}};
    auto sub = all_prefix_codes(maxlen - 1);
    std::vector<std::vector<BitString>> out{{BitString()}};
    for (const auto& l : sub)
        for (const auto& r : sub) {
            std::vector<BitString> c;
            for (const auto& w : l) c.push_back(BitString("0") + w);
            for (const auto& w : r) c.push_back(BitString("1") + w);
            out.push_back(std::move(c));
        }
    return out;
}

// All elements of V given by a bijection between maximal codes of maxlen <= L.
inline std::vector<thompsonv::VTable> all_elements(std::size_t L) {
    auto codes = all_maximal_codes(L);
    std::vector<thompsonv::VTable> out;
    for (const auto& d : codes)
        for (const auto& i : codes) {
            if (d.size() != i.size()) continue;
            std::vector<std::size_t> perm(d.size());
            for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
            do {
                std::vector<WordPair> p;
                for (std::size_t k = 0; k < d.size(); ++k) p.emplace_back(d[k], i[perm[k]]);
                out.push_back(thompsonv::VTable::validate(std::move(p)));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    return out;
}

// Random word over the generators of g, their inverses, and (optionally) small taus.
inline thompsonv::GenWord random_word(std::mt19937_64& rng, const thompsonv::GenSet& g, std::size_t len,
                                      unsigned max_tau = 0) {
    thompsonv::GenWord w;
    const auto& names = g.names();
    std::size_t choices = 2 * names.size() + max_tau;
    for (std::size_t k = 0; k < len; ++k) {
        std::size_t c = rng() % choices;
        if (c < 2 * names.size()) w.push_back(thompsonv::Token::gen(names[c / 2], c % 2));
        else w.push_back(thompsonv::Token::tau(static_cast<unsigned>(c - 2 * names.size() + 1)));
    }
    return w;
}

// Sequential application by explicit string surgery: generator tables by linear scan,
// taus by swapping characters.
inline std::optional<BitString> naive_sequential(const thompsonv::GenWord& w, BitString x, const thompsonv::GenSet& g) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->kind == thompsonv::Token::Kind::Tau) {
            if (x.size() <= it->index) return std::nullopt;
            std::string s = x.str();
            std::swap(s[it->index - 1], s[it->index]);
            x = BitString(s);
            continue;
        }
        auto r = scan_apply(g.table(it->name, it->inverted).pairs(), x);
        if (!r) return std::nullopt;
        x = *r;
    }
    return x;
}

// E_w(x) = y by brute force over all z of length K (K large enough).
inline bool naive_eval(const thompsonv::GenWord& w, const BitString& x, const BitString& y,
                       const thompsonv::GenSet& g, std::size_t K) {
    for (unsigned long long v = 0; v < (1ULL << K); ++v) {
        BitString z = BitString::from_uint(v, K);
        auto r = naive_sequential(w, x + z, g);
        if (!r || *r != y + z) return false;
    }
    return true;
}

}  // namespace testsupport
