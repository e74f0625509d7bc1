#include "thompsonv/codes.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace thompsonv {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::PrefixViolation: return "PrefixViolation";
        case ErrorKind::NotBijective: return "NotBijective";
        case ErrorKind::NotMaximal: return "NotMaximal";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::DepthTooSmall: return "DepthTooSmall";
        case ErrorKind::UnknownGenerator: return "UnknownGenerator";
        case ErrorKind::MalformedEncoding: return "MalformedEncoding";
        case ErrorKind::FormatError: return "FormatError";
        case ErrorKind::EmptyOrMaximalCode: return "EmptyOrMaximalCode";
        case ErrorKind::PrefixHolds: return "PrefixHolds";
        case ErrorKind::EmptyString: return "EmptyString";
        case ErrorKind::WidthMismatch: return "WidthMismatch";
        case ErrorKind::NotAFunction: return "NotAFunction";
        case ErrorKind::NotInjective: return "NotInjective";
        case ErrorKind::FlavorMismatch: return "FlavorMismatch";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

BitString::BitString(std::string_view bits) : s_(bits) {
    for (char c : s_)
        if (c != '0' && c != '1')
            throw Error(ErrorKind::ParseError, "not a bit string: '" + std::string(bits) + "'");
}

BitString BitString::from_uint(unsigned long long v, std::size_t k) {
    std::string s(k, '0');
    for (std::size_t i = 0; i < k; ++i)
        if ((v >> (k - 1 - i)) & 1ULL) s[i] = '1';
    return BitString(std::move(s), Trusted{});
}

BitString BitString::reversed() const {
    return BitString(std::string(s_.rbegin(), s_.rend()), Trusted{});
}

BitString BitString::parse_text(std::string_view t) {
    if (t == "e" || t == "ε") return BitString();
    return BitString(t);
}

Rational kraft_sum(const std::vector<BitString>& words) {
    if (words.empty()) return Rational(0);
    std::size_t m = 0;
    for (const auto& w : words) m = std::max(m, w.size());
    // common denominator 2^m keeps this a single integer sum
    boost::multiprecision::cpp_int num = 0;
    for (const auto& w : words) num += boost::multiprecision::cpp_int(1) << (m - w.size());
    return Rational(num, boost::multiprecision::cpp_int(1) << m);
}

PrefixCode PrefixCode::validate(std::vector<BitString> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    // in sorted order a prefix is immediately followed by one of its extensions
    for (std::size_t i = 0; i + 1 < words.size(); ++i)
        if (words[i].is_prefix_of(words[i + 1]))
            throw Error(ErrorKind::PrefixViolation,
                        words[i].text() + " is a prefix of " + words[i + 1].text());
    PrefixCode c;
    c.members_ = std::move(words);
    return c;
}

PrefixCode PrefixCode::trusted(std::vector<BitString> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    PrefixCode c;
    c.members_ = std::move(words);
    return c;
}

std::size_t PrefixCode::maxlen() const {
    std::size_t m = 0;
    for (const auto& w : members_) m = std::max(m, w.size());
    return m;
}

bool PrefixCode::contains(const BitString& w) const {
    return std::binary_search(members_.begin(), members_.end(), w);
}

long find_prefix_member(const std::vector<BitString>& sorted, const BitString& x) {
    // a member p <= x sits at the last position not greater than x
    auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
    if (it == sorted.begin()) return -1;
    --it;
    return it->is_prefix_of(x) ? static_cast<long>(it - sorted.begin()) : -1;
}

bool strictly_prefixes_member(const std::vector<BitString>& sorted, const BitString& x) {
    auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
    return it != sorted.end() && x.is_prefix_of(*it);
}

PrefixCode complement(const PrefixCode& p) {
    if (p.empty()) return PrefixCode::trusted({BitString()});
    std::unordered_set<BitString> pref;
    std::set<BitString> spref;
    for (const auto& w : p) {
        for (std::size_t i = 0; i <= w.size(); ++i) pref.insert(w.prefix(i));
        for (std::size_t i = 0; i < w.size(); ++i) spref.insert(w.prefix(i));
    }
    std::vector<BitString> out;
    for (const auto& x : spref)
        for (int a = 0; a < 2; ++a) {
            BitString xa = x.with(a);
            if (!pref.count(xa)) out.push_back(std::move(xa));
        }
    return PrefixCode::trusted(std::move(out));
}

PrefixCode complement_single(const BitString& u) {
    if (u.empty()) throw Error(ErrorKind::EmptyInput, "complement of the empty word is empty");
    std::vector<BitString> out;
    for (std::size_t j = 0; j < u.size(); ++j) out.push_back(u.prefix(j).with(1 - u[j]));
    return PrefixCode::trusted(std::move(out));
}

PrefixCode split_to_size(const PrefixCode& c, std::size_t target) {
    if (c.empty() && target > 0)
        throw Error(ErrorKind::EmptyInput, "cannot split an empty code");
    std::vector<BitString> w = c.members();
    while (w.size() < target) {
        // shortest member first keeps the result balanced; ties go to dictionary order
        auto it = std::min_element(w.begin(), w.end(), [](const BitString& a, const BitString& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        BitString x = *it;
        w.erase(it);
        w.push_back(x.with(0));
        w.push_back(x.with(1));
    }
    return PrefixCode::trusted(std::move(w));
}

std::pair<PrefixCode, PrefixCode> equalize_complements(const BitString& u, const BitString& v) {
    std::size_t k = std::max(u.size(), v.size());
    return {split_to_size(complement_single(u), k), split_to_size(complement_single(v), k)};
}

std::vector<BitString> all_words(std::size_t n) {
    if (n >= 63) throw Error(ErrorKind::TooLarge, "word length too large to enumerate");
    std::vector<BitString> out;
    out.reserve(std::size_t(1) << n);
    for (unsigned long long v = 0; v < (1ULL << n); ++v) out.push_back(BitString::from_uint(v, n));
    return out;
}

static std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

PrefixCode read_code(std::istream& in) {
    std::vector<BitString> words;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            words.push_back(BitString::parse_text(tok));
        }
    }
    return PrefixCode::validate(std::move(words));
}

std::string write_code(const PrefixCode& c) {
    std::string out;
    for (const auto& w : c) out += w.text() + "\n";
    return out;
}

}  // namespace thompsonv
