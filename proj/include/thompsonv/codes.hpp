#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "thompsonv/bitstring.hpp"
#include "thompsonv/error.hpp"

namespace thompsonv {

using Rational = boost::multiprecision::cpp_rational;

// Sum of 2^-|p|, exact.
Rational kraft_sum(const std::vector<BitString>& words);

// A finite prefix code, members kept sorted in dictionary order without duplicates.
class PrefixCode {
public:
    PrefixCode() = default;

    // Sorts, deduplicates and checks pairwise prefix-freeness; throws PrefixViolation.
    static PrefixCode validate(std::vector<BitString> words);
    // Caller guarantees the words already form a prefix code (any order).
    static PrefixCode trusted(std::vector<BitString> words);

    const std::vector<BitString>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::size_t maxlen() const;
    Rational kraft() const { return kraft_sum(members_); }
    bool is_maximal() const { return kraft() == 1; }
    bool contains(const BitString& w) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const PrefixCode&, const PrefixCode&) = default;

private:
    std::vector<BitString> members_;
};

// Index of the member that is a prefix of x, or -1. Members must be sorted.
long find_prefix_member(const std::vector<BitString>& sorted, const BitString& x);
// True when x is a strict prefix of some member. Members must be sorted.
bool strictly_prefixes_member(const std::vector<BitString>& sorted, const BitString& x);

// Ideal-disjoint completion P' of P (P u P' maximal). Empty P gives {e}.
PrefixCode complement(const PrefixCode& p);

// Complement of {u}: the |u| strings u_1..u_j followed by the other bit. Throws EmptyInput on e.
PrefixCode complement_single(const BitString& u);

// Complements of {u} and {v} refined to a common size max(|u|,|v|).
std::pair<PrefixCode, PrefixCode> equalize_complements(const BitString& u, const BitString& v);

// Grow a code to `target` members by splitting its dictionary-least members, keeping the
// ideal it generates. Used wherever two codes must be paired by cardinality.
PrefixCode split_to_size(const PrefixCode& c, std::size_t target);

// Every word of length exactly n, in dictionary order.
std::vector<BitString> all_words(std::size_t n);

// Text format: one word per line, "e" for the empty word, '#' starts a comment.
PrefixCode read_code(std::istream& in);
std::string write_code(const PrefixCode& c);

}  // namespace thompsonv
