#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "thompsonv/eval.hpp"

namespace thompsonv {

// A right ideal morphism given by a finite table whose domain is a prefix code. Neither
// maximality nor injectivity is required; the image words are arbitrary.
class MTable {
public:
    // Throws PrefixViolation if the domain is not a prefix code.
    static MTable validate(std::vector<WordPair> pairs);
    static MTable identity() { return validate({{BitString(), BitString()}}); }
    static MTable empty_map() { return MTable(); }

    const std::vector<WordPair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    std::size_t domain_maxlen() const;
    std::size_t maxlen() const;

    friend bool operator==(const MTable&, const MTable&) = default;

private:
    std::vector<WordPair> pairs_;  // sorted by domain word
};

// [v <- u]: the single pair u -> v. [u <- u] is the identity on the u-cylinder, [e <- u]
// pops u, [v <- e] pushes v.
MTable bracket(const BitString& v, const BitString& u);

ApplyOutcome apply_m(const MTable& f, const BitString& x);
// f after g.
MTable compose_m(const MTable& f, const MTable& g);
// Same outcome (value, or no value) on every x of length L.
bool action_equal_m(const MTable& f, const MTable& g, std::size_t L);

// Does f send the whole x-cylinder to the y-cylinder, xz -> yz? Either a domain word
// prefixes x, or the domain words below x cover its cylinder and all shift alike.
bool extended_eval_m(const MTable& f, const BitString& x, const BitString& y);

// Named monoid tables; standard() holds push0, push1, pop0, pop1.
class MonoidSet {
public:
    void add(const std::string& name, const MTable& t);
    const MTable& table(const std::string& name) const;  // UnknownGenerator
    const std::vector<std::string>& names() const { return names_; }
    static MonoidSet standard();

private:
    std::vector<std::string> names_;
    std::vector<MTable> tables_;
};

// Text-order word push v_1 ... push v_n pop u_m ... pop u_1 (u_1 is popped first).
GenWord decompose_pushpop(const BitString& v, const BitString& u);

// Right-to-left composite; Tau(i) tokens act as the transposition tables. Inverted
// generator tokens are refused (UnknownGenerator): monoid elements need not be invertible.
MTable word_to_mtable(const GenWord& w, const MonoidSet& g);

// E_w o id_x and [y <- x] compared by action at depth L.
bool eval_reduction_check(const GenWord& w, const BitString& x, const BitString& y, std::size_t L, const MonoidSet& g);
// Depth used when none is given: the deepest domain word of either side, plus one.
std::size_t reduction_depth(const GenWord& w, const BitString& x, const BitString& y, const MonoidSet& g);

// v_core table format with a "flavor=monoid" header.
MTable read_mtable(std::istream& in);
std::string write_mtable(const MTable& f);

}  // namespace thompsonv
