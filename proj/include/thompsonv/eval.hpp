#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "thompsonv/vtable.hpp"

namespace thompsonv {

// Named V tables; inverses are derived on insertion.
class GenSet {
public:
    void add(const std::string& name, const VTable& table);
    bool has(const std::string& name) const { return tables_.count(name) != 0; }
    // Throws UnknownGenerator.
    const VTable& table(const std::string& name, bool inverted = false) const;
    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }
    // maxlen over every member table
    std::size_t c_gamma() const;

    // Two tables a (order 4) and b (order 6) generating V; see README for the words
    // expressing the usual four generators in them.
    static GenSet standard();

private:
    std::vector<std::string> names_;
    std::map<std::string, VTable> tables_, inverses_;
};

// "[name]" sections, each followed by a table block.
GenSet read_genset(std::istream& in);
std::string write_genset(const GenSet& g);

struct Token {
    enum class Kind { Gen, Tau };
    Kind kind = Kind::Gen;
    std::string name;
    bool inverted = false;
    unsigned index = 0;  // Tau(i) swaps positions i and i+1, i >= 1

    static Token gen(std::string n, bool inv = false) { return {Kind::Gen, std::move(n), inv, 0}; }
    static Token tau(unsigned i) { return {Kind::Tau, {}, false, i}; }
    std::size_t size() const { return kind == Kind::Tau ? index + 1 : 1; }
    Token inverse() const {
        Token t = *this;
        if (kind == Kind::Gen) t.inverted = !inverted;
        return t;
    }
    std::string text() const;
    friend bool operator==(const Token&, const Token&) = default;
};

// Written left to right as w_n ... w_1; the last token is applied first.
using GenWord = std::vector<Token>;

GenWord parse_word(const std::string& text);
std::string word_text(const GenWord& w);
std::size_t word_size(const GenWord& w);
std::size_t maxindex_tau(const GenWord& w);
GenWord inverse_word(const GenWord& w);
GenWord concat(const GenWord& outer, const GenWord& inner);

// Tables with more than 2^20 pairs are refused (TooLarge).
VTable tau_table(unsigned i);
std::string encode_tau(unsigned i);
// Throws MalformedEncoding.
Token decode_tau(const std::string& s);

// Right-to-left fold of compose; the empty word is the identity.
VTable word_to_element(const GenWord& w, const GenSet& g);

// Token-by-token application; TooShort as soon as one step is undefined.
ApplyOutcome sequential_apply(const GenWord& w, const BitString& x, const GenSet& g);

enum class InputClass { Long, Short, TooShort };
const char* class_name(InputClass c);
InputClass classify_input(const GenWord& w, const BitString& x, const GenSet& g);

std::size_t long_input_threshold(const GenWord& w, const GenSet& g);

// E_w(x) = y, decided on the composed table.
bool evaluate(const GenWord& w, const BitString& x, const BitString& y, const GenSet& g);

// E_w(x) = y iff every xz with |z| = threshold - |x| is sent to yz by sequential
// application. The z's are explored as a tree of cylinders: a branch is split only when a
// token needs a bit that has not been fixed yet, so whole cylinders are settled at once.
bool evaluate_universal(const GenWord& w, const BitString& x, const BitString& y, const GenSet& g);

bool word_problem(const GenWord& w, const GenSet& g);
// True iff E_w(x) = x for every x of length n.
bool word_problem_via_eval(const GenWord& w, std::size_t n, const GenSet& g);

}  // namespace thompsonv
