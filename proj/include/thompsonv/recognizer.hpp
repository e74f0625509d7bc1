#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "thompsonv/eval.hpp"

namespace thompsonv {

// One-pass stack machine for streams x^rev g_1 g_2 ... g_n y, accepting iff
// g_n(...g_1(x)) = y with every step defined (x long for the word).
// Tokens are whitespace separated. A token made only of 0/1 contributes its symbols in
// order; any other token must name a generator. Generators appear in the order they
// are applied, which is the reverse of GenWord text order.
//
// The reverse machine reads y^rev g_n ... g_1 x and runs the same loop on inverse tables.
class Recognizer {
public:
    struct Event {
        enum class Op { Read, Pop, Push };
        Op op;
        std::size_t cursor;  // input symbols consumed so far
        char symbol;         // '0'/'1', or 'g' for a generator token
    };

    struct Result {
        bool accepted = false;
        std::size_t steps = 0;          // reads + pops + pushes
        std::size_t input_symbols = 0;  // bits plus generator tokens
        std::size_t pushes = 0;
        std::vector<Event> trace;       // filled only on request
    };

    Recognizer(const GenSet& g, bool reverse = false);

    // Throws FormatError unless the stream lies in {0,1}* G+ {0,1}*. The format check
    // runs to the end of input even after the machine has already rejected.
    Result run(std::istream& in, bool keep_trace = false) const;
    Result run(const std::string& stream, bool keep_trace = false) const;

    bool reverse() const { return reverse_; }

private:
    // Domain words of one table as a binary trie; leaves carry the image to push.
    struct Trie {
        struct Node {
            int child[2] = {-1, -1};
            int leaf = -1;
        };
        std::vector<Node> nodes;
        std::vector<std::string> images;
    };
    static Trie compile(const VTable& t);

    bool reverse_;
    std::map<std::string, Trie> tries_;
};

// x^rev, then the tokens of w in application order, then y.
std::string lv_stream(const BitString& x, const GenWord& w, const BitString& y);
// y^rev, then the tokens of w in text order, then x.
std::string lv_rev_stream(const BitString& y, const GenWord& w, const BitString& x);

}  // namespace thompsonv
