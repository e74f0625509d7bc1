#include "thompsonv/recognizer.hpp"

#include <sstream>

namespace thompsonv {

Recognizer::Trie Recognizer::compile(const VTable& t) {
    Trie tr;
    tr.nodes.emplace_back();
    for (std::size_t i = 0; i < t.size(); ++i) {
        int at = 0;
        for (std::size_t k = 0; k < t.domain()[i].size(); ++k) {
            int b = t.domain()[i][k];
            if (tr.nodes[at].child[b] < 0) {
                tr.nodes[at].child[b] = static_cast<int>(tr.nodes.size());
                tr.nodes.emplace_back();
            }
            at = tr.nodes[at].child[b];
        }
        tr.nodes[at].leaf = static_cast<int>(i);
        tr.images.push_back(t.image()[i].str());
    }
    return tr;
}

Recognizer::Recognizer(const GenSet& g, bool reverse) : reverse_(reverse) {
    // inverse letters are separate symbols of the alphabet
    for (const auto& n : g.names()) {
        tries_.emplace(n, compile(g.table(n, reverse)));
        tries_.emplace(n + "^-1", compile(g.table(n, !reverse)));
    }
}

static bool all_bits(const std::string& s) { return s.find_first_not_of("01") == std::string::npos; }

Recognizer::Result Recognizer::run(std::istream& in, bool keep_trace) const {
    Result r;
    std::vector<char> stack;  // back() is the top
    bool dead = false;
    int phase = 0;  // 0 reading x^rev, 1 generators, 2 reading y
    auto log = [&](Event::Op op, char s) {
        ++r.steps;
        if (keep_trace) r.trace.push_back({op, r.input_symbols, s});
    };

    std::string tok;
    while (in >> tok) {
        if (all_bits(tok)) {
            if (phase == 1) phase = 2;
            for (char c : tok) {
                ++r.input_symbols;
                log(Event::Op::Read, c);
                if (dead) continue;
                if (phase == 0) {
                    stack.push_back(c);
                    ++r.pushes;
                    log(Event::Op::Push, c);
                } else if (stack.empty() || stack.back() != c) {
                    dead = true;
                } else {
                    stack.pop_back();
                    log(Event::Op::Pop, c);
                }
            }
            continue;
        }
        auto it = tries_.find(tok);
        if (it == tries_.end()) throw Error(ErrorKind::FormatError, "'" + tok + "' is neither bits nor a generator");
        if (phase == 2) throw Error(ErrorKind::FormatError, "generator '" + tok + "' after the output bits");
        phase = 1;
        ++r.input_symbols;
        log(Event::Op::Read, 'g');
        if (dead) continue;
        const Trie& tr = it->second;
        int at = 0;
        while (tr.nodes[at].leaf < 0) {
            if (stack.empty()) {  // the token needs bits nobody supplied: not a long input
                dead = true;
                break;
            }
            int b = stack.back() - '0';
            log(Event::Op::Pop, stack.back());
            stack.pop_back();
            at = tr.nodes[at].child[b];
            if (at < 0) {  // only reachable with a non-maximal domain
                dead = true;
                break;
            }
        }
        if (dead) continue;
        const std::string& img = tr.images[tr.nodes[at].leaf];
        for (auto c = img.rbegin(); c != img.rend(); ++c) {
            stack.push_back(*c);
            ++r.pushes;
            log(Event::Op::Push, *c);
        }
    }
    if (phase == 0) throw Error(ErrorKind::FormatError, "the stream has no generator token");
    r.accepted = !dead && stack.empty();
    return r;
}

Recognizer::Result Recognizer::run(const std::string& stream, bool keep_trace) const {
    std::istringstream in(stream);
    return run(in, keep_trace);
}

static std::string bits_token(const BitString& s) { return s.empty() ? std::string() : s.str() + " "; }

std::string lv_stream(const BitString& x, const GenWord& w, const BitString& y) {
    std::string out = bits_token(x.reversed());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out += it->text() + " ";
    return out + y.str();
}

std::string lv_rev_stream(const BitString& y, const GenWord& w, const BitString& x) {
    std::string out = bits_token(y.reversed());
    for (const auto& t : w) out += t.text() + " ";
    return out + x.str();
}

}  // namespace thompsonv
