#include "thompsonv/eval.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "thompsonv/textio.hpp"

namespace thompsonv {

void GenSet::add(const std::string& name, const VTable& table) {
    if (table.flavor() != Flavor::Group)
        throw Error(ErrorKind::FlavorMismatch, "generator '" + name + "' is not a V table");
    if (name.empty() || name.find_first_of(" \t^") != std::string::npos)
        throw Error(ErrorKind::ParseError, "bad generator name '" + name + "'");
    if (!tables_.count(name)) names_.push_back(name);
    tables_[name] = table;
    inverses_[name] = inverse(table);
}

const VTable& GenSet::table(const std::string& name, bool inverted) const {
    const auto& m = inverted ? inverses_ : tables_;
    auto it = m.find(name);
    if (it == m.end()) throw Error(ErrorKind::UnknownGenerator, "no generator named '" + name + "'");
    return it->second;
}

std::size_t GenSet::c_gamma() const {
    std::size_t c = 0;
    for (const auto& [n, t] : tables_) c = std::max(c, t.maxlen());
    return c;
}

static VTable table_of(std::initializer_list<std::pair<const char*, const char*>> rows) {
    std::vector<WordPair> p;
    for (auto [a, b] : rows) p.emplace_back(BitString::parse_text(a), BitString::parse_text(b));
    return VTable::validate(std::move(p));
}

GenSet GenSet::standard() {
    GenSet g;
    // rotation of the four leaves 0, 10, 110, 111
    g.add("a", table_of({{"0", "111"}, {"10", "0"}, {"110", "10"}, {"111", "110"}}));
    // rotation of 0, 10, 11 times a commuting involution; b^4 is the rotation, b^3 the involution
    g.add("b", table_of({{"00", "111"}, {"01", "110"}, {"100", "01"},
                         {"101", "00"}, {"110", "101"}, {"111", "100"}}));
    return g;
}

GenSet read_genset(std::istream& in) {
    GenSet g;
    std::string line, name, block;
    auto flush = [&]() {
        if (name.empty()) {
            if (!trim_copy(block).empty()) throw Error(ErrorKind::ParseError, "table data before any [name] section");
            return;
        }
        std::istringstream bs(block);
        g.add(name, read_table(bs));
    };
    while (std::getline(in, line)) {
        std::string t = trim_copy(line);
        if (!t.empty() && t[0] == '[') {
            flush();
            auto close = t.find(']');
            if (close == std::string::npos) throw Error(ErrorKind::ParseError, "unterminated section '" + t + "'");
            name = trim_copy(t.substr(1, close - 1));
            block.clear();
            continue;
        }
        if (name.empty() && (t.empty() || t[0] == '#')) continue;
        block += line + "\n";
    }
    flush();
    if (g.size() == 0) throw Error(ErrorKind::ParseError, "generating set file has no sections");
    return g;
}

std::string write_genset(const GenSet& g) {
    std::string out;
    for (const auto& n : g.names()) out += "[" + n + "]\n" + write_table(g.table(n)) + "\n";
    return out;
}

std::string Token::text() const {
    if (kind == Kind::Tau) return "t" + std::to_string(index);
    return inverted ? name + "^-1" : name;
}

std::string encode_tau(unsigned i) { return "a" + std::string(i + 1, 'b') + "a"; }

Token decode_tau(const std::string& s) {
    static const std::regex wire("a(b+)a");
    std::smatch m;
    if (!std::regex_match(s, m, wire)) throw Error(ErrorKind::MalformedEncoding, "'" + s + "' is not of the form a b^(i+1) a");
    std::size_t bs = m[1].length();
    if (bs < 2) throw Error(ErrorKind::MalformedEncoding, "'" + s + "' encodes index 0; indices start at 1");
    return Token::tau(static_cast<unsigned>(bs - 1));
}

GenWord parse_word(const std::string& text) {
    static const std::regex tau_plain("t\\{?([0-9]+)\\}?");
    static const std::regex wire_like("a[ab]*a");
    GenWord w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        std::smatch m;
        if (std::regex_match(tok, m, tau_plain)) {
            unsigned long i = std::stoul(m[1]);
            if (i < 1) throw Error(ErrorKind::ParseError, "tau index must be at least 1");
            w.push_back(Token::tau(static_cast<unsigned>(i)));
        } else if (tok.size() >= 3 && std::regex_match(tok, wire_like)) {
            w.push_back(decode_tau(tok));
        } else if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
            w.push_back(Token::gen(tok.substr(0, tok.size() - 3), true));
        } else {
            w.push_back(Token::gen(tok));
        }
    }
    return w;
}

std::string word_text(const GenWord& w) {
    std::string out;
    for (const auto& t : w) {
        if (!out.empty()) out += ' ';
        out += t.text();
    }
    return out;
}

std::size_t word_size(const GenWord& w) {
    std::size_t s = 0;
    for (const auto& t : w) s += t.size();
    return s;
}

std::size_t maxindex_tau(const GenWord& w) {
    std::size_t m = 0;
    for (const auto& t : w)
        if (t.kind == Token::Kind::Tau) m = std::max<std::size_t>(m, t.index + 1);
    return m;
}

GenWord inverse_word(const GenWord& w) {
    GenWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

GenWord concat(const GenWord& outer, const GenWord& inner) {
    GenWord out = outer;
    out.insert(out.end(), inner.begin(), inner.end());
    return out;
}

VTable tau_table(unsigned i) {
    if (i < 1) throw Error(ErrorKind::ParseError, "tau index must be at least 1");
    if (i + 1 > 20) throw Error(ErrorKind::TooLarge, "table of t" + std::to_string(i) + " has 2^" + std::to_string(i + 1) + " pairs");
    std::vector<WordPair> p;
    for (auto& x : all_words(i + 1)) {
        std::string s = x.str();
        std::swap(s[i - 1], s[i]);
        p.emplace_back(x, BitString(s));
    }
    return maximal_extension(VTable::trusted(std::move(p), Flavor::Group));
}

VTable word_to_element(const GenWord& w, const GenSet& g) {
    VTable acc;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->kind == Token::Kind::Tau) acc = compose(tau_table(it->index), acc);
        else acc = compose(g.table(it->name, it->inverted), acc);
    }
    return acc;
}

// One token on a known string; TooShort when the token needs bits past the end.
static ApplyOutcome step(const Token& t, const BitString& s, const GenSet& g) {
    if (t.kind == Token::Kind::Tau) {
        if (s.size() <= t.index) return ApplyOutcome::too_short();
        std::string r = s.str();
        std::swap(r[t.index - 1], r[t.index]);
        return ApplyOutcome::of(BitString(r));
    }
    return apply(g.table(t.name, t.inverted), s);
}

ApplyOutcome sequential_apply(const GenWord& w, const BitString& x, const GenSet& g) {
    BitString cur = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        ApplyOutcome r = step(*it, cur, g);
        if (!r.has_value()) return r;
        cur = std::move(r.value);
    }
    return ApplyOutcome::of(std::move(cur));
}

const char* class_name(InputClass c) {
    switch (c) {
        case InputClass::Long: return "long";
        case InputClass::Short: return "short";
        case InputClass::TooShort: return "too-short";
    }
    return "?";
}

InputClass classify_input(const GenWord& w, const BitString& x, const GenSet& g) {
    if (sequential_apply(w, x, g).has_value()) return InputClass::Long;
    if (apply(word_to_element(w, g), x).has_value()) return InputClass::Short;
    return InputClass::TooShort;
}

std::size_t long_input_threshold(const GenWord& w, const GenSet& g) {
    std::size_t c = g.c_gamma();
    return std::max(c, maxindex_tau(w)) * w.size();
}

bool evaluate(const GenWord& w, const BitString& x, const BitString& y, const GenSet& g) {
    return eval_oracle(word_to_element(w, g), x, y);
}

bool evaluate_universal(const GenWord& w, const BitString& x, const BitString& y, const GenSet& g) {
    std::size_t threshold = long_input_threshold(w, g);
    if (x.size() > threshold) return sequential_apply(w, x, g).is(y);
    std::size_t k = threshold - x.size();
    std::vector<BitString> pending{BitString()};
    while (!pending.empty()) {
        BitString u = std::move(pending.back());
        pending.pop_back();
        ApplyOutcome r = sequential_apply(w, x + u, g);
        if (r.has_value()) {
            // the whole cylinder xu{0,1}^(k-|u|) maps to r.value followed by the same tail
            if (r.value != y + u) return false;
            continue;
        }
        if (r.kind != ApplyOutcome::Kind::TooShort || u.size() == k) return false;
        pending.push_back(u.with(1));
        pending.push_back(u.with(0));
    }
    return true;
}

bool word_problem(const GenWord& w, const GenSet& g) { return is_identity(word_to_element(w, g)); }

bool word_problem_via_eval(const GenWord& w, std::size_t n, const GenSet& g) {
    VTable e = word_to_element(w, g);
    for (const auto& x : all_words(n))
        if (!eval_oracle(e, x, x)) return false;
    return true;
}

}  // namespace thompsonv
