#include "thompsonv/brin2v.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "thompsonv/textio.hpp"

namespace thompsonv {

namespace {

void same_arity(const Tuple& a, const Tuple& b) {
    if (a.n() != b.n())
        throw Error(ErrorKind::WidthMismatch, "tuples " + a.text() + " and " + b.text() + " have different arity");
}

// Drop the suffix u coordinatewise from w, if w ends in u everywhere.
std::optional<Tuple> strip_suffix(const Tuple& w, const Tuple& u) {
    Tuple out = Tuple::empty(w.n());
    for (std::size_t i = 0; i < w.n(); ++i) {
        const auto& a = w.c[i].str();
        const auto& b = u.c[i].str();
        if (b.size() > a.size() || a.compare(a.size() - b.size(), b.size(), b) != 0) return std::nullopt;
        out.c[i] = w.c[i].prefix(a.size() - b.size());
    }
    return out;
}

std::size_t arity_of(const TupleCode& s, std::size_t fallback = 2) { return s.empty() ? fallback : s.front().n(); }

void sort_unique(TupleCode& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

}  // namespace

// ---- tuples --------------------------------------------------------------------------

Tuple Tuple::unit(std::size_t n, std::size_t i, int b) {
    Tuple t = empty(n);
    t.c[i] = BitString::bit(b);
    return t;
}

Tuple Tuple::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw Error(ErrorKind::ParseError, "expected a tuple like (u,v), got '" + text + "'");
    Tuple t;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t start = 0;
    while (true) {
        auto comma = body.find(',', start);
        auto piece = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (piece.empty()) throw Error(ErrorKind::ParseError, "empty coordinate in '" + text + "' (write e for the empty word)");
        t.c.push_back(BitString::parse_text(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return t;
}

std::size_t Tuple::ell() const {
    std::size_t m = 0;
    for (const auto& x : c) m = std::max(m, x.size());
    return m;
}

std::size_t Tuple::min_len() const {
    if (c.empty()) return 0;
    std::size_t m = c[0].size();
    for (const auto& x : c) m = std::min(m, x.size());
    return m;
}

std::size_t Tuple::total_len() const {
    std::size_t m = 0;
    for (const auto& x : c) m += x.size();
    return m;
}

std::string Tuple::text() const {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + c[i].text();
    return out + ")";
}

bool Tuple::init_le(const Tuple& v) const {
    same_arity(*this, v);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_prefix_of(v.c[i])) return false;
    return true;
}

Tuple Tuple::quotient(const Tuple& v) const {
    Tuple out = empty(n());
    for (std::size_t i = 0; i < c.size(); ++i) out.c[i] = v.c[i].suffix_from(c[i].size());
    return out;
}

Tuple operator+(const Tuple& a, const Tuple& b) {
    same_arity(a, b);
    Tuple out = a;
    for (std::size_t i = 0; i < a.n(); ++i) out.c[i] += b.c[i];
    return out;
}

std::optional<Tuple> join(const Tuple& u, const Tuple& v) {
    same_arity(u, v);
    Tuple out = Tuple::empty(u.n());
    for (std::size_t i = 0; i < u.n(); ++i) {
        if (!u.c[i].comparable(v.c[i])) return std::nullopt;
        out.c[i] = u.c[i].size() >= v.c[i].size() ? u.c[i] : v.c[i];
    }
    return out;
}

std::size_t maxlen(const TupleCode& s) {
    std::size_t m = 0;
    for (const auto& t : s) m = std::max(m, t.ell());
    return m;
}

std::string code_text(const TupleCode& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].text();
    return out + "}";
}

TupleCode parse_code(const std::string& text) {
    TupleCode out;
    std::size_t pos = 0;
    while ((pos = text.find('(', pos)) != std::string::npos) {
        auto close = text.find(')', pos);
        if (close == std::string::npos) throw Error(ErrorKind::ParseError, "unclosed tuple in '" + text + "'");
        out.push_back(Tuple::parse(text.substr(pos, close - pos + 1)));
        pos = close + 1;
    }
    return out;
}

CodeFlavor code_flavor_checks(const TupleCode& s) {
    CodeFlavor f{true, true};
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (i == j) continue;
            if (s[i].init_le(s[j])) f.initial_factor = false;
            if (j > i && join(s[i], s[j])) f.joinless = false;
        }
    return f;
}

TupleCode join_refine(const TupleCode& c1, const TupleCode& c2) {
    TupleCode out;
    for (const auto& a : c1)
        for (const auto& b : c2)
            if (auto j = join(a, b)) out.push_back(*j);
    sort_unique(out);
    return out;
}

TupleCode minimal_elements(TupleCode s) {
    sort_unique(s);
    TupleCode out;
    for (const auto& t : s) {
        bool covered = false;
        for (const auto& u : s)
            if (!(u == t) && u.init_le(t)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(t);
    }
    return out;
}

TupleCode strict_initial_factors(const TupleCode& p) {
    TupleCode out;
    for (const auto& q : p) {
        // odometer over the prefix lengths of every coordinate
        std::vector<std::size_t> len(q.n(), 0);
        while (true) {
            Tuple s = Tuple::empty(q.n());
            for (std::size_t i = 0; i < q.n(); ++i) s.c[i] = q.c[i].prefix(len[i]);
            if (!(s == q)) out.push_back(s);
            std::size_t i = 0;
            while (i < q.n() && len[i] == q.c[i].size()) len[i++] = 0;
            if (i == q.n()) break;
            ++len[i];
        }
    }
    sort_unique(out);
    return out;
}

TupleCode complement_candidates(const TupleCode& p) {
    TupleCode out;
    std::size_t n = arity_of(p);
    for (const auto& s : strict_initial_factors(p))
        for (std::size_t i = 0; i < n; ++i)
            for (int b = 0; b < 2; ++b) {
                Tuple t = s + Tuple::unit(n, i, b);
                bool joins = false;
                for (const auto& q : p)
                    if (join(t, q)) {
                        joins = true;
                        break;
                    }
                if (!joins) out.push_back(t);
            }
    sort_unique(out);
    return out;
}

TupleCode complement_init_literal(const TupleCode& p) { return minimal_elements(complement_candidates(p)); }

TupleCode complement_init(const TupleCode& p, std::size_t n) {
    if (p.empty()) return {Tuple::empty(n)};
    n = p.front().n();
    std::vector<std::vector<BitString>> choices(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::set<BitString> pre;
        for (const auto& q : p)
            for (std::size_t l = 0; l <= q.c[i].size(); ++l) pre.insert(q.c[i].prefix(l));
        std::set<BitString> all = pre;
        for (const auto& u : pre)
            for (int b = 0; b < 2; ++b) all.insert(u.with(b));
        choices[i].assign(all.begin(), all.end());
    }
    TupleCode out;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        Tuple t = Tuple::empty(n);
        for (std::size_t i = 0; i < n; ++i) t.c[i] = choices[i][pick[i]];
        if (std::none_of(p.begin(), p.end(), [&](const Tuple& q) { return join(t, q).has_value(); })) out.push_back(t);
        std::size_t i = 0;
        while (i < n && pick[i] + 1 == choices[i].size()) pick[i++] = 0;
        if (i == n) break;
        ++pick[i];
    }
    return minimal_elements(std::move(out));
}

bool is_essential(const TupleCode& p) { return !p.empty() && complement_init(p).empty(); }

std::vector<Tuple> all_tuples(std::size_t n, std::size_t L) {
    if (n * L > 12) throw Error(ErrorKind::TooLarge, "depth expansion of " + std::to_string(n * L) + " bits refused");
    std::vector<Tuple> out;
    std::size_t bits = n * L;
    for (unsigned long long v = 0; v < (1ULL << bits); ++v) {
        BitString all = BitString::from_uint(v, bits);
        Tuple t = Tuple::empty(n);
        for (std::size_t i = 0; i < n; ++i) t.c[i] = all.suffix_from(i * L).prefix(L);
        out.push_back(t);
    }
    return out;
}

bool is_essential_by_depth(const TupleCode& p) {
    if (p.empty()) return false;
    for (const auto& x : all_tuples(arity_of(p), maxlen(p))) {
        bool hit = false;
        for (const auto& q : p)
            if (q.init_le(x)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

// ---- tables --------------------------------------------------------------------------

NTable NTable::raw(std::vector<std::pair<Tuple, Tuple>> pairs) {
    if (pairs.empty()) throw Error(ErrorKind::EmptyInput, "a table needs at least one pair");
    NTable t;
    t.n_ = pairs.front().first.n();
    for (const auto& [d, q] : pairs)
        if (d.n() != t.n_ || q.n() != t.n_) throw Error(ErrorKind::WidthMismatch, "mixed tuple arities in a table");
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i].first == pairs[i - 1].first)
            throw Error(ErrorKind::NotAFunction, "domain member " + pairs[i].first.text() + " listed twice");
    t.pairs_ = std::move(pairs);
    t.flavor_ = NFlavor::Raw;
    return t;
}

NTable NTable::validate(std::vector<std::pair<Tuple, Tuple>> pairs, NFlavor flavor) {
    NTable t = raw(std::move(pairs));
    t.flavor_ = flavor;
    if (flavor == NFlavor::Raw) return t;
    auto dom = t.domain(), img = t.image();
    auto img_sorted = img;
    sort_unique(img_sorted);
    if (img_sorted.size() != img.size()) throw Error(ErrorKind::NotBijective, "two domain members share an image");
    for (auto* side : {&dom, &img}) {
        auto fl = code_flavor_checks(*side);
        const char* which = side == &dom ? "domain" : "image";
        if (flavor == NFlavor::Group && !fl.joinless)
            throw Error(ErrorKind::PrefixViolation, std::string(which) + " code is not joinless");
        if (!fl.initial_factor) throw Error(ErrorKind::PrefixViolation, std::string(which) + " code is not an initial factor code");
        if (!is_essential(*side)) throw Error(ErrorKind::NotMaximal, std::string(which) + " code is not essential");
    }
    if (flavor == NFlavor::Extension) {
        auto ch = table_checks(t);
        if (!ch.function) throw Error(ErrorKind::NotAFunction, "the table's right ideal morphism is not a function");
        if (!ch.injective) throw Error(ErrorKind::NotInjective, "the table's right ideal morphism is not injective");
    }
    return t;
}

NTable NTable::identity(std::size_t n) { return validate({{Tuple::empty(n), Tuple::empty(n)}}); }

TupleCode NTable::domain() const {
    TupleCode out;
    for (const auto& pr : pairs_) out.push_back(pr.first);
    return out;
}

TupleCode NTable::image() const {
    TupleCode out;
    for (const auto& pr : pairs_) out.push_back(pr.second);
    return out;
}

std::size_t NTable::maxlen() const { return std::max(thompsonv::maxlen(domain()), thompsonv::maxlen(image())); }
std::size_t NTable::domain_maxlen() const { return thompsonv::maxlen(domain()); }

TupleOutcome apply_n(const NTable& f, const Tuple& x) {
    bool below = false;
    for (const auto& [p, q] : f.pairs()) {
        if (p.init_le(x)) return {ApplyOutcome::Kind::Value, q + p.quotient(x)};
        if (!below && join(p, x)) below = true;
    }
    return {below ? ApplyOutcome::Kind::TooShort : ApplyOutcome::Kind::NoPrefix, {}};
}

std::optional<Tuple> extended_apply_n(const NTable& f, const Tuple& x) {
    std::optional<Tuple> y;
    for (const auto& [p, q] : f.pairs()) {
        auto j = join(p, x);
        if (!j) continue;
        auto cand = strip_suffix(q + p.quotient(*j), x.quotient(*j));
        if (!cand) return std::nullopt;
        if (!y) y = cand;
        else if (!(*y == *cand)) return std::nullopt;
    }
    return y;
}

namespace {

// The first pair of members whose join gets two values, for the table read left to right.
std::optional<std::pair<Tuple, Tuple>> first_clash(const std::vector<std::pair<Tuple, Tuple>>& pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            auto J = join(pairs[i].first, pairs[j].first);
            if (!J) continue;
            if (!(pairs[i].second + pairs[i].first.quotient(*J) == pairs[j].second + pairs[j].first.quotient(*J)))
                return std::make_pair(pairs[i].first, pairs[j].first);
        }
    return std::nullopt;
}

std::vector<std::pair<Tuple, Tuple>> swapped(const NTable& f) {
    std::vector<std::pair<Tuple, Tuple>> out;
    for (const auto& [p, q] : f.pairs()) out.emplace_back(q, p);
    return out;
}

// Function and totality of a pair list, read at depth L.
std::pair<bool, bool> depth_function_total(const std::vector<std::pair<Tuple, Tuple>>& pairs, std::size_t n, std::size_t L) {
    bool function = true, total = true;
    for (const auto& x : all_tuples(n, L)) {
        std::optional<Tuple> v;
        for (const auto& [p, q] : pairs) {
            if (!p.init_le(x)) continue;
            Tuple w = q + p.quotient(x);
            if (!v) v = w;
            else if (!(*v == w)) function = false;
        }
        if (!v) total = false;
    }
    return {function, total};
}

}  // namespace

TableChecks table_checks(const NTable& f) {
    TableChecks c;
    c.clash = first_clash(f.pairs());
    c.function = !c.clash;
    c.injective = !first_clash(swapped(f));
    c.total = is_essential(f.domain());
    c.surjective = is_essential(f.image());
    c.group = c.function && c.injective && c.total && c.surjective;
    return c;
}

TableChecks table_checks_by_depth(const NTable& f) {
    TableChecks c;
    auto [fn, tot] = depth_function_total(f.pairs(), f.n(), thompsonv::maxlen(f.domain()));
    auto [inj, sur] = depth_function_total(swapped(f), f.n(), thompsonv::maxlen(f.image()));
    c.function = fn;
    c.total = tot;
    c.injective = inj;
    c.surjective = sur;
    c.group = fn && tot && inj && sur;
    if (!fn) c.clash = first_clash(f.pairs());
    return c;
}

NTable maximal_extension_n(const NTable& f, std::uint64_t order_seed) {
    auto checks = table_checks(f);
    if (!checks.function) throw Error(ErrorKind::NotAFunction, "cannot extend: the table is not a function");
    if (!checks.injective) throw Error(ErrorKind::NotInjective, "cannot extend: the table is not injective");
    std::size_t n = f.n();
    std::map<Tuple, Tuple> known;
    for (const auto& x : all_tuples(n, f.domain_maxlen())) {
        auto r = apply_n(f, x);
        if (r.has_value()) known.emplace(x, r.value);
    }
    std::mt19937_64 rng(order_seed);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<Tuple, Tuple>> entries(known.begin(), known.end());
        if (order_seed) std::shuffle(entries.begin(), entries.end(), rng);
        for (const auto& [d, q] : entries)
            for (std::size_t i = 0; i < n; ++i) {
                if (d.c[i].empty() || q.c[i].empty()) continue;
                int b = d.c[i][d.c[i].size() - 1];
                if (q.c[i][q.c[i].size() - 1] != b) continue;
                Tuple s = d, t = q;
                s.c[i] = s.c[i].without_last();
                t.c[i] = t.c[i].without_last();
                if (known.count(s)) continue;
                auto sib = known.find(s + Tuple::unit(n, i, 1 - b));
                if (sib == known.end() || !(sib->second == t + Tuple::unit(n, i, 1 - b))) continue;
                known.emplace(s, t);
                changed = true;
            }
    }
    TupleCode keys;
    for (const auto& kv : known) keys.push_back(kv.first);
    std::vector<std::pair<Tuple, Tuple>> out;
    for (const auto& s : minimal_elements(keys)) out.emplace_back(s, known.at(s));
    // a partial table stays partial; only total and onto ones get the extension flavor
    return NTable::validate(std::move(out), checks.total && checks.surjective ? NFlavor::Extension : NFlavor::Raw);
}

NTable reduce_n(const NTable& f) {
    std::map<Tuple, Tuple> m(f.pairs().begin(), f.pairs().end());
    std::size_t n = f.n();
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = m.begin(); it != m.end() && !changed; ++it) {
            const auto& [d, q] = *it;
            for (std::size_t i = 0; i < n && !changed; ++i) {
                if (d.c[i].empty() || q.c[i].empty() || d.c[i][d.c[i].size() - 1] != 0 || q.c[i][q.c[i].size() - 1] != 0)
                    continue;
                Tuple s = d, t = q;
                s.c[i] = s.c[i].without_last();
                t.c[i] = t.c[i].without_last();
                auto sib = m.find(s + Tuple::unit(n, i, 1));
                if (sib == m.end() || !(sib->second == t + Tuple::unit(n, i, 1))) continue;
                Tuple d0 = d;
                m.erase(sib);
                m.erase(d0);
                m.emplace(s, t);
                changed = true;
            }
        }
    }
    return NTable::validate(std::vector<std::pair<Tuple, Tuple>>(m.begin(), m.end()), f.flavor());
}

NTable compose_n(const NTable& f, const NTable& g) {
    if (f.flavor() != NFlavor::Group || g.flavor() != NFlavor::Group)
        throw Error(ErrorKind::FlavorMismatch, "composition is defined on maximal joinless tables");
    if (f.n() != g.n()) throw Error(ErrorKind::WidthMismatch, "tables of different arity");
    std::vector<std::pair<Tuple, Tuple>> out;
    for (const auto& [p, q] : g.pairs())
        for (const auto& [r, s] : f.pairs())
            if (auto j = join(q, r)) out.emplace_back(p + q.quotient(*j), s + r.quotient(*j));
    return reduce_n(NTable::validate(std::move(out), NFlavor::Group));
}

NTable inverse_n(const NTable& f) { return NTable::validate(swapped(f), f.flavor()); }

bool equals_n(const NTable& f, const NTable& g) {
    if (f.n() != g.n()) return false;
    std::size_t L = std::max(f.domain_maxlen(), g.domain_maxlen());
    for (const auto& x : all_tuples(f.n(), L)) {
        auto a = apply_n(f, x), b = apply_n(g, x);
        if (a.kind != b.kind || !(a.value == b.value)) return false;
    }
    return true;
}

bool is_identity_n(const NTable& f) { return equals_n(f, NTable::identity(f.n())); }

NTable product_with_identity(const VTable& g, std::size_t n) {
    std::vector<std::pair<Tuple, Tuple>> out;
    for (const auto& [d, q] : g.pairs()) {
        Tuple a = Tuple::empty(n), b = Tuple::empty(n);
        a.c[0] = d;
        b.c[0] = q;
        out.emplace_back(a, b);
    }
    return NTable::validate(std::move(out));
}

NTable sigma_element() {
    return NTable::validate({{Tuple::parse("(e,0)"), Tuple::parse("(0,e)")}, {Tuple::parse("(e,1)"), Tuple::parse("(1,e)")}});
}

// ---- words ---------------------------------------------------------------------------

void GenSet2::add(const std::string& name, const NTable& t) {
    if (has(name)) throw Error(ErrorKind::ParseError, "generator '" + name + "' defined twice");
    names_.push_back(name);
    tables_.push_back(t);
    inverses_.push_back(inverse_n(t));
}

bool GenSet2::has(const std::string& name) const { return std::find(names_.begin(), names_.end(), name) != names_.end(); }

const NTable& GenSet2::table(const std::string& name, bool inverted) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw Error(ErrorKind::UnknownGenerator, "no 2V generator named '" + name + "'");
    auto i = static_cast<std::size_t>(it - names_.begin());
    return inverted ? inverses_[i] : tables_[i];
}

std::size_t GenSet2::lambda() const {
    std::size_t m = 0;
    for (const auto& t : tables_) m = std::max(m, t.maxlen());
    return m;
}

namespace {

const NTable& token_table(const Token& t, const GenSet2& g) {
    if (t.kind == Token::Kind::Tau)
        throw Error(ErrorKind::UnknownGenerator, "Tau tokens have no meaning over a 2V generating set; embed the word first");
    return g.table(t.name, t.inverted);
}

}  // namespace

NTable word_to_element_n(const GenWord& w, const GenSet2& g) {
    std::size_t n = g.names().empty() ? 2 : g.table(g.names().front()).n();
    NTable acc = NTable::identity(n);
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = compose_n(token_table(*it, g), acc);
    return acc;
}

TupleOutcome sequential_apply_n(const GenWord& w, const Tuple& x, const GenSet2& g) {
    TupleOutcome cur{ApplyOutcome::Kind::Value, x};
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        auto r = apply_n(token_table(*it, g), cur.value);
        if (!r.has_value()) return {ApplyOutcome::Kind::TooShort, {}};
        cur = r;
    }
    return cur;
}

bool eval2v(const GenWord& w, const Tuple& x, const Tuple& y, const GenSet2& g) {
    NTable f = word_to_element_n(w, g);
    if (x.n() != f.n() || y.n() != f.n()) return false;
    auto v = extended_apply_n(f, x);
    return v && *v == y;
}

InputClass classify_n(const GenWord& w, const Tuple& x, const GenSet2& g) {
    if (sequential_apply_n(w, x, g).has_value()) return InputClass::Long;
    if (extended_apply_n(word_to_element_n(w, g), x)) return InputClass::Short;
    return InputClass::TooShort;
}

GenWord embed_v_to_2v(const GenWord& w) {
    GenWord out;
    for (const auto& t : w) {
        if (t.kind == Token::Kind::Gen) {
            out.push_back(t);
            continue;
        }
        for (unsigned k = 1; k < t.index; ++k) out.push_back(Token::gen(sigma_name));
        out.push_back(Token::gen(swap12_name));
        for (unsigned k = 1; k < t.index; ++k) out.push_back(Token::gen(sigma_name, true));
    }
    return out;
}

GenSet2 embed_genset(const GenSet& g) {
    GenSet2 out;
    for (const auto& name : g.names()) {
        if (name == sigma_name || name == swap12_name)
            throw Error(ErrorKind::ParseError, "generator name '" + name + "' is reserved by the embedding");
        out.add(name, product_with_identity(g.table(name)));
    }
    out.add(sigma_name, sigma_element());
    out.add(swap12_name, product_with_identity(tau_table(1)));
    return out;
}

NTable read_ntable(std::istream& in, NFlavor flavor) {
    PairFile pf = read_pair_file(in);
    std::vector<std::pair<Tuple, Tuple>> pairs;
    for (const auto& [a, b] : pf.pairs) {
        Tuple u = Tuple::parse(a), v = Tuple::parse(b);
        if (u.n() != static_cast<std::size_t>(pf.n) || v.n() != static_cast<std::size_t>(pf.n))
            throw Error(ErrorKind::WidthMismatch, "tuple arity differs from the header n=" + std::to_string(pf.n));
        pairs.emplace_back(u, v);
    }
    return NTable::validate(std::move(pairs), flavor);
}

std::string write_ntable(const NTable& f) {
    std::string out = "n=" + std::to_string(f.n()) + "\n";
    for (const auto& [p, q] : f.pairs()) out += p.text() + " -> " + q.text() + "\n";
    return out;
}

}  // namespace thompsonv
