#include "thompsonv/monoid.hpp"

#include <algorithm>

#include "thompsonv/textio.hpp"

namespace thompsonv {

MTable MTable::validate(std::vector<WordPair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j)
            if (i != j && pairs[i].first.is_prefix_of(pairs[j].first))
                throw Error(ErrorKind::PrefixViolation,
                            "domain words " + pairs[i].first.text() + " and " + pairs[j].first.text() + " overlap");
    MTable t;
    t.pairs_ = std::move(pairs);
    return t;
}

std::size_t MTable::domain_maxlen() const {
    std::size_t m = 0;
    for (const auto& [d, q] : pairs_) m = std::max(m, d.size());
    return m;
}

std::size_t MTable::maxlen() const {
    std::size_t m = 0;
    for (const auto& [d, q] : pairs_) m = std::max({m, d.size(), q.size()});
    return m;
}

MTable bracket(const BitString& v, const BitString& u) { return MTable::validate({{u, v}}); }

ApplyOutcome apply_m(const MTable& f, const BitString& x) {
    bool longer = false;
    for (const auto& [d, q] : f.pairs()) {
        if (d.is_prefix_of(x)) return ApplyOutcome::of(q + x.suffix_from(d.size()));
        if (x.is_prefix_of(d)) longer = true;
    }
    return longer ? ApplyOutcome::too_short() : ApplyOutcome::no_prefix();
}

MTable compose_m(const MTable& f, const MTable& g) {
    std::vector<WordPair> out;
    for (const auto& [p, q] : g.pairs())
        for (const auto& [r, s] : f.pairs()) {
            if (r.is_prefix_of(q)) out.emplace_back(p, s + q.suffix_from(r.size()));
            else if (q.is_prefix_of(r)) out.emplace_back(p + r.suffix_from(q.size()), s);
        }
    return MTable::validate(std::move(out));
}

bool action_equal_m(const MTable& f, const MTable& g, std::size_t L) {
    for (const auto& x : all_words(L)) {
        auto a = apply_m(f, x), b = apply_m(g, x);
        if (a.has_value() != b.has_value()) return false;
        if (a.has_value() && !(a.value == b.value)) return false;
    }
    return true;
}

bool extended_eval_m(const MTable& f, const BitString& x, const BitString& y) {
    std::vector<BitString> below;
    for (const auto& [d, q] : f.pairs()) {
        if (d.is_prefix_of(x)) return q + x.suffix_from(d.size()) == y;
        if (x.is_prefix_of(d)) {
            BitString z = d.suffix_from(x.size());
            if (!(q == y + z)) return false;
            below.push_back(z);
        }
    }
    if (below.empty()) return false;
    // the words hanging below x must cover its cylinder: Kraft sum exactly 1
    return PrefixCode::validate(below).is_maximal();
}

void MonoidSet::add(const std::string& name, const MTable& t) {
    if (std::find(names_.begin(), names_.end(), name) != names_.end())
        throw Error(ErrorKind::ParseError, "monoid generator '" + name + "' defined twice");
    names_.push_back(name);
    tables_.push_back(t);
}

const MTable& MonoidSet::table(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw Error(ErrorKind::UnknownGenerator, "no monoid generator named '" + name + "'");
    return tables_[static_cast<std::size_t>(it - names_.begin())];
}

MonoidSet MonoidSet::standard() {
    MonoidSet s;
    s.add("push0", bracket(BitString("0"), BitString()));
    s.add("push1", bracket(BitString("1"), BitString()));
    s.add("pop0", bracket(BitString(), BitString("0")));
    s.add("pop1", bracket(BitString(), BitString("1")));
    return s;
}

GenWord decompose_pushpop(const BitString& v, const BitString& u) {
    GenWord w;
    for (std::size_t i = 0; i < v.size(); ++i) w.push_back(Token::gen(v[i] ? "push1" : "push0"));
    for (std::size_t i = u.size(); i-- > 0;) w.push_back(Token::gen(u[i] ? "pop1" : "pop0"));
    return w;
}

MTable word_to_mtable(const GenWord& w, const MonoidSet& g) {
    MTable acc = MTable::identity();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->kind == Token::Kind::Tau) {
            acc = compose_m(MTable::validate(tau_table(it->index).pairs()), acc);
            continue;
        }
        if (it->inverted) throw Error(ErrorKind::UnknownGenerator, "monoid generators have no inverses: " + it->text());
        acc = compose_m(g.table(it->name), acc);
    }
    return acc;
}

bool eval_reduction_check(const GenWord& w, const BitString& x, const BitString& y, std::size_t L, const MonoidSet& g) {
    MTable lhs = compose_m(word_to_mtable(w, g), bracket(x, x));
    return action_equal_m(lhs, bracket(y, x), L);
}

std::size_t reduction_depth(const GenWord& w, const BitString& x, const BitString& y, const MonoidSet& g) {
    MTable lhs = compose_m(word_to_mtable(w, g), bracket(x, x));
    (void)y;
    return std::max(lhs.domain_maxlen(), x.size()) + 1;
}

MTable read_mtable(std::istream& in) {
    PairFile pf = read_pair_file(in);
    if (pf.n != 1) throw Error(ErrorKind::WidthMismatch, "monoid tables act on single strings (n=1)");
    if (!pf.flavor.empty() && pf.flavor != "monoid")
        throw Error(ErrorKind::FlavorMismatch, "expected flavor=monoid, got '" + pf.flavor + "'");
    std::vector<WordPair> pairs;
    for (const auto& [a, b] : pf.pairs) pairs.emplace_back(BitString::parse_text(a), BitString::parse_text(b));
    return MTable::validate(std::move(pairs));
}

std::string write_mtable(const MTable& f) {
    std::string out = "n=1\nflavor=monoid\n";
    for (const auto& [d, q] : f.pairs()) out += d.text() + " -> " + q.text() + "\n";
    return out;
}

}  // namespace thompsonv
