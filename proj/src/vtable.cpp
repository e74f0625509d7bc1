#include "thompsonv/vtable.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "thompsonv/textio.hpp"

namespace thompsonv {

VTable VTable::trusted(std::vector<WordPair> pairs, Flavor flavor) {
    std::sort(pairs.begin(), pairs.end());
    VTable t{Blank{}};
    t.dom_.reserve(pairs.size());
    t.im_.reserve(pairs.size());
    for (auto& [d, i] : pairs) {
        t.dom_.push_back(std::move(d));
        t.im_.push_back(std::move(i));
    }
    t.flavor_ = flavor;
    return t;
}

VTable VTable::identity() { return VTable(); }

VTable VTable::validate(std::vector<WordPair> pairs, Flavor flavor) {
    std::vector<BitString> d, i;
    for (const auto& p : pairs) {
        d.push_back(p.first);
        i.push_back(p.second);
    }
    auto dc = PrefixCode::validate(d);
    if (dc.size() != pairs.size())
        throw Error(ErrorKind::NotBijective, "a domain word occurs twice");
    std::sort(i.begin(), i.end());
    if (std::adjacent_find(i.begin(), i.end()) != i.end())
        throw Error(ErrorKind::NotBijective, "image word " + std::adjacent_find(i.begin(), i.end())->text() +
                                                 " occurs twice");
    auto ic = PrefixCode::validate(i);
    if (flavor == Flavor::Group) {
        if (!dc.is_maximal())
            throw Error(ErrorKind::NotMaximal, "domain code has kraft sum " + dc.kraft().str());
        if (!ic.is_maximal())
            throw Error(ErrorKind::NotMaximal, "image code has kraft sum " + ic.kraft().str());
    }
    return trusted(std::move(pairs), flavor);
}

std::vector<WordPair> VTable::pairs() const {
    std::vector<WordPair> out;
    out.reserve(dom_.size());
    for (std::size_t k = 0; k < dom_.size(); ++k) out.emplace_back(dom_[k], im_[k]);
    return out;
}

std::size_t VTable::maxlen() const {
    std::size_t m = 0;
    for (const auto& w : dom_) m = std::max(m, w.size());
    for (const auto& w : im_) m = std::max(m, w.size());
    return m;
}

std::size_t VTable::domain_maxlen() const {
    std::size_t m = 0;
    for (const auto& w : dom_) m = std::max(m, w.size());
    return m;
}

ApplyOutcome apply(const VTable& f, const BitString& x) {
    long k = f.lookup(x);
    if (k >= 0) return ApplyOutcome::of(f.image()[k] + x.suffix_from(f.domain()[k].size()));
    if (strictly_prefixes_member(f.domain(), x)) return ApplyOutcome::too_short();
    return ApplyOutcome::no_prefix();
}

VTable maximal_extension(const VTable& f, std::uint64_t order_seed) {
    std::map<BitString, BitString> m;
    for (std::size_t k = 0; k < f.size(); ++k) m.emplace(f.domain()[k], f.image()[k]);
    std::vector<BitString> work(f.domain().begin(), f.domain().end());
    if (order_seed != 0) {
        std::mt19937_64 rng(order_seed);
        std::shuffle(work.begin(), work.end(), rng);
    }
    while (!work.empty()) {
        BitString d = std::move(work.back());
        work.pop_back();
        if (d.empty()) continue;
        auto it = m.find(d);
        if (it == m.end()) continue;
        BitString parent = d.without_last();
        auto i0 = m.find(parent.with(0));
        auto i1 = m.find(parent.with(1));
        if (i0 == m.end() || i1 == m.end()) continue;
        const BitString& q0 = i0->second;
        const BitString& q1 = i1->second;
        if (q0.empty() || q1.empty() || q0[q0.size() - 1] != 0 || q1[q1.size() - 1] != 1) continue;
        BitString q = q0.without_last();
        if (q != q1.without_last()) continue;
        m.erase(i0);
        m.erase(i1);
        m.emplace(parent, q);
        work.push_back(parent);
    }
    std::vector<WordPair> out(m.begin(), m.end());
    return VTable::trusted(std::move(out), f.flavor());
}

VTable compose_raw(const VTable& f, const VTable& g) {
    std::vector<WordPair> out;
    const auto& fd = f.domain();
    for (std::size_t k = 0; k < g.size(); ++k) {
        const BitString& p = g.domain()[k];
        const BitString& q = g.image()[k];
        long j = f.lookup(q);
        if (j >= 0) {
            out.emplace_back(p, f.image()[j] + q.suffix_from(fd[j].size()));
            continue;
        }
        // q is short for f: split p along the f-domain words extending q
        auto it = std::lower_bound(fd.begin(), fd.end(), q);
        for (; it != fd.end() && q.is_prefix_of(*it); ++it) {
            std::size_t idx = it - fd.begin();
            out.emplace_back(p + it->suffix_from(q.size()), f.image()[idx]);
        }
    }
    Flavor fl = (f.flavor() == Flavor::Group && g.flavor() == Flavor::Group) ? Flavor::Group : Flavor::Relaxed;
    return VTable::trusted(std::move(out), fl);
}

VTable compose(const VTable& f, const VTable& g) { return maximal_extension(compose_raw(f, g)); }

VTable inverse(const VTable& f) {
    std::vector<WordPair> out;
    out.reserve(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) out.emplace_back(f.image()[k], f.domain()[k]);
    return VTable::trusted(std::move(out), f.flavor());
}

bool is_identity(const VTable& f) {
    for (std::size_t k = 0; k < f.size(); ++k)
        if (f.domain()[k] != f.image()[k]) return false;
    return f.flavor() == Flavor::Group || f.domain_code().is_maximal();
}

bool equals(const VTable& f, const VTable& g) { return maximal_extension(f) == maximal_extension(g); }

std::vector<std::pair<BitString, ApplyOutcome>> action_at_depth(const VTable& f, std::size_t L) {
    if (L < f.domain_maxlen())
        throw Error(ErrorKind::DepthTooSmall, "depth " + std::to_string(L) + " below domain maxlen " +
                                                  std::to_string(f.domain_maxlen()));
    std::vector<std::pair<BitString, ApplyOutcome>> out;
    for (auto& x : all_words(L)) {
        auto r = apply(f, x);
        out.emplace_back(std::move(x), std::move(r));
    }
    return out;
}

bool eval_oracle(const VTable& f, const BitString& x, const BitString& y) {
    long k = f.lookup(x);
    if (k >= 0) return f.image()[k] + x.suffix_from(f.domain()[k].size()) == y;
    const auto& fd = f.domain();
    auto it = std::lower_bound(fd.begin(), fd.end(), x);
    std::vector<BitString> tails;
    for (; it != fd.end() && x.is_prefix_of(*it); ++it) {
        BitString u = it->suffix_from(x.size());
        if (f.image()[it - fd.begin()] != y + u) return false;
        tails.push_back(std::move(u));
    }
    // every extension xz must land in the domain ideal
    return !tails.empty() && kraft_sum(tails) == 1;
}

VTable restrict_to_code(const VTable& f, const PrefixCode& b) {
    const auto& bw = b.members();
    std::vector<WordPair> out;
    for (std::size_t k = 0; k < f.size(); ++k) {
        const BitString& d = f.domain()[k];
        if (find_prefix_member(bw, d) >= 0) {
            out.emplace_back(d, f.image()[k]);
            continue;
        }
        auto it = std::lower_bound(bw.begin(), bw.end(), d);
        for (; it != bw.end() && d.is_prefix_of(*it); ++it)
            out.emplace_back(*it, f.image()[k] + it->suffix_from(d.size()));
    }
    return VTable::trusted(std::move(out), f.flavor());
}

VTable refine_images_into(const VTable& f, const PrefixCode& b) {
    const auto& bw = b.members();
    std::vector<WordPair> out;
    std::vector<WordPair> work = f.pairs();
    while (!work.empty()) {
        auto [d, i] = std::move(work.back());
        work.pop_back();
        if (find_prefix_member(bw, i) >= 0 || !strictly_prefixes_member(bw, i)) {
            out.emplace_back(std::move(d), std::move(i));
            continue;
        }
        work.emplace_back(d.with(0), i.with(0));
        work.emplace_back(d.with(1), i.with(1));
    }
    return VTable::trusted(std::move(out), f.flavor());
}

VTable pair_in_order(const PrefixCode& from, const PrefixCode& to, Flavor flavor) {
    if (from.size() != to.size())
        throw Error(ErrorKind::NotBijective, "codes of different sizes cannot be paired");
    std::vector<WordPair> out;
    for (std::size_t k = 0; k < from.size(); ++k) out.emplace_back(from.members()[k], to.members()[k]);
    return VTable::trusted(std::move(out), flavor);
}

VTable transitive_element(const BitString& u, const BitString& v) {
    auto [qu, qv] = equalize_complements(u, v);
    std::vector<WordPair> out{{u, v}};
    for (std::size_t k = 0; k < qu.size(); ++k) out.emplace_back(qu.members()[k], qv.members()[k]);
    return VTable::trusted(std::move(out), Flavor::Group);
}

VTable read_table(std::istream& in) {
    PairFile pf = read_pair_file(in);
    if (pf.n != 1) throw Error(ErrorKind::ParseError, "expected an n=1 table, got n=" + std::to_string(pf.n));
    Flavor fl = Flavor::Group;
    if (pf.flavor == "relaxed") fl = Flavor::Relaxed;
    else if (!pf.flavor.empty() && pf.flavor != "group")
        throw Error(ErrorKind::ParseError, "unsupported flavor '" + pf.flavor + "' for a V table");
    std::vector<WordPair> pairs;
    for (const auto& [a, b] : pf.pairs) pairs.emplace_back(BitString::parse_text(a), BitString::parse_text(b));
    return VTable::validate(std::move(pairs), fl);
}

std::string write_table(const VTable& f) {
    std::ostringstream os;
    os << "n=1\n";
    if (f.flavor() == Flavor::Relaxed) os << "flavor=relaxed\n";
    for (std::size_t k = 0; k < f.size(); ++k) os << f.domain()[k].text() << " -> " << f.image()[k].text() << "\n";
    return os.str();
}

}  // namespace thompsonv
