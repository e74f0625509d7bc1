#include "thompsonv/fixators.hpp"

#include <algorithm>
#include <set>

namespace thompsonv {

namespace {

VTable rows(std::initializer_list<std::pair<const char*, const char*>> r) {
    std::vector<WordPair> p;
    for (auto [a, b] : r) p.emplace_back(BitString(a), BitString(b));
    return VTable::validate(std::move(p));
}

Factor f_letter(Factor::Kind kind, bool inverted) {
    Factor f;
    f.kind = kind;
    f.inverted = inverted;
    VTable t = kind == Factor::Kind::X0 ? f_generator_x0() : f_generator_x1();
    f.table = inverted ? inverse(t) : t;
    return f;
}

// Right rotation at the spine node 1^k: 1^k00z -> 1^k0z, 1^k01z -> 1^k10z, 1^k1z -> 1^k11z.
// As letters (text order): x0^-(k-1) x1^-1 x0^(k-1) for k >= 1, and x0^-1 for k = 0.
std::vector<Factor> rotation_letters(std::size_t k, bool inverted) {
    std::vector<Factor> out;
    if (k == 0) {
        out.push_back(f_letter(Factor::Kind::X0, !inverted));
        return out;
    }
    for (std::size_t i = 0; i + 1 < k; ++i) out.push_back(f_letter(Factor::Kind::X0, true));
    out.push_back(f_letter(Factor::Kind::X1, !inverted));
    for (std::size_t i = 0; i + 1 < k; ++i) out.push_back(f_letter(Factor::Kind::X0, false));
    return out;
}

// Spine indices of the right rotations taking `code` to the vine {0, 10, ..., 1^(n-1)},
// in the order they are applied.
std::vector<std::size_t> rotations_to_vine(std::vector<BitString> code) {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    while (true) {
        std::set<BitString> members(code.begin(), code.end());
        BitString spine = BitString::ones(k);
        if (members.count(spine)) break;
        if (members.count(spine.with(0))) {
            ++k;
            continue;
        }
        const std::string s = spine.str();
        for (auto& w : code) {
            const std::string& t = w.str();
            if (t.compare(0, k, s) != 0) continue;
            std::string tail = t.substr(k);
            if (tail.compare(0, 2, "00") == 0) w = BitString(s + "0" + tail.substr(2));
            else if (tail.compare(0, 2, "01") == 0) w = BitString(s + "10" + tail.substr(2));
            else w = BitString(s + "11" + tail.substr(1));
        }
        out.push_back(k);
    }
    return out;
}

bool cancels(const Factor& a, const Factor& b) {
    return a.kind == b.kind && a.kind != Factor::Kind::Transposition && a.inverted != b.inverted;
}

void push_reduced(std::vector<Factor>& out, Factor f) {
    if (!out.empty() && cancels(out.back(), f)) out.pop_back();
    else out.push_back(std::move(f));
}

Factor transposition_factor(unsigned k, const BitString& w) {
    Factor f;
    f.kind = Factor::Kind::Transposition;
    f.k = k;
    f.w = w;
    f.table = string_transposition(k, w);
    return f;
}

void require_usable(const PrefixCode& p) {
    if (p.empty()) throw Error(ErrorKind::EmptyOrMaximalCode, "the code is empty");
    if (p.is_maximal()) throw Error(ErrorKind::EmptyOrMaximalCode, "the code is maximal");
}

}  // namespace

VTable f_generator_x0() { return rows({{"0", "00"}, {"10", "01"}, {"11", "1"}}); }
VTable f_generator_x1() { return rows({{"0", "0"}, {"10", "100"}, {"110", "101"}, {"111", "11"}}); }

VTable string_transposition(unsigned k, const BitString& w) {
    std::size_t j = 0;
    while (j < w.size() && w[j] == 0) ++j;
    if (j == w.size() || j >= k)
        throw Error(ErrorKind::PrefixViolation, "(0^" + std::to_string(k) + "|" + w.text() + ") needs w = 0^j 1 v with j < k");
    BitString zk = BitString::zeros(k);
    BitString v = w.suffix_from(j + 1);
    std::vector<WordPair> out{{zk, w}, {w, zk}};
    for (std::size_t i = 0; i < k; ++i)
        if (i != j) out.emplace_back(BitString::zeros(i).with(1), BitString::zeros(i).with(1));
    BitString stem = BitString::zeros(j).with(1);
    for (std::size_t len = 0; len < v.size(); ++len) {
        BitString off = stem + v.prefix(len);
        off.push_back(1 - v[len]);
        out.emplace_back(off, off);
    }
    return VTable::validate(std::move(out));
}

PrefixCode balanced_code(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::EmptyInput, "no code of size 0");
    if (n == 1) return PrefixCode::trusted({BitString()});
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    // the deep words are the children of the first deep/2 words of length k-1
    std::size_t deep = 2 * n - (std::size_t{1} << k);
    auto longw = all_words(k);
    auto shortw = all_words(k - 1);
    std::vector<BitString> res(longw.begin(), longw.begin() + deep);
    res.insert(res.end(), shortw.begin() + deep / 2, shortw.end());
    return PrefixCode::validate(std::move(res));
}

std::string Factor::text() const {
    switch (kind) {
        case Kind::X0: return inverted ? "x0^-1" : "x0";
        case Kind::X1: return inverted ? "x1^-1" : "x1";
        case Kind::Transposition: return "(" + BitString::zeros(k).text() + "|" + w.text() + ")";
    }
    return "?";
}

std::size_t FactorWord::transpositions() const {
    return std::count_if(factors.begin(), factors.end(),
                         [](const Factor& f) { return f.kind == Factor::Kind::Transposition; });
}

VTable multiply_out(const FactorWord& f) {
    VTable acc;
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) acc = compose(it->table, acc);
    return acc;
}

FactorWord factor_order_preserving(const VTable& f) {
    VTable e = maximal_extension(f);
    auto dom = e.domain();
    std::vector<BitString> img;
    for (std::size_t i = 0; i < e.size(); ++i) img.push_back(e.image()[i]);
    if (!std::is_sorted(img.begin(), img.end()))
        throw Error(ErrorKind::NotBijective, "the table does not preserve dictionary order");
    // f = rho_img^-1 rho_dom, each rho a product of right rotations reaching the vine
    auto rd = rotations_to_vine(dom);
    auto ri = rotations_to_vine(img);
    FactorWord out;
    for (std::size_t k : ri)
        for (auto& l : rotation_letters(k, true)) push_reduced(out.factors, l);
    for (auto it = rd.rbegin(); it != rd.rend(); ++it)
        for (auto& l : rotation_letters(*it, false)) push_reduced(out.factors, l);
    return out;
}

FactorWord factor_pipeline(const VTable& g) {
    VTable e = maximal_extension(g);
    std::size_t n = e.size();
    PrefixCode s = balanced_code(n);
    const auto& sw = s.members();
    std::vector<BitString> img = e.image();
    std::sort(img.begin(), img.end());

    // alpha: dom -> S in order; beta: S -> img in order; pi permutes S
    std::vector<WordPair> a, b;
    for (std::size_t i = 0; i < n; ++i) {
        a.emplace_back(e.domain()[i], sw[i]);
        b.emplace_back(sw[i], img[i]);
    }
    std::vector<std::size_t> sigma(n);
    for (std::size_t i = 0; i < n; ++i)
        sigma[i] = std::lower_bound(img.begin(), img.end(), e.image()[i]) - img.begin();

    FactorWord out;
    out.perm_size = n;
    FactorWord beta = factor_order_preserving(VTable::trusted(b, Flavor::Group));
    for (auto& f : beta.factors) out.factors.push_back(std::move(f));

    // star transpositions around index 0 (= 0^k), collected in application order
    std::vector<std::size_t> applied;
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start] || sigma[start] == start) {
            seen[start] = true;
            continue;
        }
        std::vector<std::size_t> cyc;
        for (std::size_t c = start; !seen[c]; c = sigma[c]) {
            seen[c] = true;
            cyc.push_back(c);
        }
        if (cyc[0] == 0) {
            // (0 c2 ... cm) = (0 cm) ... (0 c2)
            for (std::size_t i = 1; i < cyc.size(); ++i) applied.push_back(cyc[i]);
        } else {
            // (c1 ... cm) = (0 c1) (0 cm) ... (0 c1)
            for (std::size_t i = 0; i < cyc.size(); ++i) applied.push_back(cyc[i]);
            applied.push_back(cyc[0]);
        }
    }
    unsigned k = static_cast<unsigned>(sw.empty() ? 0 : sw[0].size());
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) out.factors.push_back(transposition_factor(k, sw[*it]));

    FactorWord alpha = factor_order_preserving(VTable::trusted(a, Flavor::Group));
    for (auto& f : alpha.factors) push_reduced(out.factors, std::move(f));
    return out;
}

GenWord to_genword(const FactorWord& f, const FactorRewriter& rewrite) {
    GenWord out;
    for (const auto& fac : f.factors) {
        if (rewrite) {
            if (auto w = rewrite(fac)) {
                out.insert(out.end(), w->begin(), w->end());
                continue;
            }
        }
        if (fac.kind == Factor::Kind::Transposition) out.push_back(Token::gen(fac.text()));
        else out.push_back(Token::gen(fac.kind == Factor::Kind::X0 ? "x0" : "x1", fac.inverted));
    }
    return out;
}

GenSet factor_genset(const FactorWord& f) {
    GenSet g;
    g.add("x0", f_generator_x0());
    g.add("x1", f_generator_x1());
    for (const auto& fac : f.factors)
        if (fac.kind == Factor::Kind::Transposition) g.add(fac.text(), fac.table);
    return g;
}

bool pfix_membership_direct(const VTable& g, const PrefixCode& p) {
    std::size_t L = g.maxlen();
    auto tails = all_words(L);
    for (const auto& q : p)
        for (const auto& z : tails) {
            BitString x = q + z;
            if (!apply(g, x).is(x)) return false;
        }
    return true;
}

FixatorBasis fixator_basis(const PrefixCode& p) {
    require_usable(p);
    FixatorBasis b;
    b.base = p;
    b.complement = complement(p);
    std::size_t k = b.complement.size();
    std::vector<BitString> bw{BitString::zeros(k - 1)};
    for (std::size_t j = 0; j + 2 <= k; ++j) bw.push_back(BitString::zeros(j).with(1));
    b.bridge = PrefixCode::validate(std::move(bw));
    return b;
}

VTable fixator_image(const FixatorBasis& basis, const VTable& phi) {
    const auto& bw = basis.bridge.members();
    const auto& qw = basis.complement.members();
    VTable r = refine_images_into(restrict_to_code(phi, basis.bridge), basis.bridge);
    auto carry = [&](const BitString& x) {
        long i = find_prefix_member(bw, x);
        return qw[i] + x.suffix_from(bw[i].size());
    };
    std::vector<WordPair> out;
    for (const auto& q : basis.base) out.emplace_back(q, q);
    for (std::size_t i = 0; i < r.size(); ++i) out.emplace_back(carry(r.domain()[i]), carry(r.image()[i]));
    return maximal_extension(VTable::validate(std::move(out)));
}

FixatorGenerators fixator_generators(const PrefixCode& p, const GenSet& g, bool with_words) {
    FixatorGenerators out;
    out.basis = fixator_basis(p);
    for (const auto& n : g.names()) {
        FixatorGenerators::Generator gen;
        gen.name = n;
        gen.table = fixator_image(out.basis, g.table(n));
        if (with_words) gen.word = factor_pipeline(gen.table);
        out.generators.push_back(std::move(gen));
    }
    return out;
}

CommutationResult commutation_membership(const VTable& g, const PrefixCode& p, const GenSet& gens) {
    require_usable(p);
    auto fg = fixator_generators(complement(p), gens, false);
    for (const auto& h : fg.generators)
        if (!equals(compose(g, h.table), compose(h.table, g))) return {false, h.name};
    return {true, {}};
}

VTable separating_witness(const BitString& u, const BitString& v) {
    if (u.is_prefix_of(v))
        throw Error(ErrorKind::PrefixHolds, u.text() + " is a prefix of " + v.text() + "; pFix(u) is inside pFix(v)");
    std::vector<WordPair> out;
    if (!v.is_prefix_of(u)) {
        PrefixCode q = complement(PrefixCode::validate({u, v}));
        if (q.empty()) {
            // {u, v} = {0, 1}: swap the two halves of v's cylinder
            out = {{u, u}, {v.with(0), v.with(1)}, {v.with(1), v.with(0)}};
        } else {
            const BitString& q0 = q.members()[0];
            out = {{u, u}, {v, q0}, {q0, v}};
            for (std::size_t i = 1; i < q.size(); ++i) out.emplace_back(q.members()[i], q.members()[i]);
        }
    } else {
        // u = v a b: swap the two children of v's other branch
        int a = u[v.size()];
        BitString o = v.with(1 - a);
        PrefixCode q = complement(PrefixCode::validate({u, o.with(0), o.with(1)}));
        out = {{u, u}, {o.with(0), o.with(1)}, {o.with(1), o.with(0)}};
        for (const auto& z : q) out.emplace_back(z, z);
    }
    return VTable::validate(std::move(out));
}

bool eval_via_commutation(const VTable& g, const BitString& x, const BitString& y, const GenSet& gens) {
    if (x.empty() || y.empty()) return x.empty() && y.empty() && is_identity(maximal_extension(g));
    auto gx = fixator_generators(PrefixCode::trusted({x}), gens, false);
    auto gy = fixator_generators(PrefixCode::trusted({y}), gens, false);
    auto gcx = fixator_generators(complement_single(x), gens, false);
    auto gcy = fixator_generators(complement_single(y), gens, false);
    VTable gi = inverse(g);
    for (const auto& a : gx.generators) {
        VTable c = compose(g, compose(a.table, gi));
        for (const auto& d : gcy.generators)
            if (!equals(compose(d.table, c), compose(c, d.table))) return false;
    }
    for (const auto& b : gy.generators) {
        VTable c = compose(gi, compose(b.table, g));
        for (const auto& d : gcx.generators)
            if (!equals(compose(d.table, c), compose(c, d.table))) return false;
    }
    return true;
}

bool eval_via_commutation(const GenWord& w, const BitString& x, const BitString& y, const GenSet& gens) {
    return eval_via_commutation(word_to_element(w, gens), x, y, gens);
}

}  // namespace thompsonv
