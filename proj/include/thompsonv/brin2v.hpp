#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thompsonv/eval.hpp"

namespace thompsonv {

// An element of the n-fold product of {0,1}*, multiplied coordinatewise.
struct Tuple {
    std::vector<BitString> c;

    Tuple() = default;
    explicit Tuple(std::vector<BitString> coords) : c(std::move(coords)) {}
    static Tuple empty(std::size_t n) { return Tuple(std::vector<BitString>(n)); }
    // (e,...,e) with one bit b appended in coordinate i: the generators A_eps.
    static Tuple unit(std::size_t n, std::size_t i, int b);
    // "(u,v)" with e for the empty word. Throws ParseError.
    static Tuple parse(const std::string& text);

    std::size_t n() const { return c.size(); }
    std::size_t ell() const;        // longest coordinate
    std::size_t min_len() const;    // shortest coordinate
    std::size_t total_len() const;  // sum of coordinate lengths
    std::string text() const;

    // u <=init v: every coordinate of u is a prefix of the matching one of v.
    bool init_le(const Tuple& v) const;
    // v = (*this) x; requires init_le(v).
    Tuple quotient(const Tuple& v) const;

    friend Tuple operator+(const Tuple& a, const Tuple& b);
    friend bool operator==(const Tuple&, const Tuple&) = default;
    friend auto operator<=>(const Tuple& a, const Tuple& b) { return a.c <=> b.c; }
};

using TupleCode = std::vector<Tuple>;

// Least common upper bound under <=init; none when some coordinates are prefix-incomparable.
std::optional<Tuple> join(const Tuple& u, const Tuple& v);

std::size_t maxlen(const TupleCode& s);  // max ell over members, 0 for the empty set
std::string code_text(const TupleCode& s);
TupleCode parse_code(const std::string& text);  // "(0,e) (e,1)", separators optional

struct CodeFlavor {
    bool initial_factor = false;
    bool joinless = false;
};
CodeFlavor code_flavor_checks(const TupleCode& s);

// {c1 v c2}: generates the intersection of the two right ideals. Sorted, no repeats.
TupleCode join_refine(const TupleCode& c1, const TupleCode& c2);

// Members not having another member as an initial factor. Sorted, no repeats.
TupleCode minimal_elements(TupleCode s);
// All strict initial factors of members.
TupleCode strict_initial_factors(const TupleCode& p);
// {s a : s a strict initial factor, a in A_eps, s a joins no member of P}.
TupleCode complement_candidates(const TupleCode& p);
// Minimal elements of complement_candidates. Disjoint from P, but P together with it is
// not always essential: for {(0,e), (e,0)} every candidate joins P and (1,1) is missed.
TupleCode complement_init_literal(const TupleCode& p);
// Complementary initial-factor code: disjoint right ideal, union essential. Built per
// coordinate from the prefixes S_i of the members' i-th coordinates and their one-letter
// exits E_i = {ua not in S_i : u in S_i}: the minimal tuples of (S_1 u E_1) x ... x
// (S_n u E_n) joining no member. The empty code gets {(e,...,e)} with n coordinates.
TupleCode complement_init(const TupleCode& p, std::size_t n = 2);

// Essential iff the complement is empty.
bool is_essential(const TupleCode& p);
// Every tuple with all coordinates of length maxlen(P) lies above a member.
bool is_essential_by_depth(const TupleCode& p);

// Every tuple with all n coordinates of length L. Refused (TooLarge) beyond 12 bits total.
std::vector<Tuple> all_tuples(std::size_t n, std::size_t L);

// ---- tables --------------------------------------------------------------------------

enum class NFlavor {
    Group,      // both sides finite maximal joinless codes
    Extension,  // both sides essential initial-factor codes, a function and injective
    Raw,        // anything with distinct domain members, used for candidate tables
};

class NTable {
public:
    static NTable validate(std::vector<std::pair<Tuple, Tuple>> pairs, NFlavor flavor = NFlavor::Group);
    static NTable raw(std::vector<std::pair<Tuple, Tuple>> pairs);
    static NTable identity(std::size_t n);

    const std::vector<std::pair<Tuple, Tuple>>& pairs() const { return pairs_; }
    TupleCode domain() const;
    TupleCode image() const;
    std::size_t size() const { return pairs_.size(); }
    std::size_t n() const { return n_; }
    std::size_t maxlen() const;         // over both sides
    std::size_t domain_maxlen() const;
    NFlavor flavor() const { return flavor_; }

    friend bool operator==(const NTable& a, const NTable& b) { return a.pairs_ == b.pairs_; }

private:
    NTable() = default;
    std::vector<std::pair<Tuple, Tuple>> pairs_;  // sorted by domain
    std::size_t n_ = 0;
    NFlavor flavor_ = NFlavor::Raw;
};

struct TupleOutcome {
    ApplyOutcome::Kind kind = ApplyOutcome::Kind::NoPrefix;
    Tuple value;
    bool has_value() const { return kind == ApplyOutcome::Kind::Value; }
    bool is(const Tuple& y) const { return has_value() && value == y; }
};

// f(p) x/p for a domain member p <=init x. TooShort when only longer tuples in the ideal
// extend x, NoPrefix when nothing above x is in the domain.
TupleOutcome apply_n(const NTable& f, const Tuple& x);

// The value of the maximal extension of f at x, if x is in its domain. Needs an essential
// domain code: x is settled by the joins of x with the domain members.
std::optional<Tuple> extended_apply_n(const NTable& f, const Tuple& x);

struct TableChecks {
    bool function = false;    // Q1
    bool injective = false;   // Q2
    bool total = false;       // Q3
    bool surjective = false;  // Q4
    bool group = false;       // Q5
    // For Q1 = false: two domain members whose join gets two different values.
    std::optional<std::pair<Tuple, Tuple>> clash;
};

// Q1 and Q2 from the pairwise joins, Q3 and Q4 from complement_init.
TableChecks table_checks(const NTable& f);
// Same answers read off the expansion to depth maxlen (capped at 6 for n = 2).
TableChecks table_checks_by_depth(const NTable& f);

// Unique maximum extension to a right ideal morphism. The table is expanded to depth
// maxlen(domain), then sibling pairs s(a at i) -> t(a at i), a = 0,1, are merged into
// s -> t until nothing changes; the domain code is the set of <=init-minimal merged
// tuples. A nonzero seed shuffles the merge order. Throws NotAFunction / NotInjective.
NTable maximal_extension_n(const NTable& f, std::uint64_t order_seed = 0);

// Merge sibling pairs while both sides stay joinless: keeps the Group flavor.
NTable reduce_n(const NTable& f);
// f after g (g first), by joining imC(g) against domC(f), then reduced.
NTable compose_n(const NTable& f, const NTable& g);
NTable inverse_n(const NTable& f);
bool equals_n(const NTable& f, const NTable& g);  // same action on nA^L, L = max maxlen
bool is_identity_n(const NTable& f);

// gamma x 1: (u, v) -> (gamma(u), v) on the first coordinate.
NTable product_with_identity(const VTable& g, std::size_t n = 2);
// ((e,0) -> (0,e)), ((e,1) -> (1,e)): moves the first symbol of coordinate 2 to the
// front of coordinate 1.
NTable sigma_element();

// Named 2V tables, with inverses derived on insertion.
class GenSet2 {
public:
    void add(const std::string& name, const NTable& t);
    bool has(const std::string& name) const;
    const NTable& table(const std::string& name, bool inverted = false) const;  // UnknownGenerator
    const std::vector<std::string>& names() const { return names_; }
    // Longest coordinate over every domain and image member.
    std::size_t lambda() const;

private:
    std::vector<std::string> names_;
    std::vector<NTable> tables_, inverses_;
};

NTable word_to_element_n(const GenWord& w, const GenSet2& g);
TupleOutcome sequential_apply_n(const GenWord& w, const Tuple& x, const GenSet2& g);
bool eval2v(const GenWord& w, const Tuple& x, const Tuple& y, const GenSet2& g);
InputClass classify_n(const GenWord& w, const Tuple& x, const GenSet2& g);

// Names used by the embedding: every V generator keeps its name (as gamma x 1), plus
// these two.
inline const char* const sigma_name = "sigma";
inline const char* const swap12_name = "swap";

// gamma -> gamma x 1, Tau(i) -> sigma^(i-1) swap sigma^-(i-1).
GenWord embed_v_to_2v(const GenWord& w);
GenSet2 embed_genset(const GenSet& g);

// "n=2" header, then "(u,v) -> (u',v')" lines.
NTable read_ntable(std::istream& in, NFlavor flavor = NFlavor::Group);
std::string write_ntable(const NTable& f);

}  // namespace thompsonv
