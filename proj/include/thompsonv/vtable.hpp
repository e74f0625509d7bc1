#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "thompsonv/codes.hpp"

namespace thompsonv {

// Group: both codes maximal (an element of V). Relaxed: non-maximal codes allowed,
// only produced inside construction pipelines.
enum class Flavor { Group, Relaxed };

struct ApplyOutcome {
    enum class Kind { Value, TooShort, NoPrefix };
    Kind kind = Kind::NoPrefix;
    BitString value;

    static ApplyOutcome of(BitString v) { return {Kind::Value, std::move(v)}; }
    static ApplyOutcome too_short() { return {Kind::TooShort, {}}; }
    static ApplyOutcome no_prefix() { return {Kind::NoPrefix, {}}; }
    bool has_value() const { return kind == Kind::Value; }
    bool is(const BitString& y) const { return kind == Kind::Value && value == y; }
    friend bool operator==(const ApplyOutcome&, const ApplyOutcome&) = default;
};

using WordPair = std::pair<BitString, BitString>;

// A finite bijection between prefix codes, sorted by domain word.
class VTable {
public:
    VTable() : dom_{BitString()}, im_{BitString()} {}

    // Checks prefix-freeness of both sides, bijectivity, and maximality for Group.
    static VTable validate(std::vector<WordPair> pairs, Flavor flavor = Flavor::Group);
    static VTable trusted(std::vector<WordPair> pairs, Flavor flavor);
    static VTable identity();

    const std::vector<BitString>& domain() const { return dom_; }
    const std::vector<BitString>& image() const { return im_; }
    WordPair pair(std::size_t i) const { return {dom_[i], im_[i]}; }
    std::vector<WordPair> pairs() const;
    PrefixCode domain_code() const { return PrefixCode::trusted(dom_); }
    PrefixCode image_code() const { return PrefixCode::trusted(im_); }
    std::size_t size() const { return dom_.size(); }
    std::size_t maxlen() const;
    std::size_t domain_maxlen() const;
    Flavor flavor() const { return flavor_; }

    // Index of the pair whose domain word is a prefix of x, or -1.
    long lookup(const BitString& x) const { return find_prefix_member(dom_, x); }

    // Structural equality of the stored tables (not end-equivalence; see equals()).
    friend bool operator==(const VTable& a, const VTable& b) {
        return a.dom_ == b.dom_ && a.im_ == b.im_;
    }

private:
    struct Blank {};
    explicit VTable(Blank) {}
    std::vector<BitString> dom_, im_;
    Flavor flavor_ = Flavor::Group;
};

ApplyOutcome apply(const VTable& f, const BitString& x);

// Merge sibling pairs (p0->q0, p1->q1) into p->q until none remain. A nonzero seed
// shuffles the merge order; the result never depends on it.
VTable maximal_extension(const VTable& f, std::uint64_t order_seed = 0);

// f after g (g applied first), maximally extended.
VTable compose(const VTable& f, const VTable& g);
// Same product without the final extension step.
VTable compose_raw(const VTable& f, const VTable& g);

VTable inverse(const VTable& f);
bool is_identity(const VTable& f);
// End-equivalence: identical maximal extensions.
bool equals(const VTable& f, const VTable& g);

// x -> f(x) for every x of length L. Throws DepthTooSmall if L < maxlen(domain).
std::vector<std::pair<BitString, ApplyOutcome>> action_at_depth(const VTable& f, std::size_t L);

// Does the maximal extension of f send x to y? Decided on the x-cylinder: either a domain
// word prefixes x, or the domain words extending x = u must all satisfy f(xu) = yu and
// cover the cylinder.
bool eval_oracle(const VTable& f, const BitString& x, const BitString& y);

// Refinement of f whose domain lies in B{0,1}*. B must be maximal.
VTable restrict_to_code(const VTable& f, const PrefixCode& b);

// Same map, split further until every image word also lies in B{0,1}*.
VTable refine_images_into(const VTable& f, const PrefixCode& b);

// A table of size 1 + max(|u|,|v|) sending u to v.
VTable transitive_element(const BitString& u, const BitString& v);

// Order-preserving bijection between two codes of equal size (dictionary order).
VTable pair_in_order(const PrefixCode& from, const PrefixCode& to, Flavor flavor = Flavor::Group);

// Table files: header "n=1", optional "flavor=relaxed", then "u -> v" lines.
VTable read_table(std::istream& in);
std::string write_table(const VTable& f);

}  // namespace thompsonv
