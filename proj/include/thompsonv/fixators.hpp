#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thompsonv/eval.hpp"

namespace thompsonv {

// ---- factorization g = beta pi alpha -------------------------------------------------

// The two order-preserving generators of F used by the factorization.
// x0 = {0->00, 10->01, 11->1}, x1 = {0->0, 10->100, 110->101, 111->11}.
VTable f_generator_x0();
VTable f_generator_x1();

// (0^k | w): swaps the 0^k and w cylinders, fixes 0^i 1 (i < k, i != j) and the strings
// hanging off the path to w = 0^j 1 v. Requires w nonempty and j < k.
VTable string_transposition(unsigned k, const BitString& w);

// The maximal code of size n inside {0,1}^(k-1) u {0,1}^k, k = ceil(log2 n): the first
// 2n - 2^k words of length k in dictionary order, then the remaining length k-1 words.
// Always contains 0^k (n >= 2); S_1 = {e}.
PrefixCode balanced_code(std::size_t n);

struct Factor {
    enum class Kind { X0, X1, Transposition };
    Kind kind = Kind::X0;
    bool inverted = false;  // X0/X1 only; transpositions are involutions
    unsigned k = 0;
    BitString w;
    VTable table;
    std::string text() const;
};

// Text order, last factor applied first (same convention as GenWord).
struct FactorWord {
    std::vector<Factor> factors;
    std::size_t perm_size = 0;  // n, the table size of the permutation part
    std::size_t transpositions() const;
};

VTable multiply_out(const FactorWord& f);

// Word over x0, x1 for an order-preserving element (throws NotBijective otherwise).
FactorWord factor_order_preserving(const VTable& f);

// beta_g pi_g alpha_g with alpha, beta over x0/x1 and pi as star transpositions (0^k|w).
FactorWord factor_pipeline(const VTable& g);

// Turns a factor word into a GenWord. The default keeps x0, x1 and every transposition as
// named symbols (see factor_genset); a rewriter may expand any factor into a word over
// some other generating set, and returning nullopt keeps the default symbol.
using FactorRewriter = std::function<std::optional<GenWord>(const Factor&)>;
GenWord to_genword(const FactorWord& f, const FactorRewriter& rewrite = {});
// x0, x1 and every transposition occurring in f, under the names to_genword uses.
GenSet factor_genset(const FactorWord& f);

// ---- partial fixators ----------------------------------------------------------------

// g is the identity on P{0,1}*: every pz with |z| = maxlen(g) is fixed.
bool pfix_membership_direct(const VTable& g, const PrefixCode& p);

struct FixatorBasis {
    PrefixCode base;        // P
    PrefixCode complement;  // Q
    PrefixCode bridge;      // B = {0^(k-1)} u {0^j 1 : j <= k-2}, k = |Q|
};

// Throws EmptyOrMaximalCode unless P is nonempty and not maximal.
FixatorBasis fixator_basis(const PrefixCode& p);

// id_P together with phi carried over from B{0,1}* to Q{0,1}* by the order-preserving
// bijection B -> Q. An injective homomorphism of V onto pFix(P).
VTable fixator_image(const FixatorBasis& basis, const VTable& phi);

struct FixatorGenerators {
    FixatorBasis basis;
    struct Generator {
        std::string name;
        VTable table;
        FactorWord word;
    };
    std::vector<Generator> generators;
};

FixatorGenerators fixator_generators(const PrefixCode& p, const GenSet& g, bool with_words = true);

struct CommutationResult {
    bool member = false;
    std::string witness;  // a generator that does not commute with g, if any
};

// g in pFix(P) iff g commutes with the generators of pFix(Q), Q = complement(P).
CommutationResult commutation_membership(const VTable& g, const PrefixCode& p, const GenSet& gens);

// f fixing the u-cylinder and moving part of the v-cylinder. Throws PrefixHolds when u is a
// prefix of v, where pFix(u) is contained in pFix(v) and no such f exists.
VTable separating_witness(const BitString& u, const BitString& v);

// g(x) = y decided by the coset test: for every a in Gamma_x and d in Gamma_(co-y),
// d (g a g^-1) = (g a g^-1) d, and symmetrically with g^-1, Gamma_y and Gamma_(co-x).
// When x or y is empty the question is the word problem: g(e) = y holds iff g is the
// identity and y = e.
bool eval_via_commutation(const VTable& g, const BitString& x, const BitString& y, const GenSet& gens);
bool eval_via_commutation(const GenWord& w, const BitString& x, const BitString& y, const GenSet& gens);

}  // namespace thompsonv
