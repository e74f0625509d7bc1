#pragma once

#include <functional>
#include <istream>
#include <random>
#include <string>
#include <vector>

#include "thompsonv/eval.hpp"

namespace thompsonv {

enum class Gate { And, Or, Not, Fork, Swap, Id };

const char* gate_name(Gate g);
Gate parse_gate(const std::string& s);  // ParseError
std::size_t gate_in(Gate g);
std::size_t gate_out(Gate g);
BitString gate_eval(Gate g, const BitString& in);

// Strictly layered: layer l reads the whole output of layer l-1, gates taking consecutive
// blocks of wires from left to right.
struct Circuit {
    std::size_t inputs = 0;
    std::vector<std::vector<Gate>> layers;

    std::size_t size() const;             // total gate count
    std::size_t width(std::size_t l) const;  // width(0) = inputs
    std::size_t outputs() const { return width(layers.size()); }
    // Throws WidthMismatch if a layer does not consume exactly the previous width.
    void check() const;
};

// "inputs m", then "layer G1 G2 ...", then "outputs n"; '#' comments.
Circuit read_circuit(std::istream& in);
std::string write_circuit(const Circuit& c);

// Plain layer-by-layer evaluation. Throws WidthMismatch when |x| != inputs.
BitString circuit_eval(const Circuit& c, const BitString& x);

// Phi_f with Phi_f(0x) = 0 f(x) x for every x of length m. The 1-cylinder is split
// (shortest words first) into as many pieces as the complement of the images has
// members, and the two are paired in dictionary order.
VTable simulation_gadget(std::size_t m, const std::function<BitString(const BitString&)>& f);
VTable gate_gadget(Gate g);
// One table per gate type, named by gate_name.
GenSet gadget_genset();

// Right rotation of positions 1..j (the last of them moves to the front): Tau(1) ... Tau(j-1)
// in text order, so Tau(j-1) acts first.
GenWord sigma_shift(std::size_t j);

// 0 Y T -> 0 f(Y) Y T for the layer's function f, T arbitrary.
GenWord compile_layer(const std::vector<Gate>& layer, std::size_t width_in);

// size(w_C) <= c |C|^3. Every block rotation stays inside [2, |Z|] and costs at most
// |Z|(|Z|+1)/2; each gate contributes at most six passes and occurs at most twice, the two
// outer rotations at most 4|C| passes, and |Z| <= 4|C| + 1. That sums to 8|C||Z|(|Z|+1) + 2|C|
// <= 242 |C|^3.
inline constexpr double circuit_size_constant = 242.0;

struct CompileReport {
    GenWord word;
    std::size_t size = 0;                // sum of token sizes
    std::vector<std::size_t> widths;     // width of every layer output, widths[0] = inputs
    std::size_t z_length = 0;            // 1 + n + m + sum of inner widths
};

// Word for Phi_C: 0x -> 0 C(x) x with 0x a long input.
CompileReport compile_circuit(const Circuit& c);

struct CvpInstance {
    GenWord word;
    BitString input;   // 0x
    BitString target;  // 0yx
};

CvpInstance cvp_reduce(const Circuit& c, const BitString& x, const BitString& y);
// C(x) = y through the V evaluation question. Width mismatches answer no.
bool cvp_decide(const Circuit& c, const BitString& x, const BitString& y);

// A strictly layered circuit with at most max_inputs inputs, max_layers layers and
// max_gates gates; widths stay at most max_width.
Circuit random_circuit(std::mt19937_64& rng, std::size_t max_inputs, std::size_t max_layers,
                       std::size_t max_gates, std::size_t max_width = 6);

}  // namespace thompsonv
