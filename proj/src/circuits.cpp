#include "thompsonv/circuits.hpp"

#include <sstream>

#include "thompsonv/textio.hpp"

namespace thompsonv {

namespace {

const Gate all_gates[] = {Gate::And, Gate::Or, Gate::Not, Gate::Fork, Gate::Swap, Gate::Id};

// Application-order token list; turned into text order once finished.
struct Builder {
    std::vector<Token> applied;

    void tau(std::size_t i) { applied.push_back(Token::tau(static_cast<unsigned>(i))); }
    // Block [a, b] (1-based positions), first symbol moves to the end.
    void rotate_left(std::size_t a, std::size_t b, std::size_t times) {
        if (b <= a) return;
        for (std::size_t t = 0; t < times % (b - a + 1); ++t)
            for (std::size_t i = a; i < b; ++i) tau(i);
    }
    void rotate_right(std::size_t a, std::size_t b, std::size_t times) {
        if (b <= a) return;
        for (std::size_t t = 0; t < times % (b - a + 1); ++t)
            for (std::size_t i = b - 1; i >= a; --i) tau(i);
    }
    void append_applied(const std::vector<Token>& more) { applied.insert(applied.end(), more.begin(), more.end()); }
    GenWord word() const { return GenWord(applied.rbegin(), applied.rend()); }
};

std::vector<Token> application_order(const GenWord& w) { return std::vector<Token>(w.rbegin(), w.rend()); }

}  // namespace

const char* gate_name(Gate g) {
    switch (g) {
        case Gate::And: return "AND";
        case Gate::Or: return "OR";
        case Gate::Not: return "NOT";
        case Gate::Fork: return "FORK";
        case Gate::Swap: return "SWAP";
        case Gate::Id: return "ID";
    }
    return "?";
}

Gate parse_gate(const std::string& s) {
    for (Gate g : all_gates)
        if (s == gate_name(g)) return g;
    throw Error(ErrorKind::ParseError, "unknown gate '" + s + "'");
}

std::size_t gate_in(Gate g) { return (g == Gate::And || g == Gate::Or || g == Gate::Swap) ? 2 : 1; }
std::size_t gate_out(Gate g) { return (g == Gate::Fork || g == Gate::Swap) ? 2 : 1; }

BitString gate_eval(Gate g, const BitString& in) {
    switch (g) {
        case Gate::And: return BitString::bit(in[0] & in[1]);
        case Gate::Or: return BitString::bit(in[0] | in[1]);
        case Gate::Not: return BitString::bit(1 - in[0]);
        case Gate::Fork: return in + in;
        case Gate::Swap: return BitString::bit(in[1]) + BitString::bit(in[0]);
        case Gate::Id: return in;
    }
    return {};
}

std::size_t Circuit::size() const {
    std::size_t s = 0;
    for (const auto& l : layers) s += l.size();
    return s;
}

std::size_t Circuit::width(std::size_t l) const {
    if (l == 0) return inputs;
    std::size_t w = 0;
    for (Gate g : layers[l - 1]) w += gate_out(g);
    return w;
}

void Circuit::check() const {
    if (layers.empty()) throw Error(ErrorKind::WidthMismatch, "a circuit needs at least one layer");
    for (std::size_t l = 0; l < layers.size(); ++l) {
        std::size_t in = 0;
        for (Gate g : layers[l]) in += gate_in(g);
        if (in != width(l))
            throw Error(ErrorKind::WidthMismatch, "layer " + std::to_string(l + 1) + " reads " + std::to_string(in) +
                                                      " wires but " + std::to_string(width(l)) + " arrive");
    }
}

Circuit read_circuit(std::istream& in) {
    Circuit c;
    bool have_inputs = false;
    long declared_out = -1;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "inputs") {
            if (!(ls >> c.inputs)) throw Error(ErrorKind::ParseError, "inputs needs a number");
            have_inputs = true;
        } else if (kw == "layer") {
            std::vector<Gate> layer;
            std::string g;
            while (ls >> g) layer.push_back(parse_gate(g));
            if (layer.empty()) throw Error(ErrorKind::ParseError, "empty layer");
            c.layers.push_back(std::move(layer));
        } else if (kw == "outputs") {
            if (!(ls >> declared_out)) throw Error(ErrorKind::ParseError, "outputs needs a number");
        } else {
            throw Error(ErrorKind::ParseError, "unexpected '" + kw + "' in circuit file");
        }
    }
    if (!have_inputs) throw Error(ErrorKind::ParseError, "missing 'inputs' line");
    c.check();
    if (declared_out >= 0 && static_cast<std::size_t>(declared_out) != c.outputs())
        throw Error(ErrorKind::WidthMismatch, "declared " + std::to_string(declared_out) + " outputs, the layers produce " +
                                                  std::to_string(c.outputs()));
    return c;
}

std::string write_circuit(const Circuit& c) {
    std::string out = "inputs " + std::to_string(c.inputs) + "\n";
    for (const auto& l : c.layers) {
        out += "layer";
        for (Gate g : l) out += std::string(" ") + gate_name(g);
        out += "\n";
    }
    return out + "outputs " + std::to_string(c.outputs()) + "\n";
}

BitString circuit_eval(const Circuit& c, const BitString& x) {
    if (x.size() != c.inputs)
        throw Error(ErrorKind::WidthMismatch, "circuit has " + std::to_string(c.inputs) + " inputs, got " + std::to_string(x.size()));
    BitString cur = x;
    for (const auto& layer : c.layers) {
        BitString next;
        std::size_t at = 0;
        for (Gate g : layer) {
            next += gate_eval(g, cur.suffix_from(at).prefix(gate_in(g)));
            at += gate_in(g);
        }
        cur = std::move(next);
    }
    return cur;
}

VTable simulation_gadget(std::size_t m, const std::function<BitString(const BitString&)>& f) {
    std::vector<WordPair> pairs;
    std::vector<BitString> images;
    for (const auto& x : all_words(m)) {
        BitString img = BitString("0") + f(x) + x;
        pairs.emplace_back(BitString("0") + x, img);
        images.push_back(img);
    }
    PrefixCode rest = complement(PrefixCode::validate(images));
    PrefixCode ones = split_to_size(PrefixCode::trusted({BitString("1")}), rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) pairs.emplace_back(ones.members()[i], rest.members()[i]);
    return VTable::validate(std::move(pairs));
}

VTable gate_gadget(Gate g) {
    return simulation_gadget(gate_in(g), [g](const BitString& x) { return gate_eval(g, x); });
}

GenSet gadget_genset() {
    GenSet s;
    for (Gate g : all_gates) s.add(gate_name(g), gate_gadget(g));
    return s;
}

GenWord sigma_shift(std::size_t j) {
    if (j < 2) throw Error(ErrorKind::ParseError, "the shift needs j >= 2");
    GenWord w;
    for (std::size_t i = 1; i < j; ++i) w.push_back(Token::tau(static_cast<unsigned>(i)));
    return w;
}

GenWord compile_layer(const std::vector<Gate>& layer, std::size_t width_in) {
    // Before gate k the string is 0 O Y T, O the outputs so far (length t), Y the layer
    // input; gate k reads Y[s, s+in).
    Builder b;
    std::size_t t = 0, s = 0;
    for (Gate g : layer) {
        std::size_t in = gate_in(g), out = gate_out(g);
        b.rotate_right(2, 1 + t + s + in, in);                 // 0 I O Ya Yb T
        b.applied.push_back(Token::gen(gate_name(g)));         // 0 G I O Ya Yb T
        b.rotate_left(2 + out, 1 + out + in + t + s, in);      // 0 G O Ya I Yb T
        b.rotate_left(2, 1 + out + t, out);                    // 0 O G Ya I Yb T
        t += out;
        s += in;
    }
    if (s != width_in) throw Error(ErrorKind::WidthMismatch, "layer reads " + std::to_string(s) + " wires, " + std::to_string(width_in) + " arrive");
    return b.word();
}

CompileReport compile_circuit(const Circuit& c) {
    c.check();
    CompileReport r;
    std::size_t L = c.layers.size(), m = c.inputs, n = c.outputs();
    for (std::size_t l = 0; l <= L; ++l) r.widths.push_back(c.width(l));
    r.z_length = 1 + n + m;
    for (std::size_t l = 1; l < L; ++l) r.z_length += r.widths[l];

    Builder b;
    std::vector<Token> inner;  // layers 1 .. L-1 in application order
    for (std::size_t l = 0; l < L; ++l) {
        auto tokens = application_order(compile_layer(c.layers[l], r.widths[l]));
        if (l + 1 < L) inner.insert(inner.end(), tokens.begin(), tokens.end());
        b.append_applied(tokens);
    }
    // 0 y Y^(L-1) ... Y^1 x  ->  0 Y^(L-1) ... Y^1 x y
    b.rotate_left(2, r.z_length, n);
    // undo the inner layers, token by token in reverse
    for (auto it = inner.rbegin(); it != inner.rend(); ++it) b.applied.push_back(it->inverse());
    // 0 x y -> 0 y x
    b.rotate_left(2, 1 + m + n, m);
    r.word = b.word();
    r.size = word_size(r.word);
    return r;
}

CvpInstance cvp_reduce(const Circuit& c, const BitString& x, const BitString& y) {
    return {compile_circuit(c).word, BitString("0") + x, BitString("0") + y + x};
}

bool cvp_decide(const Circuit& c, const BitString& x, const BitString& y) {
    if (x.size() != c.inputs || y.size() != c.outputs()) return false;
    auto inst = cvp_reduce(c, x, y);
    return evaluate_universal(inst.word, inst.input, inst.target, gadget_genset());
}

Circuit random_circuit(std::mt19937_64& rng, std::size_t max_inputs, std::size_t max_layers,
                       std::size_t max_gates, std::size_t max_width) {
    while (true) {
        Circuit c;
        c.inputs = 1 + rng() % max_inputs;
        std::size_t layers = 1 + rng() % max_layers;
        std::size_t w = c.inputs;
        bool ok = true;
        for (std::size_t l = 0; l < layers && ok; ++l) {
            std::vector<Gate> layer;
            std::size_t left = w, next = 0;
            while (left > 0) {
                Gate g = all_gates[rng() % 6];
                if (gate_in(g) > left) continue;
                layer.push_back(g);
                left -= gate_in(g);
                next += gate_out(g);
            }
            c.layers.push_back(std::move(layer));
            w = next;
            ok = w <= max_width;
        }
        if (ok && c.size() <= max_gates) return c;
    }
}

}  // namespace thompsonv
