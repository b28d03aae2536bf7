#include "qshor/netlist.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace qshor {

std::string gate_line(const Gate& g) {
    std::ostringstream os;
    switch (g.kind) {
        case GateKind::X: os << "x " << g.ops[0]; break;
        case GateKind::CX: os << "cx " << g.ops[0] << ' ' << g.ops[1]; break;
        case GateKind::CCX:
            os << "ccx " << g.ops[0] << ' ' << g.ops[1] << ' ' << g.ops[2];
            break;
        case GateKind::Swap: os << "swap " << g.ops[0] << ' ' << g.ops[1]; break;
        case GateKind::CSwap:
            os << "cswap " << g.ops[0] << ' ' << g.ops[1] << ' ' << g.ops[2];
            break;
        case GateKind::H: os << "h " << g.ops[0]; break;
        case GateKind::CPhase:
            os << (g.phase_inverted ? "icp " : "cp ") << g.phase_k << ' ' << g.ops[0]
               << ' ' << g.ops[1];
            break;
    }
    return os.str();
}

void write_netlist(std::ostream& os, const Circuit& c) {
    os << "qnet 1 " << c.width() << "\n";
    for (const auto& r : c.registers()) {
        os << "reg " << r.name;
        for (int w : r.wires) os << ' ' << w;
        os << "\n";
    }
    for (const auto& g : c.gates()) os << gate_line(g) << "\n";
}

std::string to_netlist(const Circuit& c) {
    std::ostringstream os;
    write_netlist(os, c);
    return os.str();
}

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw NetlistError("netlist line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(line, "expected integer, got '" + tok + "'");
    }
}

std::vector<std::string> tokenize(const std::string& raw) {
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

}  // namespace

Circuit parse_netlist(std::istream& is) {
    std::string raw;
    int lineno = 0;
    std::optional<Circuit> circ;
    while (std::getline(is, raw)) {
        ++lineno;
        auto toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string& op = toks[0];
        if (!circ) {
            if (op != "qnet") fail(lineno, "expected 'qnet' header, got '" + op + "'");
            if (toks.size() != 3) fail(lineno, "header must be 'qnet 1 <width>'");
            if (toks[1] != "1") fail(lineno, "unsupported version '" + toks[1] + "'");
            int width = parse_int(toks[2], lineno);
            if (width <= 0) fail(lineno, "width must be positive");
            circ.emplace(width);
            continue;
        }
        try {
            if (op == "reg") {
                if (toks.size() < 3) fail(lineno, "reg needs a name and at least one wire");
                std::vector<int> wires;
                for (std::size_t i = 2; i < toks.size(); ++i)
                    wires.push_back(parse_int(toks[i], lineno));
                circ->add_register(toks[1], std::move(wires));
            } else if (op == "x" || op == "h") {
                if (toks.size() != 2) fail(lineno, op + " takes 1 wire");
                int t = parse_int(toks[1], lineno);
                circ->append(op == "x" ? Gate::x(t) : Gate::h(t));
            } else if (op == "cx" || op == "swap") {
                if (toks.size() != 3) fail(lineno, op + " takes 2 wires");
                int a = parse_int(toks[1], lineno), b = parse_int(toks[2], lineno);
                circ->append(op == "cx" ? Gate::cx(a, b) : Gate::swap(a, b));
            } else if (op == "ccx" || op == "cswap") {
                if (toks.size() != 4) fail(lineno, op + " takes 3 wires");
                int a = parse_int(toks[1], lineno), b = parse_int(toks[2], lineno),
                    c = parse_int(toks[3], lineno);
                circ->append(op == "ccx" ? Gate::ccx(a, b, c) : Gate::cswap(a, b, c));
            } else if (op == "cp" || op == "icp") {
                if (toks.size() != 4) fail(lineno, op + " takes k and 2 wires");
                int k = parse_int(toks[1], lineno), c = parse_int(toks[2], lineno),
                    t = parse_int(toks[3], lineno);
                circ->append(Gate::cphase(k, c, t, op == "icp"));
            } else {
                fail(lineno, "unknown directive '" + op + "'");
            }
        } catch (const NetlistError&) {
            throw;
        } catch (const std::exception& e) {
            fail(lineno, e.what());
        }
    }
    if (!circ) throw NetlistError("netlist is empty: missing 'qnet 1 <width>' header");
    return *circ;
}

Circuit parse_netlist(const std::string& text) {
    std::istringstream is(text);
    return parse_netlist(is);
}

}  // namespace qshor
