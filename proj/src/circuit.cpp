#include "qshor/circuit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qshor {

std::string gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::X: return "x";
        case GateKind::CX: return "cx";
        case GateKind::CCX: return "ccx";
        case GateKind::Swap: return "swap";
        case GateKind::CSwap: return "cswap";
        case GateKind::H: return "h";
        case GateKind::CPhase: return "cp";
    }
    return "?";
}

Circuit::Circuit(int width) : width_(width) {
    if (width <= 0) throw std::invalid_argument("circuit width must be positive");
}

void Circuit::append(const Gate& g) {
    int n = g.arity();
    for (int i = 0; i < n; ++i) {
        int w = g.ops[i];
        if (w < 0 || w >= width_)
            throw std::out_of_range("gate wire " + std::to_string(w) +
                                    " outside circuit of width " + std::to_string(width_));
        for (int j = i + 1; j < n; ++j)
            if (g.ops[j] == w)
                throw std::invalid_argument("gate operands must be distinct (wire " +
                                            std::to_string(w) + " repeated)");
    }
    gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
    if (other.width_ != width_)
        throw std::invalid_argument("appending circuit of mismatched width");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void Circuit::add_register(const std::string& name, std::vector<int> wires) {
    if (name.empty()) throw std::invalid_argument("register name must be non-empty");
    std::set<int> mine(wires.begin(), wires.end());
    if (mine.size() != wires.size())
        throw std::invalid_argument("register " + name + " repeats a wire");
    for (int w : wires)
        if (w < 0 || w >= width_)
            throw std::out_of_range("register " + name + " wire out of range");
    for (const auto& r : registers_) {
        if (r.name == name)
            throw std::invalid_argument("duplicate register name " + name);
        for (int w : r.wires)
            if (mine.count(w))
                throw std::invalid_argument("register " + name + " overlaps " + r.name);
    }
    registers_.push_back({name, std::move(wires)});
}

const Register* Circuit::find_register(const std::string& name) const {
    for (const auto& r : registers_)
        if (r.name == name) return &r;
    return nullptr;
}

Circuit Circuit::inverted() const {
    Circuit out(width_);
    out.registers_ = registers_;
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::CPhase) g.phase_inverted = !g.phase_inverted;
        out.gates_.push_back(g);
    }
    return out;
}

ResourceReport Circuit::resources() const {
    ResourceReport rep;
    std::vector<std::size_t> layer(width_, 0);  // next free layer per wire
    for (const auto& g : gates_) {
        std::string name = gate_kind_name(g.kind);
        if (g.kind == GateKind::CPhase && g.phase_inverted) name = "icp";
        ++rep.counts[name];
        std::size_t at = 0;
        int n = g.arity();
        for (int i = 0; i < n; ++i) at = std::max(at, layer[g.ops[i]]);
        for (int i = 0; i < n; ++i) layer[g.ops[i]] = at + 1;
        rep.depth = std::max(rep.depth, at + 1);
    }
    rep.total = gates_.size();
    return rep;
}

Circuit compose(const Circuit& a, const Circuit& b) {
    if (a.width() != b.width())
        throw std::invalid_argument("compose: circuit widths differ");
    Circuit out(a.width());
    for (const auto& r : a.registers()) out.add_register(r.name, r.wires);
    for (const auto& r : b.registers())
        if (!out.find_register(r.name)) {
            bool clash = false;
            for (const auto& mine : out.registers())
                for (int w : r.wires)
                    if (std::find(mine.wires.begin(), mine.wires.end(), w) != mine.wires.end())
                        clash = true;
            if (!clash) out.add_register(r.name, r.wires);
        }
    out.append(a);
    out.append(b);
    return out;
}

}  // namespace qshor
