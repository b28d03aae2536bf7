#pragma once

#include <map>
#include <string>
#include <vector>

#include "qshor/gate.hpp"

namespace qshor {

/// A named group of wires, listed least-significant first.
struct Register {
    std::string name;
    std::vector<int> wires;
};

struct ResourceReport {
    std::map<std::string, std::size_t> counts;  // gate mnemonic -> count
    std::size_t total = 0;
    std::size_t depth = 0;  // greedy earliest-layer schedule
};

/// A flat gate list on `width` wires with optional named registers.
class Circuit {
  public:
    explicit Circuit(int width);

    int width() const { return width_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<Register>& registers() const { return registers_; }

    /// Validates operand wires: in range and pairwise distinct.
    void append(const Gate& g);
    void append(const Circuit& other);

    /// Registers must be pairwise disjoint; wires must be in range.
    void add_register(const std::string& name, std::vector<int> wires);
    const Register* find_register(const std::string& name) const;

    /// The structural inverse: gates reversed, CPhase signs flipped. All
    /// other gates in the alphabet are self-inverse.
    Circuit inverted() const;

    ResourceReport resources() const;

  private:
    int width_;
    std::vector<Gate> gates_;
    std::vector<Register> registers_;
};

/// Concatenation; both circuits must have equal width. Registers of `a` win
/// name clashes.
Circuit compose(const Circuit& a, const Circuit& b);

}  // namespace qshor
