#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qshor/circuit.hpp"

namespace qshor {

/// A concrete bit assignment to every wire of a fixed-width circuit.
class BasisState {
  public:
    explicit BasisState(int width);

    int width() const { return width_; }

    bool get(int wire) const;
    void set(int wire, bool v);
    void flip(int wire);

    /// LSB-first packing over an arbitrary wire list.
    std::uint64_t read(const std::vector<int>& wires) const;
    void write(const std::vector<int>& wires, std::uint64_t value);

    std::uint64_t read(const Register& r) const { return read(r.wires); }
    void write(const Register& r, std::uint64_t v) { write(r.wires, v); }

    /// Whole-state value, wire 0 least significant. Requires width <= 64.
    std::uint64_t as_integer() const;
    static BasisState from_integer(int width, std::uint64_t value);

    bool operator==(const BasisState& o) const {
        return width_ == o.width_ && words_ == o.words_;
    }

  private:
    int width_;
    std::vector<std::uint64_t> words_;
};

/// Exact evaluation of a classical-reversible circuit. Throws on H or CPHASE.
BasisState apply_classical(const Circuit& c, BasisState state);

using AmplitudeVector = std::vector<std::complex<double>>;

/// Dense statevector evaluation over all 2^width basis states (wire 0 is the
/// least significant index bit). Supports the full gate alphabet; the CPHASE
/// angle is 2*pi/2^k, negated by the inverted flag.
AmplitudeVector apply_amplitudes(const Circuit& c, AmplitudeVector state);

}  // namespace qshor
