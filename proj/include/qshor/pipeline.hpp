#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qshor/circuit.hpp"

namespace qshor {

/// Parameters of a period-finding run: odd N >= 3, base A coprime to N with
/// 1 < A < N. n is N's bit length; registers are w = n+1 wide; the exponent
/// register has exp_bits wires (default n+1).
struct ShorParams {
    std::uint64_t N = 0;
    std::uint64_t A = 0;
    int n = 0;
    int exp_bits = 0;

    static ShorParams make(std::uint64_t N, std::uint64_t A, int exp_bits = 0);
    int w() const { return n + 1; }
};

/// Wire layout of the exponentiation circuit: scratch S, product P (starts at
/// 1), modulus N, constant register C, shared ancilla W, exponent Y.
struct ModexpLayout {
    std::vector<int> S, P, N, C, Y;
    int W = -1;
    int width = 0;
    std::vector<std::uint64_t> stage_constants;  // A^(2^k) mod N per stage
    std::uint64_t final_constant = 0;            // value left in C
};

/// One H per exponent wire.
Circuit build_hadamard_layer(int w);

/// Textbook inverse QFT over w wires (wire 0 least significant):
/// w(w+1)/2 + floor(w/2) gates.
Circuit build_inverse_qft(int w);

/// Same construction emitted onto an arbitrary wire list of a wider circuit.
void emit_inverse_qft(Circuit& c, const std::vector<int>& wires);

/// Modular exponentiation by the classically known base: P <- A^Y mod N for
/// every exponent-register value, via one clean controlled multiply by
/// A^(2^k) mod N per exponent bit. Width is exactly 5n+6 at the default
/// exponent size.
std::pair<Circuit, ModexpLayout> build_modexp_const(const ShorParams& p);

/// 5n + 6.
std::uint64_t qubit_count_classical(std::uint64_t n);

/// The three pipeline sections at full modexp width: Hadamard layer on Y,
/// the exponentiation block, and the inverse QFT on Y.
struct PipelineParts {
    Circuit hadamard;
    Circuit modexp;
    Circuit iqft;
    ModexpLayout layout;
};
PipelineParts build_pipeline(const ShorParams& p);

}  // namespace qshor
