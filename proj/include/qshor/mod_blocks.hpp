#pragma once

#include <cstdint>
#include <optional>

#include "qshor/circuit.hpp"

namespace qshor {

// Modular arithmetic blocks over width-w registers. All moduli handled here
// fit in w-1 bits (the registers' top wires carry 0 for in-range values),
// which lets the builders ripple transient carries through those top wires
// instead of dedicated ancillas.
//
// Register vocabulary: A (target), B (addend), N (modulus), X (multiplier /
// quantum value), ACC (product accumulator), S (scratch), C (constant),
// x / y (controls), anc / flag (comparison ancillas), W (shared ancilla).

/// A <- A mod N for 0 <= A < 2N; flag <- (A >= N); N restored.
Circuit build_mod_reduce(int w);

/// A <- (A + B) mod N for A,B < N < 2^(w-1); B, N restored; anc 0 in/out.
Circuit build_mod_add(int w);

/// A <- (A + B*x) mod N; identity when x = 0.
Circuit build_ctrl_mod_add(int w);

/// A <- 2A mod N for A < N. Without a known input value the ancilla is left
/// holding (2A >= N); with one, a build-time NOT clears it.
Circuit build_mod_double(int w, std::optional<std::uint64_t> known_value = std::nullopt,
                         std::optional<std::uint64_t> known_modulus = std::nullopt);

/// A <- A * 2^x mod N; with a known input value the ancilla clear becomes a
/// CNOT from the control.
Circuit build_ctrl_mod_double(int w, std::optional<std::uint64_t> known_value = std::nullopt,
                              std::optional<std::uint64_t> known_modulus = std::nullopt);

/// ACC <- (ACC + A*X) mod N; A <- 2^w * A mod N; X, N restored. When the
/// multiplicand value is classically known the per-stage doubling ancilla is
/// cleared in place and one shared wire W suffices; otherwise each stage
/// leaves its comparison bit on a fresh wire (register "anc", not cleared).
Circuit build_mul_mod_basic(int w, std::optional<std::uint64_t> known_multiplicand = std::nullopt,
                            std::optional<std::uint64_t> known_modulus = std::nullopt);

/// Clean controlled multiply by the classical constant a: X <- a*X mod N when
/// y = 1, X unchanged when y = 0; scratch S, constant register C and ancilla
/// W all return to 0. Requires gcd(a, N) = 1 and odd N.
Circuit build_ctrl_mul_mod_const(int w, std::uint64_t a, std::uint64_t N);

/// Qubit count for the unknown-base modular exponentiation (reported only;
/// no circuit is built for that case).
std::uint64_t unknown_A_qubit_formula(std::uint64_t n);

}  // namespace qshor
