#pragma once

#include "qshor/circuit.hpp"

namespace qshor {

// Non-modular arithmetic blocks. Each builder returns a Circuit whose named
// registers describe the block's interface:
//   A, B   operand registers (LSB first)
//   x      control wire (controlled variants)
//   cin    carry-in wire, must be 0 at entry, restored to 0
//   cout   carry-out wire (adders built with carry)
//   flag   comparison output wire
//   anc    scratch wires, must be 0 at entry, restored to 0

/// B <- (A + B) mod 2^w; A preserved. With carry, cout <- overflow bit.
Circuit build_adder(int w, bool with_carry = false);

/// B <- (B + A*x) mod 2^w; A and x preserved. With carry, cout <- x * overflow.
Circuit build_ctrl_adder(int w, bool with_carry = false);

/// B <- (B + 1) mod 2^w, constant-folded single-register increment.
Circuit build_increment(int w);

/// B <- (B - 1) mod 2^w, constant-folded (all-ones addend).
Circuit build_decrement(int w);

/// A <- (A - B) mod 2^w; B restored.
Circuit build_subtractor(int w);

/// A <- (A - B*x) mod 2^w; B and x preserved.
Circuit build_ctrl_subtractor(int w);

/// flag <- flag XOR carry(A + B over w bits); A, B restored.
Circuit build_cmb(int w);

/// flag <- (A >= B); A, B restored. Requires flag 0 at entry.
Circuit build_geq(int w);

/// A <- 2*A via the swap cascade; requires the top wire of A to carry 0.
Circuit build_double(int w);

/// A <- A * 2^x via the Fredkin cascade; x preserved.
Circuit build_ctrl_double(int w);

}  // namespace qshor
