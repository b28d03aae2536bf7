#pragma once

// Internal gate-emission helpers shared by the arithmetic and modular block
// builders. Everything here appends to an existing Circuit; wire bookkeeping
// (register layout, zero-wire hosting) is the caller's responsibility.
//
// Conventions: a CDKM ripple chain propagates carries along the addend ("a")
// wires; stage i consumes carry from wire c_i (the previous stage's a wire,
// or the chain's carry-in wire for stage 0) and leaves the sum on the "b"
// wires. Controlled chains use the CMJ/CUS gadgets, which collapse to MAJ/UMS
// when the control is 1 and telescope to the identity when it is 0.

#include <vector>

#include "qshor/circuit.hpp"

namespace qshor::cdkm {

inline void maj(Circuit& c, int cw, int bw, int aw) {
    c.append(Gate::cx(aw, bw));
    c.append(Gate::cx(aw, cw));
    c.append(Gate::ccx(cw, bw, aw));
}

inline void ums(Circuit& c, int cw, int bw, int aw) {
    c.append(Gate::ccx(cw, bw, aw));
    c.append(Gate::cx(aw, cw));
    c.append(Gate::cx(cw, bw));
}

// Inverse of maj: restores all three wires without producing a sum.
inline void umj(Circuit& c, int cw, int bw, int aw) {
    c.append(Gate::ccx(cw, bw, aw));
    c.append(Gate::cx(aw, cw));
    c.append(Gate::cx(aw, bw));
}

inline void cmj(Circuit& c, int cw, int bw, int aw, int x) {
    c.append(Gate::ccx(x, aw, bw));
    c.append(Gate::cx(aw, cw));
    c.append(Gate::ccx(cw, bw, aw));
}

inline void cus(Circuit& c, int cw, int bw, int aw, int x) {
    c.append(Gate::ccx(cw, bw, aw));
    c.append(Gate::cx(aw, cw));
    c.append(Gate::ccx(x, cw, bw));
}

// Inverse of cmj (gates of cmj reversed).
inline void cmj_inv(Circuit& c, int cw, int bw, int aw, int x) {
    c.append(Gate::ccx(cw, bw, aw));
    c.append(Gate::cx(aw, cw));
    c.append(Gate::ccx(x, aw, bw));
}

inline void stage_fwd(Circuit& c, int cw, int bw, int aw, int x) {
    if (x < 0)
        maj(c, cw, bw, aw);
    else
        cmj(c, cw, bw, aw, x);
}

inline void stage_bwd(Circuit& c, int cw, int bw, int aw, int x) {
    if (x < 0)
        ums(c, cw, bw, aw);
    else
        cus(c, cw, bw, aw, x);
}

// Full-width ripple chain: b <- (b + a + cin_wire_value) mod 2^w, a and the
// carry-in wire preserved. Optional carry-out wire and optional control x
// (x present makes the whole addition conditional and routes the carry-out
// through a Toffoli so the off branch never writes it).
inline void add_chain(Circuit& c, int cin, const std::vector<int>& a,
                      const std::vector<int>& b, int cout = -1, int x = -1) {
    int w = static_cast<int>(a.size());
    for (int i = 0; i < w; ++i)
        stage_fwd(c, i == 0 ? cin : a[i - 1], b[i], a[i], x);
    if (cout >= 0) {
        if (x < 0)
            c.append(Gate::cx(a[w - 1], cout));
        else
            c.append(Gate::ccx(x, a[w - 1], cout));
    }
    for (int i = w - 1; i >= 0; --i)
        stage_bwd(c, i == 0 ? cin : a[i - 1], b[i], a[i], x);
}

// Ripple chain for a sum register one wire wider than the addend: the addend
// value is known to fit in w-1 bits, so the final carry folds into the sum's
// top wire with a single CNOT (Toffoli when controlled).
// sum has w wires, addend_low has w-1. Computes sum += addend + cin mod 2^w.
inline void add_top(Circuit& c, int cin, const std::vector<int>& sum,
                    const std::vector<int>& addend_low, int x = -1) {
    int w = static_cast<int>(sum.size());
    for (int i = 0; i < w - 1; ++i)
        stage_fwd(c, i == 0 ? cin : addend_low[i - 1], sum[i], addend_low[i], x);
    if (x < 0)
        c.append(Gate::cx(addend_low[w - 2], sum[w - 1]));
    else
        c.append(Gate::ccx(x, addend_low[w - 2], sum[w - 1]));
    for (int i = w - 2; i >= 0; --i)
        stage_bwd(c, i == 0 ? cin : addend_low[i - 1], sum[i], addend_low[i], x);
}

// Comparator core: flag ^= carry(chain + other over w bits); every other wire
// restored (MAJ up, tap the carry, UMJ down). chain and other are full width.
inline void carry_full(Circuit& c, int cin, const std::vector<int>& chain,
                       const std::vector<int>& other, int flag) {
    int w = static_cast<int>(chain.size());
    for (int i = 0; i < w; ++i)
        maj(c, i == 0 ? cin : chain[i - 1], other[i], chain[i]);
    c.append(Gate::cx(chain[w - 1], flag));
    for (int i = w - 1; i >= 0; --i)
        umj(c, i == 0 ? cin : chain[i - 1], other[i], chain[i]);
}

// Comparator core where `other`'s top bit is known 0 and therefore not a
// wire: the final stage's carry is carry_in AND chain_top, tapped with one
// Toffoli. chain has w wires, other_low has w-1.
// flag ^= carry(chain + other_low over w bits).
inline void carry_low(Circuit& c, int cin, const std::vector<int>& chain,
                      const std::vector<int>& other_low, int flag) {
    int w = static_cast<int>(chain.size());
    for (int i = 0; i < w - 1; ++i)
        maj(c, i == 0 ? cin : chain[i - 1], other_low[i], chain[i]);
    c.append(Gate::ccx(chain[w - 2], chain[w - 1], flag));
    for (int i = w - 2; i >= 0; --i)
        umj(c, i == 0 ? cin : chain[i - 1], other_low[i], chain[i]);
}

// flag ^= (first >= second), first full width, second < 2^(w-1) living on
// w-1 wires. Realized as a NOT-conjugated comparison: carry(~first + second)
// is (second > first); the trailing NOT on the flag inverts it.
inline void geq_low(Circuit& c, int cin, const std::vector<int>& first,
                    const std::vector<int>& second_low, int flag) {
    for (int wv : first) c.append(Gate::x(wv));
    carry_low(c, cin, first, second_low, flag);
    for (int wv : first) c.append(Gate::x(wv));
    c.append(Gate::x(flag));
}

// sum -= sub_low * ctrl (mod 2^w), sub_low a w-1 wire value, two's
// complement: sum + ~sub_low + 1 + 2^(w-1), every piece conditioned on ctrl.
// The +1 rides the chain's carry-in wire (preset to ctrl); the +2^(w-1)
// is a single conditional NOT on the sum's top wire.
inline void ctrl_sub_low(Circuit& c, int cin, const std::vector<int>& sum,
                         const std::vector<int>& sub_low, int ctrl) {
    int w = static_cast<int>(sum.size());
    for (int wv : sub_low) c.append(Gate::cx(ctrl, wv));
    c.append(Gate::cx(ctrl, cin));
    for (int i = 0; i < w - 1; ++i)
        cmj(c, i == 0 ? cin : sub_low[i - 1], sum[i], sub_low[i], ctrl);
    c.append(Gate::ccx(ctrl, sub_low[w - 2], sum[w - 1]));
    c.append(Gate::cx(ctrl, sum[w - 1]));
    for (int i = w - 2; i >= 0; --i)
        cus(c, i == 0 ? cin : sub_low[i - 1], sum[i], sub_low[i], ctrl);
    c.append(Gate::cx(ctrl, cin));
    for (int wv : sub_low) c.append(Gate::cx(ctrl, wv));
}

}  // namespace qshor::cdkm
