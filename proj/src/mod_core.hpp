#pragma once

// Internal emitters for the modular blocks, shared between the standalone
// builders and the exponentiation pipeline. All values handled are < 2^(w-1)
// so register top wires are guaranteed-zero hosts for transient carries.

#include <cstdint>
#include <vector>

#include "cdkm.hpp"
#include "qshor/numeric.hpp"

namespace qshor::modcore {

struct ModAddWires {
    std::vector<int> sum;         // w wires, receives (sum + addend) mod N
    std::vector<int> addend_low;  // w-1 wires, value < N
    std::vector<int> mod_low;     // w-1 wires holding N
    int flag;                     // 0 in / 0 out
    int ctrl = -1;                // -1: uncontrolled
    int spare = -1;               // guaranteed-zero wire for chain carry-ins
};

// flag ^= (sum >= N); then sum -= N if flag. Leaves flag set; the caller
// either keeps it (restricted modulo contract) or clears it.
inline void emit_reduce(Circuit& c, const std::vector<int>& sum,
                        const std::vector<int>& mod_low, int flag, int spare) {
    cdkm::geq_low(c, spare, sum, mod_low, flag);
    cdkm::ctrl_sub_low(c, spare, sum, mod_low, flag);
}

// sum <- (sum + addend * ctrl) mod N with the comparison ancilla cleared by
// the closing "result < addend iff an overflow reduction happened" test.
// With ctrl = 0 every piece is the identity: the addition chain telescopes,
// the comparison reads sum < N, and the clearing carry over sum + addend
// (< 2N < 2^w) is zero.
inline void emit_mod_add(Circuit& c, const ModAddWires& ws) {
    cdkm::add_top(c, ws.spare, ws.sum, ws.addend_low, ws.ctrl);
    cdkm::geq_low(c, ws.spare, ws.sum, ws.mod_low, ws.flag);
    cdkm::ctrl_sub_low(c, ws.spare, ws.sum, ws.mod_low, ws.flag);
    for (int wv : ws.sum)
        c.append(ws.ctrl < 0 ? Gate::x(wv) : Gate::cx(ws.ctrl, wv));
    cdkm::carry_low(c, ws.spare, ws.sum, ws.addend_low, ws.flag);
    for (int wv : ws.sum)
        c.append(ws.ctrl < 0 ? Gate::x(wv) : Gate::cx(ws.ctrl, wv));
}

// Flips the C register's NOT mask from classical value `cur` to `next`.
inline void emit_const_mask(Circuit& c, const std::vector<int>& C, std::uint64_t cur,
                            std::uint64_t next) {
    std::uint64_t diff = cur ^ next;
    for (std::size_t i = 0; i < C.size(); ++i)
        if ((diff >> i) & 1u) c.append(Gate::x(C[i]));
}

// One controlled basic-multiplication pass: for every bit k of X, a modular
// add of the constant register into S doubly controlled on (y, X[k]) via a
// transient Toffoli onto N's zero top wire; between stages the constant
// register steps through the given values by NOT masks. Returns the constant
// register's exit value.
inline std::uint64_t emit_ctrl_mul_chain(Circuit& c, const std::vector<int>& X,
                                         const std::vector<int>& S,
                                         const std::vector<int>& N,
                                         const std::vector<int>& C, int y, int flag,
                                         const std::vector<std::uint64_t>& consts,
                                         std::uint64_t c_entry) {
    int w = static_cast<int>(X.size());
    int t = N[w - 1];
    std::vector<int> n_low(N.begin(), N.end() - 1);
    std::vector<int> c_low(C.begin(), C.end() - 1);
    std::uint64_t cur = c_entry;
    for (int k = 0; k < w; ++k) {
        emit_const_mask(c, C, cur, consts[k]);
        cur = consts[k];
        c.append(Gate::ccx(y, X[k], t));
        ModAddWires ws;
        ws.sum = S;
        ws.addend_low = c_low;
        ws.mod_low = n_low;
        ws.flag = flag;
        ws.ctrl = t;
        ws.spare = C[w - 1];
        emit_mod_add(c, ws);
        c.append(Gate::ccx(y, X[k], t));
    }
    return cur;
}

// Clean controlled multiply by the classical constant a on the X register:
// forward pass accumulates a*X into S, a controlled register swap moves the
// product into place, and the inverted pass (by a^-1 mod N) returns S to 0.
inline void emit_clean_ctrl_mul(Circuit& c, const std::vector<int>& X,
                                const std::vector<int>& S, const std::vector<int>& N,
                                const std::vector<int>& C, int y, int flag,
                                std::uint64_t a, std::uint64_t Nval) {
    int w = static_cast<int>(X.size());
    std::uint64_t a_inv = modinv(a, Nval);
    std::vector<std::uint64_t> consts(w), consts_inv(w);
    for (int k = 0; k < w; ++k) {
        consts[k] = modpow(2, k, Nval) * a % Nval;
        consts_inv[k] = modpow(2, k, Nval) * a_inv % Nval;
    }
    std::uint64_t cur = emit_ctrl_mul_chain(c, X, S, N, C, y, flag, consts, 0);
    emit_const_mask(c, C, cur, consts_inv[w - 1]);
    for (int i = 0; i < w; ++i) c.append(Gate::cswap(y, S[i], X[i]));
    Circuit uncompute(c.width());
    emit_ctrl_mul_chain(uncompute, X, S, N, C, y, flag, consts_inv, 0);
    c.append(uncompute.inverted());
}

}  // namespace qshor::modcore
