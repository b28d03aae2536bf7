#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qshor {

/// Elementary gate alphabet. The classical subset is everything except H and
/// CPhase; those two appear only in the Fourier stage.
enum class GateKind {
    X,       // NOT
    CX,      // controlled NOT
    CCX,     // Toffoli
    Swap,    //
    CSwap,   // Fredkin
    H,       //
    CPhase,  // controlled phase 2*pi/2^k, sign given by `inverted`
};

struct Gate {
    GateKind kind;
    // Operand wires; unused slots are -1. Meaning by kind:
    //   X t | CX c t | CCX c1 c2 t | Swap a b | CSwap c a b | H t | CPhase c t
    std::array<int, 3> ops{-1, -1, -1};
    int phase_k = 0;           // CPhase only, k >= 1 (angle 2*pi / 2^k)
    bool phase_inverted = false;

    static Gate x(int t) { return {GateKind::X, {t, -1, -1}}; }
    static Gate cx(int c, int t) { return {GateKind::CX, {c, t, -1}}; }
    static Gate ccx(int c1, int c2, int t) { return {GateKind::CCX, {c1, c2, t}}; }
    static Gate swap(int a, int b) { return {GateKind::Swap, {a, b, -1}}; }
    static Gate cswap(int c, int a, int b) { return {GateKind::CSwap, {c, a, b}}; }
    static Gate h(int t) { return {GateKind::H, {t, -1, -1}}; }
    static Gate cphase(int k, int c, int t, bool inverted = false) {
        Gate g{GateKind::CPhase, {c, t, -1}, k, inverted};
        if (k < 1) throw std::invalid_argument("cphase: k must be >= 1");
        return g;
    }

    int arity() const {
        switch (kind) {
            case GateKind::X:
            case GateKind::H: return 1;
            case GateKind::CX:
            case GateKind::Swap:
            case GateKind::CPhase: return 2;
            default: return 3;
        }
    }

    bool is_classical() const {
        return kind != GateKind::H && kind != GateKind::CPhase;
    }

    bool operator==(const Gate& o) const {
        return kind == o.kind && ops == o.ops && phase_k == o.phase_k &&
               phase_inverted == o.phase_inverted;
    }
};

std::string gate_kind_name(GateKind k);

}  // namespace qshor
