#include "qshor/simulate.hpp"

#include <cmath>
#include <stdexcept>

namespace qshor {

BasisState::BasisState(int width) : width_(width), words_((width + 63) / 64, 0) {
    if (width <= 0) throw std::invalid_argument("state width must be positive");
}

bool BasisState::get(int wire) const {
    if (wire < 0 || wire >= width_) throw std::out_of_range("wire index out of range");
    return (words_[wire / 64] >> (wire % 64)) & 1u;
}

void BasisState::set(int wire, bool v) {
    if (wire < 0 || wire >= width_) throw std::out_of_range("wire index out of range");
    std::uint64_t mask = std::uint64_t{1} << (wire % 64);
    if (v)
        words_[wire / 64] |= mask;
    else
        words_[wire / 64] &= ~mask;
}

void BasisState::flip(int wire) {
    if (wire < 0 || wire >= width_) throw std::out_of_range("wire index out of range");
    words_[wire / 64] ^= std::uint64_t{1} << (wire % 64);
}

std::uint64_t BasisState::read(const std::vector<int>& wires) const {
    if (wires.size() > 64) throw std::invalid_argument("register wider than 64 bits");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < wires.size(); ++i)
        if (get(wires[i])) v |= std::uint64_t{1} << i;
    return v;
}

void BasisState::write(const std::vector<int>& wires, std::uint64_t value) {
    if (wires.size() > 64) throw std::invalid_argument("register wider than 64 bits");
    if (wires.size() < 64 && (value >> wires.size()) != 0)
        throw std::out_of_range("value does not fit register width");
    for (std::size_t i = 0; i < wires.size(); ++i) set(wires[i], (value >> i) & 1u);
}

std::uint64_t BasisState::as_integer() const {
    if (width_ > 64) throw std::invalid_argument("state wider than 64 bits");
    return words_[0];
}

BasisState BasisState::from_integer(int width, std::uint64_t value) {
    BasisState s(width);
    if (width > 64) throw std::invalid_argument("state wider than 64 bits");
    if (width < 64 && (value >> width) != 0)
        throw std::out_of_range("value does not fit state width");
    s.words_[0] = value;
    return s;
}

AmplitudeVector apply_amplitudes(const Circuit& c, AmplitudeVector state) {
    if (c.width() > 24) throw std::invalid_argument("statevector width capped at 24 wires");
    std::size_t dim = std::size_t{1} << c.width();
    if (state.size() != dim)
        throw std::invalid_argument("amplitude vector size does not match circuit width");
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    const double two_pi = 8.0 * std::atan(1.0);
    auto bit = [](int w) { return std::size_t{1} << w; };
    for (const auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::X: {
                std::size_t t = bit(g.ops[0]);
                for (std::size_t i = 0; i < dim; ++i)
                    if (!(i & t)) std::swap(state[i], state[i | t]);
                break;
            }
            case GateKind::CX: {
                std::size_t cb = bit(g.ops[0]), t = bit(g.ops[1]);
                for (std::size_t i = 0; i < dim; ++i)
                    if ((i & cb) && !(i & t)) std::swap(state[i], state[i | t]);
                break;
            }
            case GateKind::CCX: {
                std::size_t c1 = bit(g.ops[0]), c2 = bit(g.ops[1]), t = bit(g.ops[2]);
                for (std::size_t i = 0; i < dim; ++i)
                    if ((i & c1) && (i & c2) && !(i & t)) std::swap(state[i], state[i | t]);
                break;
            }
            case GateKind::Swap: {
                std::size_t a = bit(g.ops[0]), b = bit(g.ops[1]);
                for (std::size_t i = 0; i < dim; ++i)
                    if ((i & a) && !(i & b)) std::swap(state[i], state[(i ^ a) | b]);
                break;
            }
            case GateKind::CSwap: {
                std::size_t cb = bit(g.ops[0]), a = bit(g.ops[1]), b = bit(g.ops[2]);
                for (std::size_t i = 0; i < dim; ++i)
                    if ((i & cb) && (i & a) && !(i & b))
                        std::swap(state[i], state[(i ^ a) | b]);
                break;
            }
            case GateKind::H: {
                std::size_t t = bit(g.ops[0]);
                for (std::size_t i = 0; i < dim; ++i)
                    if (!(i & t)) {
                        auto lo = state[i], hi = state[i | t];
                        state[i] = (lo + hi) * inv_sqrt2;
                        state[i | t] = (lo - hi) * inv_sqrt2;
                    }
                break;
            }
            case GateKind::CPhase: {
                std::size_t cb = bit(g.ops[0]), t = bit(g.ops[1]);
                double angle = two_pi / static_cast<double>(std::uint64_t{1} << g.phase_k);
                if (g.phase_inverted) angle = -angle;
                std::complex<double> phase = std::polar(1.0, angle);
                for (std::size_t i = 0; i < dim; ++i)
                    if ((i & cb) && (i & t)) state[i] *= phase;
                break;
            }
        }
    }
    return state;
}

BasisState apply_classical(const Circuit& c, BasisState state) {
    if (state.width() != c.width())
        throw std::invalid_argument("state width does not match circuit width");
    for (const auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::X:
                state.flip(g.ops[0]);
                break;
            case GateKind::CX:
                if (state.get(g.ops[0])) state.flip(g.ops[1]);
                break;
            case GateKind::CCX:
                if (state.get(g.ops[0]) && state.get(g.ops[1])) state.flip(g.ops[2]);
                break;
            case GateKind::Swap: {
                bool a = state.get(g.ops[0]), b = state.get(g.ops[1]);
                state.set(g.ops[0], b);
                state.set(g.ops[1], a);
                break;
            }
            case GateKind::CSwap:
                if (state.get(g.ops[0])) {
                    bool a = state.get(g.ops[1]), b = state.get(g.ops[2]);
                    state.set(g.ops[1], b);
                    state.set(g.ops[2], a);
                }
                break;
            default:
                throw std::invalid_argument("non-classical gate " + gate_kind_name(g.kind) +
                                            " in classical simulation");
        }
    }
    return state;
}

}  // namespace qshor
