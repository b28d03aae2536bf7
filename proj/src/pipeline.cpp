#include "qshor/pipeline.hpp"

#include <numeric>
#include <stdexcept>

#include "mod_core.hpp"
#include "qshor/numeric.hpp"

namespace qshor {

namespace {

std::vector<int> span(int lo, int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

}  // namespace

ShorParams ShorParams::make(std::uint64_t N, std::uint64_t A, int exp_bits) {
    if (N < 3 || N % 2 == 0) throw std::invalid_argument("N must be odd and at least 3");
    if (A < 2 || A >= N) throw std::invalid_argument("base must satisfy 1 < A < N");
    if (std::gcd(A, N) != 1) throw std::invalid_argument("base must be coprime to N");
    ShorParams p;
    p.N = N;
    p.A = A;
    p.n = bit_length(N);
    p.exp_bits = exp_bits > 0 ? exp_bits : p.n + 1;
    return p;
}

Circuit build_hadamard_layer(int w) {
    if (w < 1) throw std::invalid_argument("width must be positive");
    Circuit c(w);
    c.add_register("Y", span(0, w));
    for (int i = 0; i < w; ++i) c.append(Gate::h(i));
    return c;
}

void emit_inverse_qft(Circuit& c, const std::vector<int>& wires) {
    int m = static_cast<int>(wires.size());
    for (int i = 0; i < m / 2; ++i) c.append(Gate::swap(wires[i], wires[m - 1 - i]));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < i; ++j)
            c.append(Gate::cphase(i - j + 1, wires[j], wires[i], /*inverted=*/true));
        c.append(Gate::h(wires[i]));
    }
}

Circuit build_inverse_qft(int w) {
    if (w < 1) throw std::invalid_argument("width must be positive");
    Circuit c(w);
    c.add_register("Y", span(0, w));
    emit_inverse_qft(c, span(0, w));
    return c;
}

std::uint64_t qubit_count_classical(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    return 5 * n + 6;
}

std::pair<Circuit, ModexpLayout> build_modexp_const(const ShorParams& p) {
    int w = p.w(), m = p.exp_bits;
    ModexpLayout lay;
    lay.S = span(0, w);
    lay.P = span(w, w);
    lay.N = span(2 * w, w);
    lay.C = span(3 * w, w);
    lay.W = 4 * w;
    lay.Y = span(4 * w + 1, m);
    lay.width = 4 * w + 1 + m;

    Circuit c(lay.width);
    c.add_register("S", lay.S);
    c.add_register("P", lay.P);
    c.add_register("N", lay.N);
    c.add_register("C", lay.C);
    c.add_register("W", {lay.W});
    c.add_register("Y", lay.Y);

    c.append(Gate::x(lay.P[0]));
    for (int i = 0; i < w; ++i)
        if ((p.N >> i) & 1u) c.append(Gate::x(lay.N[i]));

    for (int k = 0; k < m; ++k) {
        std::uint64_t ak = modpow(p.A, std::uint64_t{1} << k, p.N);
        lay.stage_constants.push_back(ak);
        modcore::emit_clean_ctrl_mul(c, lay.P, lay.S, lay.N, lay.C, lay.Y[k], lay.W, ak,
                                     p.N);
    }

    // The run's ancillary classical output A^(2^(m-1)) mod N is surfaced as
    // the constant register's final contents.
    lay.final_constant = lay.stage_constants.back();
    modcore::emit_const_mask(c, lay.C, 0, lay.final_constant);
    return {std::move(c), lay};
}

PipelineParts build_pipeline(const ShorParams& p) {
    auto [modexp, lay] = build_modexp_const(p);
    Circuit had(lay.width);
    for (int y : lay.Y) had.append(Gate::h(y));
    Circuit iqft(lay.width);
    emit_inverse_qft(iqft, lay.Y);
    return {std::move(had), std::move(modexp), std::move(iqft), lay};
}

}  // namespace qshor
