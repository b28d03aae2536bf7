#include "qshor/mod_blocks.hpp"

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

std::vector<int> low(const std::vector<int>& r) {
    return {r.begin(), r.end() - 1};
}

void require_width(int w) {
    if (w < 2) throw std::invalid_argument("modular blocks need width >= 2");
}

}  // namespace

Circuit build_mod_reduce(int w) {
    require_width(w);
    Circuit c(2 * w + 1);
    auto A = span(0, w), N = span(w, w);
    c.add_register("A", A);
    c.add_register("N", N);
    c.add_register("flag", {2 * w});
    modcore::emit_reduce(c, A, low(N), 2 * w, N[w - 1]);
    return c;
}

Circuit build_mod_add(int w) {
    require_width(w);
    Circuit c(3 * w + 1);
    auto A = span(0, w), B = span(w, w), N = span(2 * w, w);
    c.add_register("A", A);
    c.add_register("B", B);
    c.add_register("N", N);
    c.add_register("anc", {3 * w});
    modcore::ModAddWires ws;
    ws.sum = A;
    ws.addend_low = low(B);
    ws.mod_low = low(N);
    ws.flag = 3 * w;
    ws.spare = N[w - 1];
    modcore::emit_mod_add(c, ws);
    return c;
}

Circuit build_ctrl_mod_add(int w) {
    require_width(w);
    Circuit c(3 * w + 2);
    auto A = span(0, w), B = span(w, w), N = span(2 * w, w);
    c.add_register("A", A);
    c.add_register("B", B);
    c.add_register("N", N);
    c.add_register("x", {3 * w});
    c.add_register("anc", {3 * w + 1});
    modcore::ModAddWires ws;
    ws.sum = A;
    ws.addend_low = low(B);
    ws.mod_low = low(N);
    ws.flag = 3 * w + 1;
    ws.ctrl = 3 * w;
    ws.spare = N[w - 1];
    modcore::emit_mod_add(c, ws);
    return c;
}

Circuit build_mod_double(int w, std::optional<std::uint64_t> known_value,
                         std::optional<std::uint64_t> known_modulus) {
    require_width(w);
    Circuit c(2 * w + 1);
    auto A = span(0, w), N = span(w, w);
    int anc = 2 * w;
    c.add_register("A", A);
    c.add_register("N", N);
    c.add_register("anc", {anc});
    for (int i = 0; i < w - 1; ++i) c.append(Gate::swap(A[w - 1], A[i]));
    modcore::emit_reduce(c, A, low(N), anc, N[w - 1]);
    if (known_value && known_modulus && 2 * *known_value >= *known_modulus)
        c.append(Gate::x(anc));
    return c;
}

Circuit build_ctrl_mod_double(int w, std::optional<std::uint64_t> known_value,
                              std::optional<std::uint64_t> known_modulus) {
    require_width(w);
    Circuit c(2 * w + 2);
    auto A = span(0, w), N = span(w, w);
    int x = 2 * w, anc = 2 * w + 1;
    c.add_register("A", A);
    c.add_register("N", N);
    c.add_register("x", {x});
    c.add_register("anc", {anc});
    for (int i = 0; i < w - 1; ++i) c.append(Gate::cswap(x, A[w - 1], A[i]));
    // With the control off the value stays below N, so the comparison leaves
    // the ancilla at 0 and the conditional subtraction idles.
    modcore::emit_reduce(c, A, low(N), anc, N[w - 1]);
    if (known_value && known_modulus && 2 * *known_value >= *known_modulus)
        c.append(Gate::cx(x, anc));
    return c;
}

Circuit build_mul_mod_basic(int w, std::optional<std::uint64_t> known_multiplicand,
                            std::optional<std::uint64_t> known_modulus) {
    require_width(w);
    bool classical = known_multiplicand && known_modulus;
    Circuit c(classical ? 4 * w + 1 : 5 * w + 1);
    auto ACC = span(0, w), A = span(w, w), X = span(2 * w, w), N = span(3 * w, w);
    int W = 4 * w;
    c.add_register("ACC", ACC);
    c.add_register("A", A);
    c.add_register("X", X);
    c.add_register("N", N);
    c.add_register("W", {W});
    std::vector<int> anc;
    if (!classical) {
        anc = span(4 * w + 1, w);
        c.add_register("anc", anc);
    }
    std::uint64_t val = classical ? *known_multiplicand % *known_modulus : 0;
    for (int k = 0; k < w; ++k) {
        modcore::ModAddWires ws;
        ws.sum = ACC;
        ws.addend_low = low(A);
        ws.mod_low = low(N);
        ws.flag = W;
        ws.ctrl = X[k];
        ws.spare = A[w - 1];
        modcore::emit_mod_add(c, ws);
        for (int i = 0; i < w - 1; ++i) c.append(Gate::swap(A[w - 1], A[i]));
        int dflag = classical ? W : anc[k];
        modcore::emit_reduce(c, A, low(N), dflag, ACC[w - 1]);
        if (classical) {
            if (2 * val >= *known_modulus) c.append(Gate::x(W));
            val = 2 * val % *known_modulus;
        }
    }
    return c;
}

Circuit build_ctrl_mul_mod_const(int w, std::uint64_t a, std::uint64_t N) {
    require_width(w);
    if (N < 3 || N % 2 == 0)
        throw std::invalid_argument("modulus must be odd and at least 3");
    if (N >> (w - 1))
        throw std::invalid_argument("modulus must fit in " + std::to_string(w - 1) + " bits");
    a %= N;
    if (std::gcd(a, N) != 1)
        throw std::invalid_argument("multiplicand must be coprime to the modulus");
    Circuit c(4 * w + 2);
    auto X = span(0, w), S = span(w, w), Nr = span(2 * w, w), C = span(3 * w, w);
    int y = 4 * w, W = 4 * w + 1;
    c.add_register("X", X);
    c.add_register("S", S);
    c.add_register("N", Nr);
    c.add_register("C", C);
    c.add_register("y", {y});
    c.add_register("W", {W});
    modcore::emit_clean_ctrl_mul(c, X, S, Nr, C, y, W, a, N);
    return c;
}

std::uint64_t unknown_A_qubit_formula(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    return 3 * n * n + 6 * n + 6;
}

}  // namespace qshor
