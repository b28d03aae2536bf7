#include "qshor/arith_blocks.hpp"

#include <numeric>
#include <stdexcept>

#include "cdkm.hpp"

namespace qshor {

namespace {

std::vector<int> span(int lo, int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

void require_width(int w, int min) {
    if (w < min)
        throw std::invalid_argument("block width must be at least " + std::to_string(min));
}

// Constant-folded CDKM chain adding 1 to b. The addend register collapses to
// anc wires that only carry ripple state; the lone set addend bit is realized
// by conjugating anc[0] with NOT, after which the first stage reduces to the
// two-gate form (the chain restores the addend, so the closing NOT returns
// anc[0] to zero).
void emit_inc(Circuit& c, const std::vector<int>& b, const std::vector<int>& anc) {
    int w = static_cast<int>(b.size());
    c.append(Gate::x(anc[0]));
    c.append(Gate::x(b[0]));
    c.append(Gate::cx(b[0], anc[0]));
    for (int i = 1; i < w; ++i) c.append(Gate::ccx(anc[i - 1], b[i], anc[i]));
    for (int i = w - 1; i >= 1; --i) {
        c.append(Gate::ccx(anc[i - 1], b[i], anc[i]));
        c.append(Gate::cx(anc[i - 1], b[i]));
    }
    c.append(Gate::cx(b[0], anc[0]));
    c.append(Gate::x(anc[0]));
}

// Constant-folded chain adding 2^w - 1 (i.e. subtracting 1): the all-ones
// addend turns each stage's leading CNOTs into NOTs.
void emit_dec(Circuit& c, const std::vector<int>& b, const std::vector<int>& anc) {
    int w = static_cast<int>(b.size());
    for (int a : anc) c.append(Gate::x(a));
    c.append(Gate::x(b[0]));
    c.append(Gate::cx(b[0], anc[0]));
    for (int i = 1; i < w; ++i) {
        c.append(Gate::x(b[i]));
        c.append(Gate::x(anc[i - 1]));
        c.append(Gate::ccx(anc[i - 1], b[i], anc[i]));
    }
    for (int i = w - 1; i >= 1; --i) {
        c.append(Gate::ccx(anc[i - 1], b[i], anc[i]));
        c.append(Gate::x(anc[i - 1]));
        c.append(Gate::cx(anc[i - 1], b[i]));
    }
    c.append(Gate::cx(b[0], anc[0]));
    for (int a : anc) c.append(Gate::x(a));
}

// A += x as an ordinary CDKM chain whose addend register is the single
// control wire; higher stages fold to bare ripple Toffolis on anc wires.
void emit_add_bit(Circuit& c, const std::vector<int>& a, int x,
                  const std::vector<int>& anc) {
    int w = static_cast<int>(a.size());
    auto carrier = [&](int i) { return i == 0 ? x : anc[i]; };
    c.append(Gate::cx(x, a[0]));
    c.append(Gate::cx(x, anc[0]));
    c.append(Gate::ccx(anc[0], a[0], x));
    for (int i = 1; i < w; ++i) c.append(Gate::ccx(carrier(i - 1), a[i], anc[i]));
    for (int i = w - 1; i >= 1; --i) {
        c.append(Gate::ccx(carrier(i - 1), a[i], anc[i]));
        c.append(Gate::cx(carrier(i - 1), a[i]));
    }
    c.append(Gate::ccx(anc[0], a[0], x));
    c.append(Gate::cx(x, anc[0]));
    c.append(Gate::cx(anc[0], a[0]));
}

}  // namespace

Circuit build_adder(int w, bool with_carry) {
    require_width(w, 1);
    Circuit c(2 * w + 1 + (with_carry ? 1 : 0));
    auto A = span(0, w), B = span(w, w);
    c.add_register("A", A);
    c.add_register("B", B);
    c.add_register("cin", {2 * w});
    if (with_carry) c.add_register("cout", {2 * w + 1});
    cdkm::add_chain(c, 2 * w, A, B, with_carry ? 2 * w + 1 : -1);
    return c;
}

Circuit build_ctrl_adder(int w, bool with_carry) {
    require_width(w, 1);
    Circuit c(2 * w + 2 + (with_carry ? 1 : 0));
    auto A = span(0, w), B = span(w, w);
    c.add_register("A", A);
    c.add_register("B", B);
    c.add_register("x", {2 * w});
    c.add_register("cin", {2 * w + 1});
    if (with_carry) c.add_register("cout", {2 * w + 2});
    cdkm::add_chain(c, 2 * w + 1, A, B, with_carry ? 2 * w + 2 : -1, 2 * w);
    return c;
}

Circuit build_increment(int w) {
    require_width(w, 1);
    Circuit c(2 * w);
    auto B = span(0, w), anc = span(w, w);
    c.add_register("B", B);
    c.add_register("anc", anc);
    emit_inc(c, B, anc);
    return c;
}

Circuit build_decrement(int w) {
    require_width(w, 1);
    Circuit c(2 * w);
    auto B = span(0, w), anc = span(w, w);
    c.add_register("B", B);
    c.add_register("anc", anc);
    emit_dec(c, B, anc);
    return c;
}

Circuit build_subtractor(int w) {
    require_width(w, 1);
    Circuit c(3 * w);
    auto A = span(0, w), B = span(w, w), anc = span(2 * w, w);
    c.add_register("A", A);
    c.add_register("B", B);
    c.add_register("anc", anc);
    for (int b : B) c.append(Gate::x(b));
    emit_inc(c, B, anc);
    cdkm::add_chain(c, anc[0], B, A);
    emit_dec(c, B, anc);
    for (int b : B) c.append(Gate::x(b));
    return c;
}

Circuit build_ctrl_subtractor(int w) {
    require_width(w, 1);
    Circuit c(3 * w + 1);
    auto A = span(0, w), B = span(w, w), anc = span(2 * w + 1, w);
    int x = 2 * w;
    c.add_register("A", A);
    c.add_register("B", B);
    c.add_register("x", {x});
    c.add_register("anc", anc);
    for (int b : B) c.append(Gate::cx(x, b));
    emit_add_bit(c, A, x, anc);
    cdkm::add_chain(c, anc[0], B, A, -1, x);
    for (int b : B) c.append(Gate::cx(x, b));
    return c;
}

Circuit build_cmb(int w) {
    require_width(w, 1);
    Circuit c(2 * w + 2);
    auto A = span(0, w), B = span(w, w);
    c.add_register("A", A);
    c.add_register("B", B);
    c.add_register("cin", {2 * w});
    c.add_register("flag", {2 * w + 1});
    cdkm::carry_full(c, 2 * w, A, B, 2 * w + 1);
    return c;
}

Circuit build_geq(int w) {
    require_width(w, 1);
    Circuit c(2 * w + 2);
    auto A = span(0, w), B = span(w, w);
    int cin = 2 * w, flag = 2 * w + 1;
    c.add_register("A", A);
    c.add_register("B", B);
    c.add_register("cin", {cin});
    c.add_register("flag", {flag});
    for (int a : A) c.append(Gate::x(a));
    cdkm::carry_full(c, cin, A, B, flag);
    for (int a : A) c.append(Gate::x(a));
    c.append(Gate::x(flag));
    return c;
}

Circuit build_double(int w) {
    require_width(w, 2);
    Circuit c(w);
    auto A = span(0, w);
    c.add_register("A", A);
    for (int i = 0; i < w - 1; ++i) c.append(Gate::swap(A[w - 1], A[i]));
    return c;
}

Circuit build_ctrl_double(int w) {
    require_width(w, 2);
    Circuit c(w + 1);
    auto A = span(0, w);
    c.add_register("A", A);
    c.add_register("x", {w});
    for (int i = 0; i < w - 1; ++i) c.append(Gate::cswap(w, A[w - 1], A[i]));
    return c;
}

}  // namespace qshor
