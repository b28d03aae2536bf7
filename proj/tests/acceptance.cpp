// Acceptance gate: one line per criterion, nonzero exit if any fail.
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qshor/arith_blocks.hpp"
#include "qshor/driver.hpp"
#include "qshor/mod_blocks.hpp"
#include "qshor/numeric.hpp"
#include "qshor/period.hpp"
#include "qshor/pipeline.hpp"
#include "qshor/registry.hpp"
#include "qshor/simulate.hpp"

using namespace qshor;
using u64 = std::uint64_t;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("criterion %2d: %s — %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++failures;
}

// ---- 1: adder gate counts -------------------------------------------------
void adder_counts() {
    bool ok = true;
    for (int w = 1; w <= 8; ++w) {
        ok &= build_adder(w).gates().size() == std::size_t(6 * w);
        ok &= build_adder(w, true).gates().size() == std::size_t(6 * w + 1);
    }
    report(1, ok, "adder emits 6w gates (6w+1 with carry) for w = 1..8");
}

// ---- 2 & 3: exhaustive oracle equivalence via the block registry ----------
bool sweep_block(const std::string& name, const BlockParams& p) {
    const BlockInfo* info = find_block(name);
    if (!info) return false;
    for (const ValueMap& in : info->enumerate(p)) {
        ValueMap got = run_block(*info, p, in);
        if (got != info->oracle(p, in)) return false;
    }
    return true;
}

void arith_equivalence() {
    bool ok = true;
    for (const char* name : {"adder", "ctrl_adder", "inc", "dec", "sub", "ctrl_sub", "geq",
                             "cmb", "double", "ctrl_double"}) {
        const BlockInfo* info = find_block(name);
        for (int w = info->min_width; w <= 4; ++w) ok &= sweep_block(name, {.w = w});
    }
    report(2, ok, "exhaustive integer-oracle equivalence for the ten plain blocks at w <= 4");
}

void mod_equivalence() {
    bool ok = true;
    for (const char* name :
         {"mod_reduce", "mod_add", "ctrl_mod_add", "mod_double", "ctrl_mod_double",
          "mul_mod_basic"})
        ok &= sweep_block(name, {.w = 4});
    for (u64 N = 3; N < 8; N += 2)
        for (u64 a = 1; a < N; ++a)
            if (std::gcd(a, N) == 1)
                ok &= sweep_block("ctrl_mul_mod_const", {.w = 4, .N = N, .A = a});
    // identity on control 0, every state of every controlled block
    for (const Circuit& c : {build_ctrl_mod_add(4), build_ctrl_mod_double(4),
                             build_ctrl_mul_mod_const(4, 3, 5)}) {
        const Register* x = c.find_register("x") ? c.find_register("x") : c.find_register("y");
        const BlockInfo* unused = nullptr;
        (void)unused;
        for (u64 N = 1; N < 8; N += 2) {
            // spot states with the control clear: valid operands, control 0
            BasisState s(c.width());
            s.write(*c.find_register("N"), N);
            s.write(*c.find_register(c.find_register("A") ? "A" : "X"), N - 1);
            BasisState out = apply_classical(c, s);
            ok &= out == apply_classical(Circuit(c.width()), s);
            ok &= out.read(*x) == 0;
        }
    }
    report(3, ok, "exhaustive modular-block equivalence at w = 4 incl. ancilla clearing and off-state identity");
}

// ---- 4: modexp functional correctness -------------------------------------
void modexp_correctness() {
    bool ok = true;
    for (auto [N, A] : std::initializer_list<std::pair<u64, u64>>{
             {15, 7}, {15, 2}, {21, 2}, {33, 5}}) {
        ShorParams p = ShorParams::make(N, A);
        auto [c, lay] = build_modexp_const(p);
        for (u64 y = 0; y < (u64(1) << p.exp_bits); ++y) {
            BasisState s(c.width());
            s.write(lay.Y, y);
            BasisState out = apply_classical(c, s);
            ok &= out.read(lay.P) == modpow(A, y, N);
            ok &= out.read(lay.S) == 0 && out.read(lay.N) == N && !out.get(lay.W);
            ok &= out.read(lay.C) == lay.final_constant && out.read(lay.Y) == y;
        }
    }
    report(4, ok, "modexp computes A^y mod N with clean ancillas for (15,7), (15,2), (21,2), (33,5)");
}

// ---- 5: qubit counts -------------------------------------------------------
void qubit_counts() {
    bool ok = true;
    for (u64 n = 2; n <= 10; ++n) {
        ok &= qubit_count_classical(n) == 5 * n + 6;
        auto [c, lay] = build_modexp_const(ShorParams::make((u64(1) << n) - 1, 2));
        ok &= u64(c.width()) == 5 * n + 6;
        ok &= unknown_A_qubit_formula(n) == 3 * n * n + 6 * n + 6;
    }
    report(5, ok, "modexp width is exactly 5n+6 for n = 2..10; unknown-base formula 3n^2+6n+6");
}

// ---- 6: cubic scaling ------------------------------------------------------
void cubic_scaling() {
    std::vector<double> xs, ys;
    for (int n = 3; n <= 9; ++n) {
        auto [c, lay] = build_modexp_const(ShorParams::make((u64(1) << n) - 1, 2));
        xs.push_back(std::log(double(n)));
        ys.push_back(std::log(double(c.gates().size())));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double k = double(xs.size());
    double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "log-log slope of modexp gate totals vs n over 3..9 is %.4f (window [2.6, 3.4])",
                  slope);
    report(6, slope >= 2.6 && slope <= 3.4, buf);
}

// ---- 7: Fourier stage ------------------------------------------------------
void fourier_stage() {
    bool ok = true;
    std::mt19937_64 rng(2026);
    for (int w = 1; w <= 8; ++w) {
        Circuit c = build_inverse_qft(w);
        std::size_t M = std::size_t(1) << w;
        for (int trial = 0; trial < 50; ++trial) {
            AmplitudeVector in(M);
            double norm = 0;
            for (auto& a : in) {
                a = {double(rng() >> 11) * 0x1.0p-53 - 0.5,
                     double(rng() >> 11) * 0x1.0p-53 - 0.5};
                norm += std::norm(a);
            }
            for (auto& a : in) a /= std::sqrt(norm);
            AmplitudeVector out = apply_amplitudes(c, in);
            double onorm = 0;
            for (std::size_t j = 0; j < M; ++j) {
                std::complex<double> want = 0;
                for (std::size_t y = 0; y < M; ++y)
                    want += std::polar(1.0, -2.0 * std::numbers::pi * double(j) * double(y) /
                                                double(M)) *
                            in[y];
                want /= std::sqrt(double(M));
                ok &= std::abs(out[j] - want) < 1e-9;
                onorm += std::norm(out[j]);
            }
            ok &= std::abs(onorm - 1.0) < 1e-12;
        }
    }
    report(7, ok, "gate-level inverse QFT matches the dense DFT oracle to 1e-9 and preserves norm to 1e-12");
}

// ---- 8: exact measurement distribution ------------------------------------
void exact_distribution() {
    std::vector<double> dist = outcome_distribution(ShorParams::make(15, 7, 5));
    bool ok = dist.size() == 32;
    for (std::size_t j = 0; ok && j < dist.size(); ++j)
        ok &= std::abs(dist[j] - (j % 8 == 0 ? 0.25 : 0.0)) < 1e-9;
    report(8, ok, "N=15, A=7, 5 exponent bits: outcomes {0,8,16,24} with probability 1/4 each");
}

// ---- 9: end-to-end factoring ----------------------------------------------
void end_to_end() {
    bool ok = true;
    for (u64 N : {15u, 21u}) {
        FactorResult r = factor(N, 25, 1);
        ok &= r.factors && r.factors->first * r.factors->second == N && r.factors->first > 1;
        ok &= r.attempts.size() <= 25;
    }
    // Reference single-attempt success rate for N=15 from the exact outcome
    // law: average over the uniformly drawn base of (gcd shortcut) or
    // sum of outcome probabilities whose convergents yield usable periods.
    double reference = 0;
    int bases = 0;
    for (u64 A = 2; A <= 14; ++A, ++bases) {
        if (std::gcd(A, u64(15)) != 1) {
            reference += 1.0;
            continue;
        }
        ShorParams p = ShorParams::make(15, A);
        std::vector<double> dist = outcome_distribution(p);
        double hit = 0;
        for (std::size_t j = 0; j < dist.size(); ++j) {
            if (dist[j] <= 0) continue;
            auto r = continued_fraction(j, dist.size(), 15, A);
            if (r && derive_factors(15, A, *r)) hit += dist[j];
        }
        reference += hit;
    }
    reference /= bases;
    int wins = 0;
    for (u64 seed = 0; seed < 1000; ++seed) {
        FactorResult r = factor(15, 1, seed);
        if (r.factors && r.factors->first * r.factors->second == 15) ++wins;
    }
    double measured = wins / 1000.0;
    ok &= measured >= 0.2 && reference >= 0.2 && std::abs(measured - reference) < 0.05;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "factor 15 and 21 at seed 1; single-attempt rate %.3f vs reference %.3f (floor 0.2)",
                  measured, reference);
    report(9, ok, buf);
}

// ---- 10: reversibility -----------------------------------------------------
bool round_trips(const Circuit& c) {
    Circuit rt = compose(c, c.inverted());
    for (u64 v = 0; v < (u64(1) << c.width()); ++v)
        if (apply_classical(rt, BasisState::from_integer(c.width(), v)).as_integer() != v)
            return false;
    return true;
}

void reversibility() {
    bool ok = true;
    for (int w = 1; w <= 3; ++w) {
        ok &= round_trips(build_adder(w, true));
        ok &= round_trips(build_ctrl_adder(w, true));
        ok &= round_trips(build_increment(w));
        ok &= round_trips(build_decrement(w));
        ok &= round_trips(build_subtractor(w));
        ok &= round_trips(build_ctrl_subtractor(w));
        ok &= round_trips(build_cmb(w));
        ok &= round_trips(build_geq(w));
        if (w >= 2) {
            ok &= round_trips(build_double(w));
            ok &= round_trips(build_ctrl_double(w));
            ok &= round_trips(build_mod_reduce(w));
            ok &= round_trips(build_mod_add(w));
            ok &= round_trips(build_ctrl_mod_add(w));
            ok &= round_trips(build_mod_double(w));
            ok &= round_trips(build_ctrl_mod_double(w));
            ok &= round_trips(build_mul_mod_basic(w));
        }
    }
    ok &= round_trips(build_ctrl_mul_mod_const(3, 1, 3));
    ok &= round_trips(build_ctrl_mul_mod_const(3, 2, 3));
    auto [c, lay] = build_modexp_const(ShorParams::make(15, 7));
    Circuit rt = compose(c, c.inverted());
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        BasisState s(c.width());
        for (int wire = 0; wire < c.width(); ++wire) s.set(wire, rng() & 1);
        ok &= apply_classical(rt, s) == s;
    }
    report(10, ok, "compose(B, invert(B)) is the identity for every block at w <= 3 and for modexp at n = 4");
}

}  // namespace

int main() {
    adder_counts();
    arith_equivalence();
    mod_equivalence();
    modexp_correctness();
    qubit_counts();
    cubic_scaling();
    fourier_stage();
    exact_distribution();
    end_to_end();
    reversibility();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
