#include "qshor/period.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "qshor/numeric.hpp"

namespace qshor {

namespace {

const double kTwoPi = 8.0 * std::atan(1.0);

// Inverse-DFT matrix action restricted to a sparse input (uniform amplitude
// over `support`): out[j] = (1/sqrt(M*K)) sum_y exp(-2*pi*i*j*y/M).
AmplitudeVector idft_of_support(const std::vector<std::uint64_t>& support,
                                std::uint64_t M) {
    AmplitudeVector out(M, 0.0);
    double norm = 1.0 / std::sqrt(static_cast<double>(M) *
                                  static_cast<double>(support.size()));
    for (std::uint64_t j = 0; j < M; ++j) {
        std::complex<double> acc = 0.0;
        for (std::uint64_t y : support)
            acc += std::polar(1.0, -kTwoPi * static_cast<double>(j % M) *
                                       static_cast<double>(y) /
                                       static_cast<double>(M));
        out[j] = acc * norm;
    }
    return out;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<std::uint64_t> evaluate_modexp_table(const ShorParams& p) {
    auto [circ, lay] = build_modexp_const(p);
    std::uint64_t M = std::uint64_t{1} << p.exp_bits;
    std::vector<std::uint64_t> table(M);
    for (std::uint64_t y = 0; y < M; ++y) {
        BasisState s(circ.width());
        s.write(lay.Y, y);
        s = apply_classical(circ, s);
        table[y] = s.read(lay.P);
    }
    return table;
}

std::optional<std::uint64_t> continued_fraction(
    std::uint64_t outcome, std::uint64_t M, std::uint64_t N, std::uint64_t A,
    std::vector<std::pair<std::uint64_t, std::uint64_t>>* convergents) {
    if (outcome >= M) throw std::invalid_argument("outcome must be below the denominator");
    std::uint64_t num = outcome, den = M;
    std::uint64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;  // (p_{-2},p_{-1}), (q_{-2},q_{-1})
    std::optional<std::uint64_t> best;
    while (den != 0) {
        std::uint64_t a = num / den;
        std::uint64_t h = a * h1 + h0, k = a * k1 + k0;
        h0 = h1;
        h1 = h;
        k0 = k1;
        k1 = k;
        if (convergents) convergents->emplace_back(h, k);
        if (!best && k > 0 && k < N && modpow(A, k, N) == 1) best = k;
        std::uint64_t rem = num % den;
        num = den;
        den = rem;
    }
    return best;
}

std::vector<double> outcome_distribution(const ShorParams& p) {
    auto table = evaluate_modexp_table(p);
    std::uint64_t M = table.size();
    std::vector<double> dist(M, 0.0);
    std::vector<bool> seen(M, false);
    for (std::uint64_t y0 = 0; y0 < M; ++y0) {
        if (seen[y0]) continue;
        std::vector<std::uint64_t> support;
        for (std::uint64_t y = y0; y < M; ++y)
            if (table[y] == table[y0]) {
                support.push_back(y);
                seen[y] = true;
            }
        auto amps = idft_of_support(support, M);
        double weight = static_cast<double>(support.size()) / static_cast<double>(M);
        for (std::uint64_t j = 0; j < M; ++j) dist[j] += weight * std::norm(amps[j]);
    }
    return dist;
}

PeriodRunRecord sample_period(const ShorParams& p, std::uint64_t seed, bool crosscheck) {
    PeriodRunRecord rec;
    rec.seed = seed;
    std::mt19937_64 rng(seed);

    auto table = evaluate_modexp_table(p);
    std::uint64_t M = table.size();

    // Measuring the function register first: drawing y uniformly and keeping
    // f(y) samples v with probability proportional to its preimage size.
    std::uint64_t y_draw = rng() % M;
    rec.sampled_value = table[y_draw];
    std::vector<std::uint64_t> support;
    for (std::uint64_t y = 0; y < M; ++y)
        if (table[y] == rec.sampled_value) support.push_back(y);
    rec.preimage_size = support.size();

    auto amps = idft_of_support(support, M);

    if (crosscheck) {
        AmplitudeVector in(M, 0.0);
        double a0 = 1.0 / std::sqrt(static_cast<double>(support.size()));
        for (std::uint64_t y : support) in[y] = a0;
        auto gate_level = apply_amplitudes(build_inverse_qft(p.exp_bits), std::move(in));
        for (std::uint64_t j = 0; j < M; ++j)
            if (std::abs(gate_level[j] - amps[j]) > 1e-9)
                throw std::runtime_error(
                    "inverse-QFT gate-level result disagrees with the matrix action");
    }

    double u = uniform01(rng), acc = 0.0;
    std::uint64_t outcome = M - 1;
    for (std::uint64_t j = 0; j < M; ++j) {
        acc += std::norm(amps[j]);
        if (u < acc) {
            outcome = j;
            break;
        }
    }
    rec.outcome = outcome;

    if (outcome == 0) {
        rec.verdict = PeriodRunRecord::Verdict::Uninformative;
        return rec;
    }
    rec.period = continued_fraction(outcome, M, p.N, p.A, &rec.convergents);
    rec.verdict = rec.period ? PeriodRunRecord::Verdict::PeriodFound
                             : PeriodRunRecord::Verdict::NoPeriod;
    return rec;
}

}  // namespace qshor
