#include "qshor/driver.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qshor/numeric.hpp"

namespace qshor {

bool is_prime(std::uint64_t N) {
    if (N < 2) return false;
    for (std::uint64_t d = 2; d * d <= N; ++d)
        if (N % d == 0) return false;
    return true;
}

namespace {

// Largest integer r with r^k <= N.
std::uint64_t iroot(std::uint64_t N, unsigned k) {
    std::uint64_t r = static_cast<std::uint64_t>(
        std::floor(std::pow(static_cast<double>(N), 1.0 / k)));
    auto pow_fits = [&](std::uint64_t b) {
        std::uint64_t v = 1;
        for (unsigned i = 0; i < k; ++i) {
            if (b != 0 && v > N / b) return false;
            v *= b;
        }
        return v <= N;
    };
    while (r > 1 && !pow_fits(r)) --r;
    while (pow_fits(r + 1)) ++r;
    return r;
}

}  // namespace

Precheck precheck(std::uint64_t N) {
    if (N < 2) throw std::invalid_argument("N must be at least 2");
    if (N % 2 == 0) return {Precheck::Kind::TrivialFactor, 2};
    if (is_prime(N)) return {Precheck::Kind::Reject, 0};
    for (unsigned k = 2; (std::uint64_t{1} << k) <= N; ++k) {
        std::uint64_t r = iroot(N, k);
        if (r < 2) break;
        std::uint64_t v = 1;
        for (unsigned i = 0; i < k; ++i) v *= r;
        if (v == N && is_prime(r)) return {Precheck::Kind::TrivialFactor, r};
    }
    return {Precheck::Kind::Ok, 0};
}

std::uint64_t choose_base(std::uint64_t N, std::mt19937_64& rng) {
    if (N < 4) throw std::invalid_argument("base choice needs N >= 4");
    return 2 + rng() % (N - 2);
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> derive_factors(
    std::uint64_t N, std::uint64_t A, std::uint64_t r) {
    if (r == 0 || modpow(A, r, N) != 1)
        throw std::invalid_argument("r is not a period of the base modulo N");
    if (r % 2 != 0) return std::nullopt;
    std::uint64_t x = modpow(A, r / 2, N);
    if (x == N - 1) return std::nullopt;
    for (std::uint64_t g : {std::gcd(x - 1, N), std::gcd(x + 1, N)}) {
        if (g > 1 && g < N) {
            std::uint64_t p = g, q = N / g;
            if (p > q) std::swap(p, q);
            return std::make_pair(p, q);
        }
    }
    return std::nullopt;
}

FactorResult factor(std::uint64_t N, int attempts, std::uint64_t seed) {
    FactorResult res;
    res.N = N;
    res.seed = seed;

    Precheck pre = precheck(N);
    if (pre.kind == Precheck::Kind::Reject) return res;
    if (pre.kind == Precheck::Kind::TrivialFactor) {
        std::uint64_t p = pre.factor, q = N / pre.factor;
        if (p > q) std::swap(p, q);
        res.factors = {p, q};
        res.from_precheck = true;
        return res;
    }

    std::mt19937_64 rng(seed);
    for (int i = 0; i < attempts; ++i) {
        FactorAttempt att;
        att.base = choose_base(N, rng);
        std::uint64_t g = std::gcd(att.base, N);
        if (g > 1) {
            att.gcd_shortcut = true;
            std::uint64_t p = g, q = N / g;
            if (p > q) std::swap(p, q);
            att.factors = {p, q};
        } else {
            auto params = ShorParams::make(N, att.base);
            att.run = sample_period(params, rng());
            if (att.run->period)
                att.factors = derive_factors(N, att.base, *att.run->period);
        }
        res.attempts.push_back(att);
        if (att.factors) {
            res.factors = att.factors;
            res.base = att.base;
            if (att.run) res.period = att.run->period;
            break;
        }
    }
    return res;
}

}  // namespace qshor
