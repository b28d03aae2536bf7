#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "qshor/period.hpp"

namespace qshor {

struct Precheck {
    enum class Kind { Ok, TrivialFactor, Reject };
    Kind kind = Kind::Ok;
    std::uint64_t factor = 0;  // set for TrivialFactor
};

/// Even N yields 2; perfect prime powers yield their base; primes are
/// rejected; everything else proceeds to the quantum loop.
Precheck precheck(std::uint64_t N);

/// Deterministic trial-division primality (desk-scale N).
bool is_prime(std::uint64_t N);

/// Uniform draw in [2, N-1]; a draw sharing a factor with N is a free factor
/// (the caller checks gcd).
std::uint64_t choose_base(std::uint64_t N, std::mt19937_64& rng);

/// Classical factor extraction from a verified period: fails on odd r or
/// A^(r/2) = -1 (mod N); otherwise gcd(A^(r/2) +- 1, N). Throws if r is not
/// actually a period of A.
std::optional<std::pair<std::uint64_t, std::uint64_t>> derive_factors(
    std::uint64_t N, std::uint64_t A, std::uint64_t r);

struct FactorAttempt {
    std::uint64_t base = 0;
    bool gcd_shortcut = false;
    std::optional<PeriodRunRecord> run;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
};

struct FactorResult {
    std::uint64_t N = 0;
    std::uint64_t seed = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;  // p <= q, p*q = N
    std::uint64_t base = 0;     // base behind the successful attempt (0 if precheck)
    std::optional<std::uint64_t> period;
    std::vector<FactorAttempt> attempts;
    bool from_precheck = false;
};

/// The full classical outer loop: precheck, then up to `attempts` rounds of
/// base choice, period sampling, and factor derivation. Deterministic per
/// (N, attempts, seed). Returns a failure-state result when N is prime or
/// the budget runs out.
FactorResult factor(std::uint64_t N, int attempts = 25, std::uint64_t seed = 0);

}  // namespace qshor
