#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qshor/pipeline.hpp"
#include "qshor/simulate.hpp"

namespace qshor {

/// f(y) = A^y mod N for every exponent-register value, each entry obtained by
/// bit-level simulation of the synthesized exponentiation circuit.
std::vector<std::uint64_t> evaluate_modexp_table(const ShorParams& p);

/// Convergent expansion of outcome/M; returns the smallest convergent
/// denominator r < N with A^r = 1 (mod N), or nothing. The convergents
/// (numerator, denominator) are appended to `convergents` when given.
std::optional<std::uint64_t> continued_fraction(
    std::uint64_t outcome, std::uint64_t M, std::uint64_t N, std::uint64_t A,
    std::vector<std::pair<std::uint64_t, std::uint64_t>>* convergents = nullptr);

struct PeriodRunRecord {
    enum class Verdict { PeriodFound, Uninformative, NoPeriod };

    std::uint64_t seed = 0;
    std::uint64_t sampled_value = 0;  // measured function value v
    std::size_t preimage_size = 0;    // |{y : f(y) = v}|
    std::uint64_t outcome = 0;        // measured exponent-register value
    std::vector<std::pair<std::uint64_t, std::uint64_t>> convergents;
    std::optional<std::uint64_t> period;
    Verdict verdict = Verdict::NoPeriod;
};

/// One full period-finding run: sample a function value, transform the
/// uniform superposition over its preimage with the inverse QFT, sample an
/// outcome, and extract a period candidate. Deterministic per seed. With
/// crosscheck on, the dense transform is validated against gate-level
/// simulation of the synthesized inverse-QFT circuit to 1e-9.
PeriodRunRecord sample_period(const ShorParams& p, std::uint64_t seed,
                              bool crosscheck = true);

/// Exact outcome distribution over [0, 2^exp_bits): the analytic law the
/// sampler draws from.
std::vector<double> outcome_distribution(const ShorParams& p);

}  // namespace qshor
