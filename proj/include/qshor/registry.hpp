#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qshor/circuit.hpp"

namespace qshor {

/// Build-time parameters addressed from the CLI. Most blocks only use the
/// width; the clean multiply also takes the classical multiplicand A and
/// modulus N.
struct BlockParams {
    int w = 0;
    std::optional<std::uint64_t> N;
    std::optional<std::uint64_t> A;
};

using ValueMap = std::map<std::string, std::uint64_t>;

struct BlockInfo {
    std::string name;
    int min_width = 1;
    bool needs_constants = false;  // requires BlockParams::A and ::N
    std::vector<std::string> inputs;   // user-settable registers
    std::vector<std::string> outputs;  // registers reported after a run
    std::function<Circuit(const BlockParams&)> build;
    /// Empty string when inputs satisfy the block's contract, else the
    /// violated constraint.
    std::function<std::string(const BlockParams&, const ValueMap&)> validate;
    /// Integer-arithmetic reference for the block's outputs.
    std::function<ValueMap(const BlockParams&, const ValueMap&)> oracle;
    /// Every valid input assignment (for exhaustive verification).
    std::function<std::vector<ValueMap>(const BlockParams&)> enumerate;
};

const std::vector<BlockInfo>& block_registry();
const BlockInfo* find_block(const std::string& name);

/// Validates, packs inputs into a zero state, simulates, and unpacks the
/// block's outputs. Throws std::invalid_argument naming the violated
/// constraint on bad inputs.
ValueMap run_block(const BlockInfo& info, const BlockParams& params, const ValueMap& inputs);

}  // namespace qshor
