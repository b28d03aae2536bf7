#pragma once

#include <iosfwd>
#include <string>

#include "qshor/circuit.hpp"

namespace qshor {

/// Thrown on malformed netlist input; message carries the line number and
/// the offending token.
struct NetlistError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Writes the QNET v1 text form. Deterministic: byte-for-byte identical
/// output for identical circuits.
void write_netlist(std::ostream& os, const Circuit& c);
std::string to_netlist(const Circuit& c);

/// Single gate in QNET v1 form, without trailing newline.
std::string gate_line(const Gate& g);

/// Parses QNET v1 text. `#` starts a comment; blank lines are ignored.
Circuit parse_netlist(std::istream& is);
Circuit parse_netlist(const std::string& text);

}  // namespace qshor
