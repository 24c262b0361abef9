#pragma once

#include <string>
#include <vector>

#include "omega/automaton.hh"

namespace omega {

/// A parsed OAF document with the source lines needed for error reports.
struct OafDocument {
    Automaton automaton;
    int initial_line = 0;
    int acceptance_line = 0;
    /// Line of the first set or pair declaration for each 1-based index.
    std::vector<int> set_lines;
};

/// Parses and validates an OAF document. Grammar errors throw SyntaxError
/// with line and column; validation failures throw ValidationFailed with the
/// line of the offending declaration.
OafDocument parse_oaf_document(const std::string& text);
Automaton parse_oaf(const std::string& text);

/// Canonical text: one declaration per line, sorted set members and
/// transitions.
std::string serialize_oaf(const Automaton& a);

}  // namespace omega
