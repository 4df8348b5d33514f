// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace dupread {

/// Text form of a (possibly signed) composition: positive terms first in
/// index order joined by '+', then negative terms, unit coefficients elided.
/// Examples: "z1+z3-z0-z2", "2z2", "-z1", "0".
std::string render_entry(const std::vector<int>& entry);

/// "(e1, e2, ...)" over render_entry.
std::string render_entry_vector(const std::vector<std::vector<int>>& v);

/// "(a, b, c)" for plain integer vectors.
std::string render_int_vector(const std::vector<int>& v);

// Minimal CSV shape used by the command-line outputs: comma-separated
// fields, newline-terminated rows, no quoting (fields never contain
// commas or newlines). emit(parse(text)) == text for every emitted file.
std::string csv_emit(const std::vector<std::vector<std::string>>& rows);
std::vector<std::vector<std::string>> csv_parse(const std::string& text);

}  // namespace dupread
